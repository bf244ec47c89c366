//! Necessary conditions for an intersection array to belong to a graph.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::diameter3::kpy_bounds;
use crate::spectrum::{adjacency_spectrum, MULT_TOL};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NonIntegralValency {
        index: usize,
    },
    NonIntegralMultiplicity {
        theta: String,
        value: f64,
    },
    /// `a_1 k` counts twice the triangles through a vertex, so it is even.
    A1kOdd {
        a1: u64,
        k: u64,
    },
    /// The diameter-3 eigenvalue bounds fail.
    EigenvalueBounds {
        detail: String,
    },
    /// The spectrum could not be computed.
    Spectrum {
        detail: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonIntegralValency { index } => write!(f, "k_{index} not integral"),
            Violation::NonIntegralMultiplicity { theta, value } => {
                write!(f, "multiplicity of {theta} is {value}, not a positive integer")
            }
            Violation::A1kOdd { a1, k } => write!(f, "a1k odd (a_1 = {a1}, k = {k})"),
            Violation::EigenvalueBounds { detail } => write!(f, "eigenvalue bounds fail: {detail}"),
            Violation::Spectrum { detail } => write!(f, "spectrum unavailable: {detail}"),
        }
    }
}

/// Every violated condition; empty when all pass.
pub fn feasibility_check(ia: &IntersectionArray) -> Vec<Violation> {
    let mut out = Vec::new();
    let d = ia.diameter();
    let kseq = ia.derived().kseq;
    for i in 1..=d {
        if kseq[i - 1] as u128 * ia.b(i - 1) as u128 != kseq[i] as u128 * ia.c(i) as u128 {
            out.push(Violation::NonIntegralValency { index: i });
        }
    }
    match adjacency_spectrum(ia) {
        Ok(spec) => {
            for e in &spec.entries {
                let r = e.mult.round();
                if r < 1.0 || (e.mult - r).abs() > MULT_TOL {
                    out.push(Violation::NonIntegralMultiplicity { theta: e.theta.to_string(), value: e.mult });
                }
            }
        }
        Err(err) => out.push(Violation::Spectrum { detail: err.to_string() }),
    }
    let (a1, k) = (ia.a(1), ia.k());
    if (a1 as u128 * k as u128) % 2 == 1 {
        out.push(Violation::A1kOdd { a1, k });
    }
    if d == 3 {
        match kpy_bounds(ia) {
            Ok(b) if !b.all() => out.push(Violation::EigenvalueBounds { detail: format!("{b:?}") }),
            Ok(_) => {}
            Err(err) => out.push(Violation::Spectrum { detail: err.to_string() }),
        }
    }
    out
}
