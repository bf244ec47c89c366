//! Parametric families of diameter-3 arrays and the finite enumeration of
//! antipodal covers with smallest eigenvalue `-r-1`.
//!
//! # The enumerator's array shape
//!
//! An antipodal `r`-cover of diameter 3 has `b_1 = (r-1) c_2`, `b_2 = 1`,
//! `c_3 = k`, `theta_2 = -1`, and its other two non-trivial eigenvalues are
//! the roots of `x^2 + (c_2 - a_1) x - k`, so
//! `theta_1 + theta_3 = a_1 - c_2` and `theta_1 theta_3 = -k`.
//! Setting `theta_3 = -r-1` gives `k = theta_1 (r+1)`. With
//! `a_1 = k - b_1 - 1 = theta_1 (r+1) - (r-1) c_2 - 1`, the sum identity
//! becomes `theta_1 - r - 1 = theta_1 (r+1) - r c_2 - 1`, hence
//! `c_2 = theta_1 + 1` and the array is
//! `{theta_1 (r+1), (theta_1+1)(r-1), 1; 1, theta_1+1, theta_1 (r+1)}`.
//!
//! The multiplicity of `theta_1` is
//! `m_1 = (r+1)(r-1)(theta_1 (r+1) + 1) / (theta_1 + r + 1)`; it is an
//! integer iff `theta_1 + r + 1` divides `r(r+1)(r-1)(r+2)`, which leaves
//! finitely many `theta_1` and bounds `n = r(k+1)` by
//! `r^6 + 3r^5 + r^4 - 4r^3 - 4r^2`.
//!
//! Candidates are array-feasible only; nothing here claims a graph exists.

use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::error::{Error, Result};
use crate::feasibility::feasibility_check;

/// Largest `r` the enumerator accepts.
pub const MAX_COVER_INDEX: u64 = 20;

fn validated(b: Vec<u64>, c: Vec<u64>) -> Result<IntersectionArray> {
    let ia = IntersectionArray::new(b, c)?;
    let violations = feasibility_check(&ia);
    if violations.is_empty() {
        Ok(ia)
    } else {
        let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
        Err(Error::InvalidArray(format!("{ia} is not feasible: {}", list.join("; "))))
    }
}

/// `{st, s(t-1), 1; 1, t-1, st}`, from a generalized quadrangle `GQ(s, t)`
/// with a spread removed; smallest eigenvalue `-t`.
pub fn family_gq_spread(s: u64, t: u64) -> Result<IntersectionArray> {
    if s < 1 || t < 2 {
        return Err(Error::InvalidArray(format!("need s >= 1 and t >= 2, got s = {s}, t = {t}")));
    }
    validated(vec![s * t, s * (t - 1), 1], vec![1, t - 1, s * t])
}

/// `{(r+1)^2, (r-1)(r+2), 1; 1, r+2, (r+1)^2}`, an `r`-cover with
/// `theta_3 = -r-1` and `k_3 = r-1`.
pub fn family_square_valency_cover(r: u64) -> Result<IntersectionArray> {
    if r < 2 {
        return Err(Error::InvalidArray(format!("need r >= 2, got {r}")));
    }
    let k = (r + 1) * (r + 1);
    validated(vec![k, (r - 1) * (r + 2), 1], vec![1, r + 2, k])
}

/// `{b^2(b-1)/2, (b-1)(b^2-b+2)/2, b(b-1)/4; 1, b(b-1)/4, b(b-1)^2/2}`,
/// the arrays with `theta_1 = a_3` and `b_2 = c_2`. Whether graphs with
/// these arrays exist is open.
pub fn family_b2_equals_c2(b: u64) -> Result<IntersectionArray> {
    if b % 4 > 1 {
        return Err(Error::InfeasibleB(b));
    }
    if b < 4 {
        return Err(Error::InvalidArray(format!("need b >= 4, got {b}")));
    }
    let q = b * (b - 1) / 4;
    validated(vec![b * b * (b - 1) / 2, (b - 1) * (b * b - b + 2) / 2, q], vec![1, q, b * (b - 1) * (b - 1) / 2])
}

/// `r^6 + 3r^5 + r^4 - 4r^3 - 4r^2`.
pub fn cover_vertex_bound(r: u64) -> u64 {
    let p = |e: u32| r.pow(e);
    p(6) + 3 * p(5) + p(4) - 4 * p(3) - 4 * p(2)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AntipodalCandidate {
    pub r: u64,
    pub theta1: u64,
    pub array: IntersectionArray,
    pub m1: u64,
    pub n: u64,
    /// `n <= r^6 + 3r^5 + r^4 - 4r^3 - 4r^2`.
    pub within_bound: bool,
}

/// A divisor candidate that did not survive, with the reason.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RejectedCandidate {
    pub theta1: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Enumeration {
    pub r: u64,
    pub bound: u64,
    pub candidates: Vec<AntipodalCandidate>,
    pub rejected: Vec<RejectedCandidate>,
}

/// Positive divisors of `n`, ascending.
fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn enumerate_antipodal_r(r: u64) -> Result<Enumeration> {
    if !(2..=MAX_COVER_INDEX).contains(&r) {
        return Err(Error::OutOfRange(format!("r = {r} outside 2..={MAX_COVER_INDEX}")));
    }
    let bound = cover_vertex_bound(r);
    let mut candidates = Vec::new();
    let mut rejected = Vec::new();
    for t in divisors(r * (r + 1) * (r - 1) * (r + 2)) {
        if t <= r + 1 {
            continue;
        }
        let theta1 = t - r - 1;
        let k = theta1 * (r + 1);
        let b = vec![k, (theta1 + 1) * (r - 1), 1];
        let c = vec![1, theta1 + 1, k];
        let ia = match IntersectionArray::new(b, c) {
            Ok(ia) => ia,
            Err(e) => {
                rejected.push(RejectedCandidate { theta1, reason: e.to_string() });
                continue;
            }
        };
        let violations = feasibility_check(&ia);
        if !violations.is_empty() {
            let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
            rejected.push(RejectedCandidate { theta1, reason: list.join("; ") });
            continue;
        }
        let num = (r + 1) * (r - 1) * (k + 1);
        debug_assert_eq!(num % t, 0);
        let n = r * (k + 1);
        candidates.push(AntipodalCandidate { r, theta1, array: ia, m1: num / t, n, within_bound: n <= bound });
    }
    Ok(Enumeration { r, bound, candidates, rejected })
}
