//! Adjacency eigenvalues of an intersection array and their multiplicities.
//!
//! The `D+1` distinct eigenvalues of a distance-regular graph are the
//! eigenvalues of the tridiagonal intersection matrix `L_1`. They are found
//! numerically from the symmetrized matrix and then made exact where
//! possible: integer roots of the characteristic polynomial are detected by
//! exact evaluation, and a residual quadratic factor is solved in closed form.

use std::fmt;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::error::{Error, Result};
use crate::poly::{rat, Poly};

/// Exact description of an eigenvalue, when one is available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EigenForm {
    Integer {
        value: i64,
    },
    /// A root of the irreducible factor `x^2 - trace*x + norm`; `plus` picks
    /// the larger root.
    Quadratic {
        trace: i64,
        norm: i64,
        plus: bool,
    },
    Numeric,
}

/// One distinct adjacency eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub form: EigenForm,
}

impl Eigenvalue {
    pub fn integer(v: i64) -> Self {
        Self { value: v as f64, form: EigenForm::Integer { value: v } }
    }

    pub fn numeric(value: f64) -> Self {
        Self { value, form: EigenForm::Numeric }
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self.form {
            EigenForm::Integer { value } => Some(value),
            _ => None,
        }
    }

    pub fn exact(&self) -> Option<BigRational> {
        self.as_integer().map(rat)
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form {
            EigenForm::Integer { value } => write!(f, "{value}"),
            EigenForm::Quadratic { trace, norm, plus } => {
                let disc = trace * trace - 4 * norm;
                let sign = if plus { '+' } else { '-' };
                write!(f, "({trace} {sign} sqrt({disc}))/2")
            }
            EigenForm::Numeric => write!(f, "{}", self.value),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub theta: Eigenvalue,
    /// Multiplicity from the standard sequence; near-integer for feasible arrays.
    pub mult: f64,
}

/// The `D+1` distinct adjacency eigenvalues, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdjacencySpectrum {
    pub entries: Vec<SpectrumEntry>,
}

impl AdjacencySpectrum {
    pub fn thetas(&self) -> Vec<Eigenvalue> {
        self.entries.iter().map(|e| e.theta).collect()
    }

    pub fn values(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.theta.value).collect()
    }

    /// `theta_i`, with `theta_0 = k`.
    pub fn theta(&self, i: usize) -> Eigenvalue {
        self.entries[i].theta
    }

    pub fn total_multiplicity(&self) -> f64 {
        self.entries.iter().map(|e| e.mult).sum()
    }

    /// Multiplicities rounded to integers, or an error naming the first one
    /// that is not within `MULT_TOL` of a positive integer.
    pub fn integral_multiplicities(&self) -> Result<Vec<u64>> {
        self.entries
            .iter()
            .map(|e| {
                let r = e.mult.round();
                if r >= 1.0 && (e.mult - r).abs() <= MULT_TOL {
                    Ok(r as u64)
                } else {
                    Err(Error::NonIntegralMultiplicity { theta: e.theta.to_string(), value: e.mult })
                }
            })
            .collect()
    }
}

/// Absolute tolerance for multiplicity integrality.
pub const MULT_TOL: f64 = 1e-6;

/// The standard sequence `u_0, ..., u_D` of an eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardSequence {
    pub u: Vec<f64>,
}

/// Tridiagonal intersection matrix `L_1` as dense rows:
/// `L[i][i] = a_i`, `L[i][i+1] = b_i`, `L[i+1][i] = c_{i+1}`.
pub fn intersection_matrix(ia: &IntersectionArray) -> Vec<Vec<u64>> {
    let d = ia.diameter();
    let mut rows = vec![vec![0u64; d + 1]; d + 1];
    for i in 0..=d {
        rows[i][i] = ia.a(i);
        if i < d {
            rows[i][i + 1] = ia.b(i);
            rows[i + 1][i] = ia.c(i + 1);
        }
    }
    rows
}

/// Characteristic polynomial `det(xI - L_1)`, by the tridiagonal
/// continuant recurrence.
pub fn characteristic_polynomial(ia: &IntersectionArray) -> Poly {
    let d = ia.diameter();
    let mut prev = Poly::constant(rat(1));
    let mut cur = &Poly::x() - &Poly::constant(rat(ia.a(0) as i64));
    for j in 1..=d {
        let lin = &Poly::x() - &Poly::constant(rat(ia.a(j) as i64));
        let off = BigRational::from_integer(BigInt::from(ia.b(j - 1)) * BigInt::from(ia.c(j)));
        let next = &(&lin * &cur) - &prev.scale(&off);
        prev = cur;
        cur = next;
    }
    cur
}

fn numeric_eigenvalues(ia: &IntersectionArray) -> Result<Vec<f64>> {
    let d = ia.diameter();
    // diag(sqrt k_i) L_1 diag(sqrt k_i)^-1 is symmetric with off-diagonal sqrt(b_i c_{i+1})
    let m = DMatrix::from_fn(d + 1, d + 1, |i, j| {
        if i == j {
            ia.a(i) as f64
        } else if j == i + 1 {
            ((ia.b(i) as f64) * (ia.c(i + 1) as f64)).sqrt()
        } else if i == j + 1 {
            ((ia.b(j) as f64) * (ia.c(j + 1) as f64)).sqrt()
        } else {
            0.0
        }
    });
    let eig = nalgebra::SymmetricEigen::try_new(m, f64::EPSILON, 10_000).ok_or(Error::NumericalFailure)?;
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    if vals.iter().any(|v| !v.is_finite()) {
        return Err(Error::NumericalFailure);
    }
    vals.sort_by(|a, b| b.total_cmp(a));
    Ok(vals)
}

/// The distinct eigenvalues of `L_1`, sorted descending, with exact forms
/// attached where the characteristic polynomial allows.
pub fn eigenvalues(ia: &IntersectionArray) -> Result<Vec<Eigenvalue>> {
    let floats = numeric_eigenvalues(ia)?;
    let mut residual = characteristic_polynomial(ia);
    let mut out: Vec<Eigenvalue> = Vec::with_capacity(floats.len());
    for &v in &floats {
        let cand = v.round();
        let mut snapped = None;
        if (v - cand).abs() <= 1e-6 * v.abs().max(1.0) && cand.abs() < 9.0e15 {
            let (quot, rem) = residual.div_linear(&rat(cand as i64));
            if rem.is_zero() {
                residual = quot;
                snapped = Some(cand as i64);
            }
        }
        out.push(match snapped {
            Some(z) => Eigenvalue::integer(z),
            None => Eigenvalue::numeric(v),
        });
    }
    if residual.degree() == Some(2) {
        // monic with integer coefficients: x^2 - trace x + norm
        let trace = -residual.coeff(1);
        let norm = residual.coeff(0);
        if let (Some(t), Some(nm)) = (
            trace.is_integer().then(|| trace.to_integer().to_i64()).flatten(),
            norm.is_integer().then(|| norm.to_integer().to_i64()).flatten(),
        ) {
            let disc = (t as f64).powi(2) - 4.0 * nm as f64;
            if disc > 0.0 {
                let s = disc.sqrt();
                let (hi, lo) = ((t as f64 + s) / 2.0, (t as f64 - s) / 2.0);
                let numeric: Vec<usize> = (0..out.len()).filter(|&i| out[i].form == EigenForm::Numeric).collect();
                if let [i_hi, i_lo] = numeric[..] {
                    out[i_hi] = Eigenvalue { value: hi, form: EigenForm::Quadratic { trace: t, norm: nm, plus: true } };
                    out[i_lo] =
                        Eigenvalue { value: lo, form: EigenForm::Quadratic { trace: t, norm: nm, plus: false } };
                }
            }
        }
    }
    Ok(out)
}

/// Standard sequence by the three-term recurrence
/// `c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i`, with `u_0 = 1`,
/// `u_1 = theta / k`. The last row of `L_1` is the consistency check.
pub fn standard_sequence(ia: &IntersectionArray, theta: f64) -> Result<StandardSequence> {
    let d = ia.diameter();
    let k = ia.k() as f64;
    let mut u = vec![1.0, theta / k];
    for i in 1..d {
        let next = (theta * u[i] - ia.c(i) as f64 * u[i - 1] - ia.a(i) as f64 * u[i]) / ia.b(i) as f64;
        u.push(next);
    }
    let lhs = ia.c(d) as f64 * u[d - 1] + ia.a(d) as f64 * u[d];
    let rhs = theta * u[d];
    let scale = 1.0 + lhs.abs() + rhs.abs();
    if (lhs - rhs).abs() > 1e-7 * scale {
        return Err(Error::NotAnEigenvalue(theta.to_string()));
    }
    Ok(StandardSequence { u })
}

/// Standard sequence of an integer eigenvalue in exact arithmetic.
pub fn standard_sequence_exact(ia: &IntersectionArray, theta: i64) -> Result<Vec<BigRational>> {
    let d = ia.diameter();
    let th = rat(theta);
    let mut u = vec![rat(1), &th / rat(ia.k() as i64)];
    for i in 1..d {
        let next = (&th * &u[i] - rat(ia.c(i) as i64) * &u[i - 1] - rat(ia.a(i) as i64) * &u[i]) / rat(ia.b(i) as i64);
        u.push(next);
    }
    let lhs = rat(ia.c(d) as i64) * &u[d - 1] + rat(ia.a(d) as i64) * &u[d];
    if lhs != &th * &u[d] {
        return Err(Error::NotAnEigenvalue(theta.to_string()));
    }
    Ok(u)
}

/// `m(theta) = n / sum_i k_i u_i(theta)^2`.
pub fn multiplicity(ia: &IntersectionArray, theta: f64) -> Result<f64> {
    let seq = standard_sequence(ia, theta)?;
    let dp = ia.derived();
    let norm: f64 = seq.u.iter().zip(&dp.kseq).map(|(u, &k)| k as f64 * u * u).sum();
    Ok(dp.n as f64 / norm)
}

/// Exact multiplicity of an integer eigenvalue.
pub fn multiplicity_exact(ia: &IntersectionArray, theta: i64) -> Result<BigRational> {
    let u = standard_sequence_exact(ia, theta)?;
    let dp = ia.derived();
    let norm = u
        .iter()
        .zip(&dp.kseq)
        .fold(BigRational::zero(), |acc, (ui, &k)| acc + ui * ui * BigRational::from_integer(BigInt::from(k)));
    Ok(BigRational::from_integer(BigInt::from(dp.n)) / norm)
}

fn entry_multiplicity(ia: &IntersectionArray, theta: &Eigenvalue) -> Result<f64> {
    match theta.as_integer() {
        Some(z) => multiplicity_exact(ia, z).map(|m| m.to_f64().unwrap_or(f64::NAN)),
        None => multiplicity(ia, theta.value),
    }
}

pub fn adjacency_spectrum(ia: &IntersectionArray) -> Result<AdjacencySpectrum> {
    let entries = eigenvalues(ia)?
        .into_iter()
        .map(|theta| Ok(SpectrumEntry { mult: entry_multiplicity(ia, &theta)?, theta }))
        .collect::<Result<Vec<_>>>()?;
    Ok(AdjacencySpectrum { entries })
}

/// Whether `theta` is within `tol` of some eigenvalue of `L_1`.
pub fn is_eigenvalue(ia: &IntersectionArray, theta: f64, tol: f64) -> Result<bool> {
    Ok(numeric_eigenvalues(ia)?.iter().any(|v| (v - theta).abs() <= tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ia(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    #[test]
    fn intersection_matrices() {
        assert_eq!(
            intersection_matrix(&ia("{2,1,1;1,1,1}")),
            vec![vec![0, 2, 0, 0], vec![1, 0, 1, 0], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]
        );
        assert_eq!(
            intersection_matrix(&ia("{3,2,1;1,2,3}")),
            vec![vec![0, 3, 0, 0], vec![1, 0, 2, 0], vec![0, 2, 0, 1], vec![0, 0, 3, 0]]
        );
        let l = intersection_matrix(&ia("{9,4,1;1,4,9}"));
        assert_eq!((0..4).map(|i| l[i][i]).collect::<Vec<_>>(), vec![0, 4, 4, 0]);
    }

    #[test]
    fn johnson_spectrum() {
        let s = adjacency_spectrum(&ia("{9,4,1;1,4,9}")).unwrap();
        let got: Vec<(Option<i64>, f64)> = s.entries.iter().map(|e| (e.theta.as_integer(), e.mult)).collect();
        assert_eq!(got, vec![(Some(9), 1.0), (Some(3), 5.0), (Some(-1), 9.0), (Some(-3), 5.0)]);
    }

    #[test]
    fn cube_spectrum() {
        let s = adjacency_spectrum(&ia("{3,2,1;1,2,3}")).unwrap();
        let got: Vec<(Option<i64>, f64)> = s.entries.iter().map(|e| (e.theta.as_integer(), e.mult)).collect();
        assert_eq!(got, vec![(Some(3), 1.0), (Some(1), 3.0), (Some(-1), 3.0), (Some(-3), 1.0)]);
    }

    #[test]
    fn prop38_item4_spectrum() {
        let s = adjacency_spectrum(&ia("{35,18,1;1,18,35}")).unwrap();
        let th: Vec<Option<i64>> = s.thetas().iter().map(|t| t.as_integer()).collect();
        assert_eq!(th, vec![Some(35), Some(5), Some(-1), Some(-7)]);
        assert_eq!(s.integral_multiplicities().unwrap(), vec![1, 21, 35, 15]);
    }

    #[test]
    fn heawood_quadratic_pair() {
        let s = adjacency_spectrum(&ia("{3,2,2;1,1,3}")).unwrap();
        assert_eq!(s.theta(1).form, EigenForm::Quadratic { trace: 0, norm: -2, plus: true });
        assert_eq!(s.theta(2).form, EigenForm::Quadratic { trace: 0, norm: -2, plus: false });
        assert!((s.theta(1).value - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(s.integral_multiplicities().unwrap(), vec![1, 6, 6, 1]);
    }

    #[test]
    fn heptagon_cubic_stays_numeric() {
        let s = adjacency_spectrum(&ia("{2,1,1;1,1,1}")).unwrap();
        assert_eq!(s.theta(0).as_integer(), Some(2));
        for j in 1..4 {
            assert_eq!(s.theta(j).form, EigenForm::Numeric);
        }
        let expect = [2.0 * (2.0 * std::f64::consts::PI / 7.0).cos(), 2.0 * (6.0 * std::f64::consts::PI / 7.0).cos()];
        assert!((s.theta(1).value - expect[0]).abs() < 1e-12);
        assert!((s.theta(3).value - expect[1]).abs() < 1e-12);
        assert_eq!(s.integral_multiplicities().unwrap(), vec![1, 2, 2, 2]);
    }

    #[test]
    fn standard_sequences() {
        let s = standard_sequence(&ia("{9,4,1;1,4,9}"), 9.0).unwrap();
        assert_eq!(s.u, vec![1.0; 4]);
        let u = standard_sequence_exact(&ia("{9,4,1;1,4,9}"), -1).unwrap();
        let ninth = BigRational::new(BigInt::from(-1), BigInt::from(9));
        assert_eq!(u, vec![rat(1), ninth.clone(), ninth, rat(1)]);
        let u = standard_sequence_exact(&ia("{3,2,1;1,2,3}"), 1).unwrap();
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(u, vec![rat(1), third.clone(), -third, rat(-1)]);
        assert!(matches!(standard_sequence(&ia("{3,2,1;1,2,3}"), 0.5), Err(Error::NotAnEigenvalue(_))));
        assert!(matches!(standard_sequence_exact(&ia("{3,2,1;1,2,3}"), 2), Err(Error::NotAnEigenvalue(_))));
    }

    #[test]
    fn multiplicities() {
        let cube = ia("{3,2,1;1,2,3}");
        assert_eq!(multiplicity_exact(&cube, -1).unwrap(), rat(3));
        assert!((multiplicity(&cube, -1.0).unwrap() - 3.0).abs() < 1e-12);
        assert_eq!(multiplicity_exact(&ia("{35,18,1;1,18,35}"), 5).unwrap(), rat(21));
        assert_eq!(multiplicity_exact(&ia("{4,3,3;1,1,2}"), 4).unwrap(), rat(1));
    }

    #[test]
    fn char_poly_of_cube() {
        // (x-3)(x-1)(x+1)(x+3) = x^4 - 10x^2 + 9
        assert_eq!(characteristic_polynomial(&ia("{3,2,1;1,2,3}")), Poly::from_ints(&[9, 0, -10, 0, 1]));
    }
}
