//! Antipodal covers of any diameter: which eigenvalues belong to the folded
//! graph, and the zero eigenvalue of the distance matrix of a 2-cover.
//!
//! An eigenvalue `theta` of an antipodal cover is an eigenvalue of its
//! folded graph iff its standard sequence has `u_D = 1`, in which case
//! `u_i = u_{D-i}` for all `i`. For `r = 2`, `k_i = k_{D-i}` as well, and
//! the row sum `sum_i i k_i u_i` pairs index `i` with `D - i` to give
//! `D * (sum_i k_i u_i) / 2 = 0`, so every non-trivial folded eigenvalue
//! has `R_1(theta) = 0`.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::array::IntersectionArray;
use crate::error::{Error, Result};
use crate::qdistance::{dq_spectrum_formula, rq_at, values_coincide, QSpectrum, QValue, RationalQ};
use crate::spectrum::{eigenvalues, standard_sequence, standard_sequence_exact, Eigenvalue};

const FOLD_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FoldedSpectrum {
    pub r: u64,
    /// Eigenvalues with `u_D = 1`, descending; includes `k`.
    pub folded: Vec<Eigenvalue>,
    pub nonfolded: Vec<Eigenvalue>,
    /// `u_i = u_{D-i}` holds for every folded eigenvalue.
    pub palindromic: bool,
}

fn sequence(ia: &IntersectionArray, theta: &Eigenvalue) -> Result<Vec<f64>> {
    match theta.as_integer() {
        Some(z) => Ok(standard_sequence_exact(ia, z)?.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()),
        None => Ok(standard_sequence(ia, theta.value)?.u),
    }
}

pub fn folded_spectrum(ia: &IntersectionArray) -> Result<FoldedSpectrum> {
    let r = ia.antipodal_r().ok_or(Error::NotAntipodal)?;
    let d = ia.diameter();
    let mut folded = Vec::new();
    let mut nonfolded = Vec::new();
    let mut palindromic = true;
    for theta in eigenvalues(ia)? {
        let u = sequence(ia, &theta)?;
        if (u[d] - 1.0).abs() <= FOLD_TOL {
            palindromic &= (0..=d).all(|i| (u[i] - u[d - i]).abs() <= FOLD_TOL * (1.0 + u[i].abs()));
            folded.push(theta);
        } else {
            nonfolded.push(theta);
        }
    }
    Ok(FoldedSpectrum { r, folded, nonfolded, palindromic })
}

/// Outcome of the zero-eigenvalue check on the ordinary distance matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroMultiplicityReport {
    pub array: IntersectionArray,
    pub r: u64,
    /// Multiplicity of 0 in the distance spectrum.
    pub zero_mult: u64,
    #[serde(rename = "floor_D_over_2")]
    pub floor_d_over_2: u64,
    pub distinct: u64,
    /// `ceil(D/2) + 2`.
    pub bound: u64,
    /// `zero_mult >= floor(D/2)`, `distinct <= bound`, and
    /// `R_1(theta) = 0` at every non-trivial folded eigenvalue.
    pub pass: bool,
}

/// `R_1` at each non-trivial folded eigenvalue, all of which should vanish.
pub fn folded_r1_values(ia: &IntersectionArray) -> Result<Vec<(Eigenvalue, f64)>> {
    let fs = folded_spectrum(ia)?;
    let q = QValue::Exact(RationalQ::from_ratio(1, 1)?);
    let k = ia.k() as f64;
    Ok(fs.folded.iter().filter(|t| t.value != k).map(|t| (*t, rq_at(ia, t, &q).0)).collect())
}

/// Multiplicity of 0 in a spectrum under the clustering rule.
pub fn zero_multiplicity(s: &QSpectrum) -> u64 {
    s.entries.iter().filter(|e| values_coincide(e.value, 0.0)).map(|e| e.mult).sum()
}

fn zero_report(ia: &IntersectionArray, r: u64) -> Result<ZeroMultiplicityReport> {
    let d = ia.diameter() as u64;
    let n = ia.n() as f64;
    let folded_zero = folded_r1_values(ia)?.iter().all(|(_, v)| v.abs() <= 1e-8 * n);
    let spec = dq_spectrum_formula(ia, &RationalQ::from_ratio(1, 1)?)?;
    let zero_mult = zero_multiplicity(&spec);
    let distinct = spec.count_distinct() as u64;
    let floor_d_over_2 = d / 2;
    let bound = d.div_ceil(2) + 2;
    Ok(ZeroMultiplicityReport {
        array: ia.clone(),
        r,
        zero_mult,
        floor_d_over_2,
        distinct,
        bound,
        pass: folded_zero && zero_mult >= floor_d_over_2 && distinct <= bound,
    })
}

/// Checks an antipodal 2-cover.
pub fn zero_multiplicity_check(ia: &IntersectionArray) -> Result<ZeroMultiplicityReport> {
    let r = ia.antipodal_r().ok_or(Error::NotAntipodal)?;
    if r != 2 {
        return Err(Error::WrongCoverIndex(r));
    }
    zero_report(ia, r)
}

/// Same checks under the hypothesis `b_i = c_{D-i}` for every `i`,
/// `b_0 = c_D` included. Fails with the first index where it breaks.
pub fn mirrored_array_check(ia: &IntersectionArray) -> Result<ZeroMultiplicityReport> {
    let d = ia.diameter();
    if let Some(i) = (0..=d).find(|&i| ia.b(i) != ia.c(d - i)) {
        return Err(Error::HypothesisFailed(i));
    }
    let r = ia.antipodal_r().expect("b_i = c_(D-i) for all i makes a 2-cover");
    zero_report(ia, r)
}
