//! The q-distance matrix `D_q` and its spectrum.
//!
//! `D_q` has entry `1 + 1/q + ... + 1/q^(d-1)` for vertices at distance
//! `d >= 1` and zero on the diagonal. For a distance-regular graph it is a
//! polynomial `R_q(A)` in the adjacency matrix, so each adjacency eigenvalue
//! `theta` contributes the eigenvalue `R_q(theta) = sum_i w_i v_i(theta)`,
//! where `w_i` is the distance-`i` weight and `v_i` the distance polynomial
//! from the three-term recurrence `A A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}`.
//!
//! Two independent routes produce a [`QSpectrum`]: [`dq_spectrum_formula`]
//! from the intersection array alone, and [`dq_spectrum_oracle`] by a dense
//! eigensolve of the matrix built on a concrete graph.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::array::IntersectionArray;
use crate::atlas::{distances, ConcreteGraph, DistanceMatrix};
use crate::error::{Error, Result};
use crate::poly::{rat, Poly};
use crate::scalar::{format_rational, opt_rational_string, parse_rational, Scalar};
use crate::spectrum::{adjacency_spectrum, EigenForm, Eigenvalue};

/// Largest graph the dense oracle accepts.
pub const ORACLE_MAX_VERTICES: usize = 4000;

/// Relative tolerance of the clustering rule.
pub const CLUSTER_TOL: f64 = 1e-8;

/// Where `q` sits relative to the points `-1` and `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QRegion {
    Positive,
    /// `-1 < q < 0`.
    BetweenMinusOneAndZero,
    /// `q = -1`, the boundary of the `q <= -1` regime.
    MinusOne,
    BelowMinusOne,
}

impl QRegion {
    fn classify(sign_q: i32, cmp_minus_one: std::cmp::Ordering) -> Self {
        use std::cmp::Ordering::*;
        match (sign_q > 0, cmp_minus_one) {
            (true, _) => QRegion::Positive,
            (false, Greater) => QRegion::BetweenMinusOneAndZero,
            (false, Equal) => QRegion::MinusOne,
            (false, Less) => QRegion::BelowMinusOne,
        }
    }

    /// True for `q` outside `(-1, 0]`.
    pub fn outside_open_interval(self) -> bool {
        self != QRegion::BetweenMinusOneAndZero
    }
}

/// A nonzero rational deformation parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalQ(BigRational);

impl RationalQ {
    pub fn new(q: BigRational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroQ);
        }
        Ok(Self(q))
    }

    pub fn from_ratio(p: i64, r: i64) -> Result<Self> {
        if r == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        Self::new(BigRational::new(BigInt::from(p), BigInt::from(r)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn region(&self) -> QRegion {
        let sign = if self.0.is_positive() { 1 } else { -1 };
        QRegion::classify(sign, self.0.cmp(&-rat(1)))
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl FromStr for RationalQ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let r = parse_rational(s).ok_or_else(|| Error::Parse(format!("bad q {s:?}; expected p/r or an integer")))?;
        Self::new(r)
    }
}

/// `q` either exact or, for irrational values, approximate.
#[derive(Debug, Clone, PartialEq)]
pub enum QValue {
    Exact(RationalQ),
    Approx(f64),
}

impl QValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            QValue::Exact(q) => q.to_f64(),
            QValue::Approx(v) => *v,
        }
    }

    pub fn is_approximate(&self) -> bool {
        matches!(self, QValue::Approx(_))
    }

    pub fn exact(&self) -> Option<&RationalQ> {
        match self {
            QValue::Exact(q) => Some(q),
            QValue::Approx(_) => None,
        }
    }

    pub fn region(&self) -> QRegion {
        match self {
            QValue::Exact(q) => q.region(),
            QValue::Approx(v) => {
                let sign = if *v > 0.0 { 1 } else { -1 };
                QRegion::classify(sign, v.total_cmp(&-1.0))
            }
        }
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QValue::Exact(q) => write!(f, "{q}"),
            QValue::Approx(v) => write!(f, "~{v}"),
        }
    }
}

impl Serialize for QValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            QValue::Exact(q) => s.collect_str(q),
            QValue::Approx(v) => s.serialize_f64(*v),
        }
    }
}

impl<'de> Deserialize<'de> for QValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Float(f64),
        }
        match Raw::deserialize(d)? {
            Raw::Text(s) => s.parse().map(QValue::Exact).map_err(serde::de::Error::custom),
            Raw::Float(v) => Ok(QValue::Approx(v)),
        }
    }
}

/// Distance weight `w_i = sum_{j<i} q^-j` in any scalar type.
pub fn weight_in<T: Scalar>(q: &T, i: usize) -> T {
    let inv = T::one() / q.clone();
    let mut term = T::one();
    let mut sum = T::zero();
    for _ in 0..i {
        sum = sum + term.clone();
        term = term * inv.clone();
    }
    sum
}

/// Exact distance weight `w_i`, `i >= 1`.
pub fn weight(q: &RationalQ, i: usize) -> BigRational {
    weight_in(q.value(), i)
}

/// Weights `w_0 = 0, w_1, ..., w_d` as floats.
pub fn weights_f64(q: &QValue, d: usize) -> Vec<f64> {
    match q {
        QValue::Exact(q) => (0..=d).map(|i| weight(q, i).to_f64().unwrap_or(f64::NAN)).collect(),
        QValue::Approx(v) => (0..=d).map(|i| weight_in(v, i)).collect(),
    }
}

/// The matrix `D_q(G)`, stored as the distance matrix plus one exact weight
/// per distance.
#[derive(Debug, Clone)]
pub struct DqMatrix {
    dist: DistanceMatrix,
    q: QValue,
    weights: Vec<Option<BigRational>>,
    weights_f64: Vec<f64>,
}

impl DqMatrix {
    pub fn n(&self) -> usize {
        self.dist.n()
    }

    pub fn q(&self) -> &QValue {
        &self.q
    }

    /// Exact entry, `None` for approximate `q`.
    pub fn entry(&self, x: usize, y: usize) -> Option<BigRational> {
        self.weights[self.dist.get(x, y) as usize].clone()
    }

    pub fn entry_f64(&self, x: usize, y: usize) -> f64 {
        self.weights_f64[self.dist.get(x, y) as usize]
    }

    /// The distinct off-diagonal entries, one per distance `1..=diameter`.
    pub fn distinct_entries(&self) -> &[Option<BigRational>] {
        &self.weights[1..]
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n(), self.n(), |x, y| self.entry_f64(x, y))
    }
}

pub fn build_dq(g: &ConcreteGraph, q: &QValue) -> Result<DqMatrix> {
    let dist = distances(g)?;
    let d = dist.diameter() as usize;
    let mut weights: Vec<Option<BigRational>> = match q {
        QValue::Exact(q) => (0..=d).map(|i| Some(weight(q, i))).collect(),
        QValue::Approx(_) => vec![None; d + 1],
    };
    weights[0] = (!q.is_approximate()).then(|| rat(0));
    let weights_f64 = weights_f64(q, d);
    Ok(DqMatrix { dist, q: q.clone(), weights, weights_f64 })
}

/// Distance polynomials `v_0(theta), ..., v_D(theta)`: `v_0 = 1`,
/// `v_1 = theta`, `c_{i+1} v_{i+1} = (theta - a_i) v_i - b_{i-1} v_{i-1}`.
pub fn distance_polys_in<T: Scalar>(ia: &IntersectionArray, theta: &T) -> Vec<T> {
    let d = ia.diameter();
    let mut v = vec![T::one(), theta.clone()];
    for i in 1..d {
        let next = ((theta.clone() - T::from_u64(ia.a(i))) * v[i].clone()
            - T::from_u64(ia.b(i - 1)) * v[i - 1].clone())
            / T::from_u64(ia.c(i + 1));
        v.push(next);
    }
    v
}

pub fn distance_polys(ia: &IntersectionArray, theta: f64) -> Vec<f64> {
    distance_polys_in(ia, &theta)
}

/// `R_q(theta) = sum_{i=1}^D w_i v_i(theta)`, evaluated for any `theta`.
pub fn rq_value_in<T: Scalar>(ia: &IntersectionArray, theta: &T, q: &T) -> T {
    let v = distance_polys_in(ia, theta);
    (1..v.len()).fold(T::zero(), |acc, i| acc + weight_in(q, i) * v[i].clone())
}

pub fn rq_value(ia: &IntersectionArray, theta: f64, q: f64) -> f64 {
    rq_value_in(ia, &theta, &q)
}

pub fn rq_value_exact(ia: &IntersectionArray, theta: &BigRational, q: &RationalQ) -> BigRational {
    rq_value_in(ia, theta, q.value())
}

/// `R_q` as an explicit polynomial in `theta` with rational coefficients.
pub fn rq_polynomial(ia: &IntersectionArray, q: &RationalQ) -> Poly {
    let d = ia.diameter();
    let mut v = vec![Poly::constant(rat(1)), Poly::x()];
    for i in 1..d {
        let shifted = &v[i].mul_x() - &v[i].scale(&rat(ia.a(i) as i64));
        let num = &shifted - &v[i - 1].scale(&rat(ia.b(i - 1) as i64));
        v.push(num.scale(&(rat(1) / rat(ia.c(i + 1) as i64))));
    }
    (1..=d).fold(Poly::zero(), |acc, i| &acc + &v[i].scale(&weight(q, i)))
}

/// Exact symmetric functions `(R(t+) + R(t-), R(t+) R(t-))` over the two
/// roots `t+-` of `x^2 - trace x + norm`.
pub fn quadratic_pair_invariants(
    ia: &IntersectionArray,
    q: &RationalQ,
    trace: i64,
    norm: i64,
) -> (BigRational, BigRational) {
    let (alpha, beta) = rq_polynomial(ia, q).rem_quadratic(&rat(trace), &rat(norm));
    let t = rat(trace);
    let n = rat(norm);
    let sum = &alpha * rat(2) + &beta * &t;
    let product = &alpha * &alpha + &alpha * &beta * &t + &beta * &beta * &n;
    (sum, product)
}

/// One distinct eigenvalue of `D_q`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QEigen {
    pub value: f64,
    #[serde(with = "opt_rational_string")]
    pub value_exact: Option<BigRational>,
    pub mult: u64,
}

/// Distinct eigenvalues of `D_q` with multiplicities, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QSpectrum {
    pub q: QValue,
    pub entries: Vec<QEigen>,
}

impl QSpectrum {
    /// Number of distinct values under the clustering rule.
    pub fn count_distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|e| e.mult).sum()
    }

    /// `sum m_j R_j` in floating point.
    pub fn trace(&self) -> f64 {
        self.entries.iter().map(|e| e.mult as f64 * e.value).sum()
    }

    /// `sum m_j R_j` exactly, when every value is exact.
    pub fn trace_exact(&self) -> Option<BigRational> {
        self.entries.iter().try_fold(rat(0), |acc, e| {
            e.value_exact.as_ref().map(|v| acc + v * BigRational::from_integer(BigInt::from(e.mult)))
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|e| e.value.abs()).fold(0.0, f64::max)
    }

    /// JSON list `[{"value", "value_exact", "mult"}]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.entries).expect("plain data")
    }
}

pub fn count_distinct(s: &QSpectrum) -> usize {
    s.count_distinct()
}

/// `|x - y| <= CLUSTER_TOL * max(1, |x|, |y|)`.
pub fn values_coincide(x: f64, y: f64) -> bool {
    (x - y).abs() <= CLUSTER_TOL * 1f64.max(x.abs()).max(y.abs())
}

/// Sorts descending and merges runs of coinciding values (transitively),
/// adding multiplicities. A merged value keeps its exact form only if every
/// member carries the same exact value.
pub fn cluster(mut raw: Vec<QEigen>) -> Vec<QEigen> {
    raw.sort_by(|a, b| b.value.total_cmp(&a.value));
    let mut out: Vec<(QEigen, f64, bool)> = Vec::new();
    for e in raw {
        if let Some((last, weighted, exact_ok)) = out.last_mut() {
            if values_coincide(last.value, e.value) {
                *exact_ok &= last.value_exact.is_some() && last.value_exact == e.value_exact;
                *weighted += e.value * e.mult as f64;
                last.mult += e.mult;
                // keep tracking the latest member so the run is chained transitively
                last.value = e.value;
                continue;
            }
        }
        let w = e.value * e.mult as f64;
        out.push((e, w, true));
    }
    out.into_iter()
        .map(|(mut e, weighted, exact_ok)| {
            if !exact_ok {
                e.value_exact = None;
            }
            e.value = match &e.value_exact {
                Some(x) => x.to_f64().unwrap_or(f64::NAN),
                None => weighted / e.mult as f64,
            };
            e
        })
        .collect()
}

/// Spectrum of `D_q` from the intersection array: `(R_q(theta_j), m_j)` for
/// every adjacency eigenvalue, then clustered. Values at integer eigenvalues
/// are exact; quadratic conjugate pairs are cross-checked against their
/// exact symmetric functions.
pub fn dq_spectrum_formula(ia: &IntersectionArray, q: &RationalQ) -> Result<QSpectrum> {
    formula_route(ia, &QValue::Exact(q.clone()))
}

/// Floating-point variant for irrational `q`; the result is flagged
/// approximate.
pub fn dq_spectrum_formula_approx(ia: &IntersectionArray, q: f64) -> Result<QSpectrum> {
    if q == 0.0 || !q.is_finite() {
        return Err(Error::ZeroQ);
    }
    formula_route(ia, &QValue::Approx(q))
}

pub fn dq_spectrum_formula_value(ia: &IntersectionArray, q: &QValue) -> Result<QSpectrum> {
    match q {
        QValue::Exact(q) => dq_spectrum_formula(ia, q),
        QValue::Approx(v) => dq_spectrum_formula_approx(ia, *v),
    }
}

/// `R_q(theta)` at one eigenvalue: exact when both `theta` and `q` are
/// rational, floating point otherwise.
pub fn rq_at(ia: &IntersectionArray, theta: &Eigenvalue, q: &QValue) -> (f64, Option<BigRational>) {
    match (theta.exact(), q.exact()) {
        (Some(th), Some(qq)) => {
            let x = rq_value_exact(ia, &th, qq);
            (x.to_f64().unwrap_or(f64::NAN), Some(x))
        }
        _ => (rq_value(ia, theta.value, q.to_f64()), None),
    }
}

/// `R_q(theta)` for each adjacency eigenvalue in order, unclustered.
pub fn rq_values(ia: &IntersectionArray, q: &QValue) -> Result<Vec<QEigen>> {
    let spec = adjacency_spectrum(ia)?;
    let mults = spec.integral_multiplicities()?;
    let mut raw = Vec::with_capacity(mults.len());
    for (entry, mult) in spec.entries.iter().zip(mults) {
        let (value, value_exact) = rq_at(ia, &entry.theta, q);
        raw.push(QEigen { value, value_exact, mult });
    }
    if let Some(qq) = q.exact() {
        check_quadratic_pairs(ia, qq, &spec.thetas(), &raw)?;
    }
    Ok(raw)
}

fn check_quadratic_pairs(
    ia: &IntersectionArray,
    q: &RationalQ,
    thetas: &[Eigenvalue],
    values: &[QEigen],
) -> Result<()> {
    let plus = thetas.iter().position(|t| matches!(t.form, EigenForm::Quadratic { plus: true, .. }));
    let minus = thetas.iter().position(|t| matches!(t.form, EigenForm::Quadratic { plus: false, .. }));
    let (Some(i), Some(j)) = (plus, minus) else { return Ok(()) };
    let EigenForm::Quadratic { trace, norm, .. } = thetas[i].form else { unreachable!() };
    let (sum, product) = quadratic_pair_invariants(ia, q, trace, norm);
    let (x, y) = (values[i].value, values[j].value);
    let tol = 1e-9 * (1.0 + x.abs() + y.abs()).powi(2);
    let sum_ok = (x + y - sum.to_f64().unwrap_or(f64::NAN)).abs() <= tol;
    let prod_ok = (x * y - product.to_f64().unwrap_or(f64::NAN)).abs() <= tol;
    if sum_ok && prod_ok {
        Ok(())
    } else {
        Err(Error::NumericalFailure)
    }
}

fn formula_route(ia: &IntersectionArray, q: &QValue) -> Result<QSpectrum> {
    Ok(QSpectrum { q: q.clone(), entries: cluster(rq_values(ia, q)?) })
}

/// Spectrum of `D_q` by dense symmetric eigensolve on a concrete graph.
pub fn dq_spectrum_oracle(g: &ConcreteGraph, q: &QValue) -> Result<QSpectrum> {
    if g.n() > ORACLE_MAX_VERTICES {
        return Err(Error::OutOfRange(format!("{} vertices exceeds oracle cap {ORACLE_MAX_VERTICES}", g.n())));
    }
    let dense = build_dq(g, q)?.to_dense();
    let eig = nalgebra::SymmetricEigen::try_new(dense, f64::EPSILON, 100_000).ok_or(Error::NumericalFailure)?;
    if eig.eigenvalues.iter().any(|v| !v.is_finite()) {
        return Err(Error::NumericalFailure);
    }
    let raw = eig.eigenvalues.iter().map(|&value| QEigen { value, value_exact: None, mult: 1 }).collect();
    Ok(QSpectrum { q: q.clone(), entries: cluster(raw) })
}

/// Compares two spectra value by value (relative tolerance against
/// `max(1, |x|)`) and multiplicity by multiplicity.
pub fn spectra_agree(a: &QSpectrum, b: &QSpectrum, rel_tol: f64) -> std::result::Result<(), String> {
    if a.entries.len() != b.entries.len() {
        return Err(format!("{} distinct values vs {}", a.entries.len(), b.entries.len()));
    }
    for (x, y) in a.entries.iter().zip(&b.entries) {
        let scale = 1f64.max(x.value.abs()).max(y.value.abs());
        if (x.value - y.value).abs() > rel_tol * scale {
            return Err(format!("value {} vs {}", x.value, y.value));
        }
        if x.mult != y.mult {
            return Err(format!("multiplicity {} vs {} at value {}", x.mult, y.mult, x.value));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{crown_graph, cycle_graph, hypercube, johnson_graph};

    fn ia(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    fn q(s: &str) -> RationalQ {
        s.parse().unwrap()
    }

    fn r(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    fn summary(s: &QSpectrum) -> Vec<(String, u64)> {
        s.entries
            .iter()
            .map(|e| (e.value_exact.as_ref().map(format_rational).unwrap_or_else(|| format!("{:.9}", e.value)), e.mult))
            .collect()
    }

    #[test]
    fn parsing_q() {
        assert_eq!(q("-1/2").to_string(), "-1/2");
        assert_eq!(q("3").to_string(), "3");
        assert_eq!("0".parse::<RationalQ>(), Err(Error::ZeroQ));
        assert_eq!("0/5".parse::<RationalQ>(), Err(Error::ZeroQ));
        assert!(matches!("x".parse::<RationalQ>(), Err(Error::Parse(_))));
        assert_eq!(q("2").region(), QRegion::Positive);
        assert_eq!(q("-1/3").region(), QRegion::BetweenMinusOneAndZero);
        assert_eq!(q("-1").region(), QRegion::MinusOne);
        assert_eq!(q("-3/2").region(), QRegion::BelowMinusOne);
        assert_eq!(QValue::Approx(-1.0).region(), QRegion::MinusOne);
        assert_eq!(QValue::Approx(-0.2).region(), QRegion::BetweenMinusOneAndZero);
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&q("1"), 3), rat(3));
        assert_eq!(weight(&q("-1/2"), 2), rat(-1));
        assert_eq!(weight(&q("-1/2"), 3), rat(3));
        assert_eq!(weight(&q("2"), 3), r(7, 4));
        assert_eq!(weight(&q("-1"), 4), rat(0));
        assert_eq!(weight(&q("-1"), 3), rat(1));
    }

    #[test]
    fn dq_entries() {
        let cube = build_dq(&hypercube(3).unwrap(), &QValue::Exact(q("1"))).unwrap();
        let e: Vec<_> = cube.distinct_entries().iter().map(|x| x.clone().unwrap()).collect();
        assert_eq!(e, vec![rat(1), rat(2), rat(3)]);
        assert_eq!(cube.entry(0, 0), Some(rat(0)));

        let j = build_dq(&johnson_graph(6, 3).unwrap(), &QValue::Exact(q("-1/2"))).unwrap();
        let e: Vec<_> = j.distinct_entries().iter().map(|x| x.clone().unwrap()).collect();
        assert_eq!(e, vec![rat(1), rat(-1), rat(3)]);

        let c = build_dq(&cycle_graph(7).unwrap(), &QValue::Exact(q("2"))).unwrap();
        let e: Vec<_> = c.distinct_entries().iter().map(|x| x.clone().unwrap()).collect();
        assert_eq!(e, vec![rat(1), r(3, 2), r(7, 4)]);
        let dense = c.to_dense();
        assert_eq!(dense, dense.transpose());
    }

    #[test]
    fn distance_polynomials() {
        assert_eq!(distance_polys(&ia("{3,2,1;1,2,3}"), 1.0), vec![1.0, 1.0, -1.0, -1.0]);
        assert_eq!(distance_polys(&ia("{9,4,1;1,4,9}"), 3.0), vec![1.0, 3.0, -3.0, -1.0]);
        let a = ia("{15,8,3;1,4,9}");
        let ks: Vec<f64> = a.derived().kseq.iter().map(|&x| x as f64).collect();
        assert_eq!(distance_polys(&a, 15.0), ks);
    }

    #[test]
    fn rq_values_exact() {
        assert_eq!(rq_value_exact(&ia("{9,4,1;1,4,9}"), &rat(3), &q("-1/2")), rat(3));
        assert_eq!(rq_value_exact(&ia("{35,18,1;1,18,35}"), &rat(-7), &q("-1/3")), rat(-28));
        assert_eq!(rq_value_exact(&ia("{3,2,1;1,2,3}"), &rat(-1), &q("1")), rat(0));
        assert!((rq_value(&ia("{3,2,1;1,2,3}"), -1.0, 1.0)).abs() < 1e-15);
    }

    #[test]
    fn rq_polynomial_matches_recurrence() {
        let a = ia("{15,8,3;1,4,9}");
        let p = rq_polynomial(&a, &q("-1/2"));
        for th in [15, 7, 1, -3, 2, -10] {
            assert_eq!(p.eval(&rat(th)), rq_value_exact(&a, &rat(th), &q("-1/2")));
        }
    }

    #[test]
    fn formula_spectra() {
        let s = dq_spectrum_formula(&ia("{9,4,1;1,4,9}"), &q("-1/2")).unwrap();
        assert_eq!(summary(&s), vec![("3".into(), 15), ("-9".into(), 5)]);
        assert_eq!(s.trace_exact(), Some(rat(0)));

        let s = dq_spectrum_formula(&ia("{15,8,3;1,4,9}"), &q("-1/2")).unwrap();
        assert_eq!(summary(&s), vec![("15".into(), 1 + 20), ("-9".into(), 7 + 28)]);

        let s = dq_spectrum_formula(&ia("{3,2,1;1,2,3}"), &q("1")).unwrap();
        assert_eq!(summary(&s), vec![("12".into(), 1), ("0".into(), 4), ("-4".into(), 3)]);
        assert_eq!(count_distinct(&s), 3);
    }

    #[test]
    fn oracle_spectra() {
        let s = dq_spectrum_oracle(&johnson_graph(6, 3).unwrap(), &QValue::Exact(q("-1/2"))).unwrap();
        let f = dq_spectrum_formula(&ia("{9,4,1;1,4,9}"), &q("-1/2")).unwrap();
        spectra_agree(&s, &f, 1e-8).unwrap();

        let c7 = dq_spectrum_oracle(&cycle_graph(7).unwrap(), &QValue::Exact(q("1"))).unwrap();
        assert!((c7.entries[0].value - 12.0).abs() < 1e-9);
        assert_eq!(c7.entries[0].mult, 1);
        assert_eq!(c7.count_distinct(), 4);

        let crown = dq_spectrum_oracle(&crown_graph(4).unwrap(), &QValue::Exact(q("1"))).unwrap();
        spectra_agree(&crown, &dq_spectrum_formula(&ia("{3,2,1;1,2,3}"), &q("1")).unwrap(), 1e-8).unwrap();

        let j = dq_spectrum_oracle(&johnson_graph(6, 3).unwrap(), &QValue::Exact(q("2"))).unwrap();
        assert_eq!(j.count_distinct(), 4);
    }

    #[test]
    fn heawood_pair_invariants() {
        // R_1(t) = t^3 + 2t^2 - 4t - 6 for Heawood
        let a = ia("{3,2,2;1,1,3}");
        let (sum, product) = quadratic_pair_invariants(&a, &q("1"), 0, -2);
        let s2 = 2f64.sqrt();
        let (x, y) = (rq_value(&a, s2, 1.0), rq_value(&a, -s2, 1.0));
        assert!((x + y - sum.to_f64().unwrap()).abs() < 1e-12);
        assert!((x * y - product.to_f64().unwrap()).abs() < 1e-12);
        assert_eq!(sum, rat(-4));
        let s = dq_spectrum_formula(&a, &q("1")).unwrap();
        assert_eq!(s.count_distinct(), 4);
    }

    #[test]
    fn clustering_rule() {
        let e = |v: f64, m: u64| QEigen { value: v, value_exact: None, mult: m };
        let c = cluster(vec![e(1.0, 1), e(1.0 + 5e-9, 2), e(1.0 + 1e-8, 1), e(-3.0, 1)]);
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].mult, 4);
        let c = cluster(vec![e(1.0, 1), e(1.0 + 3e-8, 1)]);
        assert_eq!(c.len(), 2);
        let c = cluster(vec![e(1e-12, 1), e(-1e-12, 1)]);
        assert_eq!(c.len(), 1);
        assert!(values_coincide(1e9, 1e9 + 5.0));
    }

    #[test]
    fn approximate_mode() {
        let s = dq_spectrum_formula_approx(&ia("{3,2,2;1,1,3}"), 2.0 + 2f64.sqrt()).unwrap();
        assert!(s.q.is_approximate());
        assert!(s.entries.iter().all(|e| e.value_exact.is_none()));
        assert_eq!(s.count_distinct(), 3);
        assert!(dq_spectrum_formula_approx(&ia("{3,2,2;1,1,3}"), 0.0).is_err());
    }

    #[test]
    fn spectrum_json_shape() {
        let s = dq_spectrum_formula(&ia("{9,4,1;1,4,9}"), &q("-1/2")).unwrap();
        assert_eq!(
            s.to_json().to_string(),
            r#"[{"value":3.0,"value_exact":"3","mult":15},{"value":-9.0,"value_exact":"-9","mult":5}]"#
        );
    }
}
