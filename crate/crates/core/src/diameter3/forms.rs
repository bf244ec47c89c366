//! Closed forms of `R_q` for diameter 3.

use num_rational::BigRational;

use crate::array::IntersectionArray;
use crate::error::{Error, Result};
use crate::poly::rat;
use crate::qdistance::RationalQ;
use crate::scalar::Scalar;

/// The parameters the closed forms read, checked for diameter 3.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Params3 {
    pub k: u64,
    pub a1: u64,
    pub a2: u64,
    pub a3: u64,
    pub b1: u64,
    pub b2: u64,
    pub c2: u64,
    pub c3: u64,
    pub n: u64,
}

impl Params3 {
    pub fn of(ia: &IntersectionArray) -> Result<Self> {
        if ia.diameter() != 3 {
            return Err(Error::WrongDiameter(ia.diameter()));
        }
        Ok(Self {
            k: ia.k(),
            a1: ia.a(1),
            a2: ia.a(2),
            a3: ia.a(3),
            b1: ia.b(1),
            b2: ia.b(2),
            c2: ia.c(2),
            c3: ia.c(3),
            n: ia.n(),
        })
    }
}

fn s<T: Scalar>(v: u64) -> T {
    T::from_u64(v)
}

/// Cubic form, valid for every eigenvalue including `k`:
///
/// `R_q(t) = [ ((q^2+q+1)a_2 - (q^2+q)c_3) k
///           + (q^2 c_2 c_3 - (q^2+q) a_1 c_3 + (q^2+q+1)(a_1 a_2 - b_1 c_2 - k)) t
///           + ((q^2+q) c_3 - (q^2+q+1)(a_1+a_2)) t^2
///           + (q^2+q+1) t^3 ] / (c_2 c_3 q^2)`
pub fn rq_cubic_in<T: Scalar>(ia: &IntersectionArray, theta: &T, q: &T) -> Result<T> {
    let p = Params3::of(ia)?;
    let q2 = q.clone() * q.clone();
    let s2 = q2.clone() + q.clone() + T::one();
    let s1 = q2.clone() + q.clone();
    let t = theta.clone();
    let t2 = t.clone() * t.clone();
    let t3 = t2.clone() * t.clone();
    let c0 = (s2.clone() * s(p.a2) - s1.clone() * s(p.c3)) * s(p.k);
    let c1 = q2.clone() * s(p.c2 * p.c3) - s1.clone() * s(p.a1 * p.c3)
        + s2.clone() * (s::<T>(p.a1 * p.a2) - s(p.b1 * p.c2) - s(p.k));
    let c2 = s1 * s(p.c3) - s2.clone() * s(p.a1 + p.a2);
    let num = c0 + c1 * t + c2 * t2 + s2 * t3;
    Ok(num / (s::<T>(p.c2 * p.c3) * q2))
}

/// Quadratic form for a non-trivial eigenvalue:
/// `R_q(t) = -((q^2+q+1)c_2 - k + ((q+1)c_2 - a_1) t + t^2) / (c_2 q^2)`.
///
/// The caller guarantees `t != k`; see [`rq_quadratic`].
pub fn rq_quadratic_in<T: Scalar>(ia: &IntersectionArray, theta: &T, q: &T) -> Result<T> {
    let p = Params3::of(ia)?;
    let q2 = q.clone() * q.clone();
    let s2 = q2.clone() + q.clone() + T::one();
    let t = theta.clone();
    let lin = (q.clone() + T::one()) * s(p.c2) - s(p.a1);
    let inner = s2 * s(p.c2) - s(p.k) + lin * t.clone() + t.clone() * t;
    Ok(-(inner / (s::<T>(p.c2) * q2)))
}

/// Valency form:
/// `R_q(k) = (c_2(q^2+q+1)n - (q^2+q+1)c_2 - ((q+1)c_2 - a_1 - 1)k - k^2) / (c_2 q^2)`.
pub fn rq_k_quadratic_in<T: Scalar>(ia: &IntersectionArray, q: &T) -> Result<T> {
    let p = Params3::of(ia)?;
    let q2 = q.clone() * q.clone();
    let s2 = q2.clone() + q.clone() + T::one();
    let lin = (q.clone() + T::one()) * s(p.c2) - s(p.a1) - T::one();
    let num = s2.clone() * s(p.c2 * p.n) - s2 * s(p.c2) - lin * s(p.k) - s(p.k * p.k);
    Ok(num / (s::<T>(p.c2) * q2))
}

pub fn rq_cubic(ia: &IntersectionArray, theta: f64, q: f64) -> Result<f64> {
    rq_cubic_in(ia, &theta, &q)
}

pub fn rq_cubic_exact(ia: &IntersectionArray, theta: &BigRational, q: &RationalQ) -> Result<BigRational> {
    rq_cubic_in(ia, theta, q.value())
}

/// Errors with `TrivialEigenvalue` for `theta = k`.
pub fn rq_quadratic(ia: &IntersectionArray, theta: f64, q: f64) -> Result<f64> {
    Params3::of(ia)?;
    if theta == ia.k() as f64 {
        return Err(Error::TrivialEigenvalue);
    }
    rq_quadratic_in(ia, &theta, &q)
}

pub fn rq_quadratic_exact(ia: &IntersectionArray, theta: &BigRational, q: &RationalQ) -> Result<BigRational> {
    Params3::of(ia)?;
    if *theta == rat(ia.k() as i64) {
        return Err(Error::TrivialEigenvalue);
    }
    rq_quadratic_in(ia, theta, q.value())
}

pub fn rq_k_quadratic(ia: &IntersectionArray, q: f64) -> Result<f64> {
    rq_k_quadratic_in(ia, &q)
}

pub fn rq_k_quadratic_exact(ia: &IntersectionArray, q: &RationalQ) -> Result<BigRational> {
    rq_k_quadratic_in(ia, q.value())
}
