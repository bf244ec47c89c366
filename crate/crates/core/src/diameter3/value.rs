use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::rat;
use crate::qdistance::{values_coincide, QRegion, QValue, RationalQ};
use crate::scalar::{format_rational, rational_string};
use crate::spectrum::{EigenForm, Eigenvalue};

/// A real number that is rational, of the form `p + s*sqrt(d)`, or only
/// known numerically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RealValue {
    Rational {
        #[serde(with = "rational_string")]
        value: BigRational,
    },
    /// `rational + coeff * sqrt(radicand)` with a squarefree radicand > 1.
    Surd {
        #[serde(with = "rational_string")]
        rational: BigRational,
        #[serde(with = "rational_string")]
        coeff: BigRational,
        radicand: u64,
    },
    Numeric {
        value: f64,
    },
}

fn squarefree_split(mut n: u64) -> (u64, u64) {
    let mut outside = 1;
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p * p) {
            n /= p * p;
            outside *= p;
        }
        p += 1;
    }
    (outside, n)
}

impl RealValue {
    pub fn rational(value: BigRational) -> Self {
        RealValue::Rational { value }
    }

    pub fn integer(v: i64) -> Self {
        RealValue::Rational { value: rat(v) }
    }

    pub fn from_eigenvalue(theta: &Eigenvalue) -> Self {
        match theta.form {
            EigenForm::Integer { value } => RealValue::integer(value),
            EigenForm::Quadratic { trace, norm, plus } => {
                let disc = (trace as i128 * trace as i128 - 4 * norm as i128) as u64;
                let (outside, radicand) = squarefree_split(disc);
                let half = BigRational::new(BigInt::from(outside), BigInt::from(2));
                RealValue::Surd {
                    rational: BigRational::new(BigInt::from(trace), BigInt::from(2)),
                    coeff: if plus { half } else { -half },
                    radicand,
                }
            }
            EigenForm::Numeric => RealValue::Numeric { value: theta.value },
        }
    }

    pub fn from_qvalue(q: &QValue) -> Self {
        match q {
            QValue::Exact(q) => RealValue::rational(q.value().clone()),
            QValue::Approx(v) => RealValue::Numeric { value: *v },
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            RealValue::Rational { value } => value.to_f64().unwrap_or(f64::NAN),
            RealValue::Surd { rational, coeff, radicand } => {
                rational.to_f64().unwrap_or(f64::NAN) + coeff.to_f64().unwrap_or(f64::NAN) * (*radicand as f64).sqrt()
            }
            RealValue::Numeric { value } => *value,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            RealValue::Rational { value } => Some(value),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, RealValue::Numeric { .. })
    }

    /// `(self + shift) / scale`, staying exact where possible.
    pub fn affine(&self, shift: &BigRational, scale: &BigRational) -> Self {
        match self {
            RealValue::Rational { value } => RealValue::rational((value + shift) / scale),
            RealValue::Surd { rational, coeff, radicand } => {
                RealValue::Surd { rational: (rational + shift) / scale, coeff: coeff / scale, radicand: *radicand }
            }
            RealValue::Numeric { value } => RealValue::Numeric {
                value: (value + shift.to_f64().unwrap_or(f64::NAN)) / scale.to_f64().unwrap_or(f64::NAN),
            },
        }
    }

    /// Equality: exact between exact forms, by the clustering rule once a
    /// numeric value is involved.
    pub fn same_as(&self, other: &RealValue) -> bool {
        match (self, other) {
            (RealValue::Rational { value: x }, RealValue::Rational { value: y }) => x == y,
            (RealValue::Surd { .. }, RealValue::Surd { .. }) => self == other,
            (RealValue::Rational { .. }, RealValue::Surd { .. })
            | (RealValue::Surd { .. }, RealValue::Rational { .. }) => false,
            _ => values_coincide(self.to_f64(), other.to_f64()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RealValue::Rational { value } => value.is_zero(),
            RealValue::Surd { .. } => false,
            RealValue::Numeric { value } => values_coincide(*value, 0.0),
        }
    }

    /// Region of a nonzero value seen as a deformation parameter.
    pub fn region(&self) -> Option<QRegion> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            RealValue::Rational { value } => RationalQ::new(value.clone()).expect("nonzero").region(),
            _ => QValue::Approx(self.to_f64()).region(),
        })
    }

    /// The value as a usable `q`: exact for rationals, approximate otherwise.
    pub fn to_q(&self) -> Option<QValue> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            RealValue::Rational { value } => QValue::Exact(RationalQ::new(value.clone()).expect("nonzero")),
            _ => QValue::Approx(self.to_f64()),
        })
    }
}

impl fmt::Display for RealValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealValue::Rational { value } => f.write_str(&format_rational(value)),
            RealValue::Surd { rational, coeff, radicand } => {
                if !rational.is_zero() {
                    f.write_str(&format_rational(rational))?;
                }
                let sign = if coeff.is_negative() {
                    "-"
                } else if rational.is_zero() {
                    ""
                } else {
                    "+"
                };
                let mag = coeff.abs();
                if mag.is_one() {
                    write!(f, "{sign}sqrt({radicand})")
                } else {
                    write!(f, "{sign}{}*sqrt({radicand})", format_rational(&mag))
                }
            }
            RealValue::Numeric { value } => write!(f, "~{value:.12}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surd_from_quadratic_eigenvalue() {
        let th = Eigenvalue { value: 2f64.sqrt(), form: EigenForm::Quadratic { trace: 0, norm: -2, plus: true } };
        let v = RealValue::from_eigenvalue(&th);
        assert_eq!(v.to_string(), "sqrt(2)");
        let q = v.affine(&rat(3), &rat(1)).affine(&rat(-1), &rat(1));
        assert_eq!(q.to_string(), "2+sqrt(2)");
        assert!((q.to_f64() - (2.0 + 2f64.sqrt())).abs() < 1e-15);

        let th =
            Eigenvalue { value: -2.0 - 13f64.sqrt(), form: EigenForm::Quadratic { trace: -4, norm: -9, plus: false } };
        assert_eq!(RealValue::from_eigenvalue(&th).to_string(), "-2-sqrt(13)");
        let th = Eigenvalue { value: 0.0, form: EigenForm::Quadratic { trace: 1, norm: -3, plus: true } };
        assert_eq!(RealValue::from_eigenvalue(&th).to_string(), "1/2+1/2*sqrt(13)");
    }

    #[test]
    fn comparisons_and_regions() {
        assert!(RealValue::integer(3).same_as(&RealValue::Numeric { value: 3.0 }));
        assert!(!RealValue::integer(3).same_as(&RealValue::integer(2)));
        assert_eq!(RealValue::integer(0).region(), None);
        assert_eq!(RealValue::integer(-1).region(), Some(QRegion::MinusOne));
        assert_eq!(RealValue::Numeric { value: -0.5 }.region(), Some(QRegion::BetweenMinusOneAndZero));
        assert_eq!(squarefree_split(72), (6, 2));
    }

    #[test]
    fn serde_round_trip() {
        for v in [
            RealValue::integer(-3),
            RealValue::Surd { rational: rat(2), coeff: rat(-1), radicand: 2 },
            RealValue::Numeric { value: 0.1 },
        ] {
            let s = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<RealValue>(&s).unwrap(), v);
        }
    }
}
