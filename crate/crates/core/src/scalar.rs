//! Arithmetic shared by the exact (rational) and floating-point routes.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serializer};

/// A field element type the closed-form evaluations can run in.
pub trait Scalar:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    fn from_u64(v: u64) -> Self;

    fn zero() -> Self {
        Self::from_i64(0)
    }

    fn one() -> Self {
        Self::from_i64(1)
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_u64(v: u64) -> Self {
        v as f64
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_u64(v: u64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Formats a rational as `p/r`, or `p` when the denominator is 1.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/r` or an integer literal. Zero denominators are rejected.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let int = |t: &str| -> Option<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.len() > 256 {
            return None;
        }
        t.parse().ok()
    };
    match s.split_once('/') {
        Some((p, r)) => {
            let (p, r) = (int(p)?, int(r)?);
            (r != BigInt::from(0)).then(|| BigRational::new(p, r))
        }
        None => int(s).map(BigRational::from_integer),
    }
}

/// Serde adapter: rationals as strings.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}

/// Serde adapter: optional rationals as strings or `null`.
pub mod opt_rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| parse_rational(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}"))))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text() {
        let half = parse_rational("-1/2").unwrap();
        assert_eq!(format_rational(&half), "-1/2");
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational(" 3 ").unwrap()), "3");
        assert_eq!(parse_rational("2/-4"), Some(BigRational::new(BigInt::from(-1), BigInt::from(2))));
        for bad in ["", "1/0", "a", "1/", "/2", "--1", "1.5", "+1"] {
            assert_eq!(parse_rational(bad), None, "{bad}");
        }
    }
}
