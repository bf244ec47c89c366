//! Intersection arrays `{b_0, ..., b_{D-1}; c_1, ..., c_D}` and the
//! parameters derived from them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Parameters that follow from an intersection array by the defining
/// identities `a_i + b_i + c_i = k` and `k_i c_i = k_{i-1} b_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedParams {
    /// `a_0, ..., a_D`.
    pub a: Vec<u64>,
    /// `k_0, ..., k_D`.
    pub kseq: Vec<u64>,
    /// Number of vertices, `sum k_i`.
    pub n: u64,
}

/// A validated intersection array of a (putative) distance-regular graph.
///
/// Construction checks `c_1 = 1`, positivity, `a_i >= 0`, integrality of
/// every `k_i` and, unless built with [`IntersectionArray::new_permissive`],
/// that `b` is nonincreasing and `c` nondecreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        Self::build(b, c, true)
    }

    /// Same as [`IntersectionArray::new`] but without the monotonicity check.
    pub fn new_permissive(b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        Self::build(b, c, false)
    }

    fn build(b: Vec<u64>, c: Vec<u64>, monotone: bool) -> Result<Self> {
        if b.len() != c.len() {
            return Err(Error::InvalidArray(format!("b has {} entries but c has {}", b.len(), c.len())));
        }
        if b.len() < 2 {
            return Err(Error::InvalidArray("diameter must be at least 2".into()));
        }
        if b.iter().chain(c.iter()).any(|&x| x == 0) {
            return Err(Error::InvalidArray("entries must be positive".into()));
        }
        if c[0] != 1 {
            return Err(Error::InvalidArray(format!("c_1 = {} but must be 1", c[0])));
        }
        let k = b[0];
        let d = b.len();
        for i in 1..=d {
            let bi = if i < d { b[i] } else { 0 };
            let ci = c[i - 1];
            if bi.checked_add(ci).is_none_or(|s| s > k) {
                return Err(Error::InvalidArray(format!("a_{i} = k - b_{i} - c_{i} is negative")));
            }
        }
        if monotone {
            if b.windows(2).any(|w| w[1] > w[0]) {
                return Err(Error::InvalidArray("b_i must be nonincreasing".into()));
            }
            if c.windows(2).any(|w| w[1] < w[0]) {
                return Err(Error::InvalidArray("c_i must be nondecreasing".into()));
            }
        }
        let ia = Self { b, c };
        ia.try_derive()?;
        Ok(ia)
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// The valency `k = b_0`.
    pub fn k(&self) -> u64 {
        self.b[0]
    }

    /// `b_i` for `0 <= i <= D`, with `b_D = 0`.
    pub fn b(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `0 <= i <= D`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `a_i = k - b_i - c_i`.
    pub fn a(&self, i: usize) -> u64 {
        self.k() - self.b(i) - self.c(i)
    }

    pub fn b_seq(&self) -> &[u64] {
        &self.b
    }

    pub fn c_seq(&self) -> &[u64] {
        &self.c
    }

    fn try_derive(&self) -> Result<DerivedParams> {
        let d = self.diameter();
        let a = (0..=d).map(|i| self.a(i)).collect();
        let mut kseq = vec![1u64];
        for i in 1..=d {
            let num = kseq[i - 1].checked_mul(self.b(i - 1)).ok_or(Error::Overflow)?;
            if num % self.c(i) != 0 {
                return Err(Error::NonIntegralValency { index: i });
            }
            kseq.push(num / self.c(i));
        }
        let n = kseq.iter().try_fold(0u64, |acc, &x| acc.checked_add(x)).ok_or(Error::Overflow)?;
        Ok(DerivedParams { a, kseq, n })
    }

    pub fn derived(&self) -> DerivedParams {
        self.try_derive().expect("validated at construction")
    }

    /// `k_i`, the number of vertices at distance `i` from a fixed vertex.
    pub fn k_i(&self, i: usize) -> u64 {
        self.derived().kseq[i]
    }

    pub fn n(&self) -> u64 {
        self.derived().n
    }

    /// Cover index `r` when the array is antipodal: `b_i = c_{D-i}` for all
    /// `i != floor(D/2)` and `r = 1 + b_d / c_{D-d}` is an integer `>= 2`.
    pub fn antipodal_r(&self) -> Option<u64> {
        let d_max = self.diameter();
        let d = d_max / 2;
        let symmetric = (0..d_max).filter(|&i| i != d).all(|i| self.b(i) == self.c(d_max - i));
        if !symmetric {
            return None;
        }
        let (num, den) = (self.b(d), self.c(d_max - d));
        (num % den == 0).then(|| 1 + num / den).filter(|&r| r >= 2)
    }

    pub fn is_antipodal(&self) -> bool {
        self.antipodal_r().is_some()
    }

    /// `a_i = 0` for every `i`.
    pub fn is_bipartite(&self) -> bool {
        (0..=self.diameter()).all(|i| self.a(i) == 0)
    }
}

/// Derived parameters of `ia`.
pub fn derive(ia: &IntersectionArray) -> DerivedParams {
    ia.derived()
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

/// Parses `{b0,b1,...;c1,c2,...}`; whitespace is allowed between tokens.
pub fn parse_array(s: &str) -> Result<IntersectionArray> {
    let (b, c) = parse_array_parts(s)?;
    IntersectionArray::new(b, c)
}

/// Lexes the text form without validating the array.
pub fn parse_array_parts(s: &str) -> Result<(Vec<u64>, Vec<u64>)> {
    let inner = s
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("expected {{b;c}}, got {s:?}")))?;
    let mut halves = inner.split(';');
    let (Some(b), Some(c), None) = (halves.next(), halves.next(), halves.next()) else {
        return Err(Error::Parse("expected exactly one ';'".into()));
    };
    let nums = |part: &str| -> Result<Vec<u64>> {
        part.split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok.is_empty() || !tok.bytes().all(|ch| ch.is_ascii_digit()) {
                    return Err(Error::Parse(format!("bad integer {tok:?}")));
                }
                tok.parse::<u64>().map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
            })
            .collect()
    };
    Ok((nums(b)?, nums(c)?))
}

impl FromStr for IntersectionArray {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_array(s)
    }
}

impl Serialize for IntersectionArray {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntersectionArray {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_array(&s).map_err(serde::de::Error::custom)
    }
}
