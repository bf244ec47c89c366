//! How many distinct values `R_q(k), R_q(theta_1), R_q(theta_2), R_q(theta_3)`
//! take, and for which `q`.
//!
//! With `k > theta_1 > theta_2 > theta_3`, two non-trivial values coincide,
//! `R_q(theta_i) = R_q(theta_j)`, exactly when the third eigenvalue satisfies
//! `theta_l = q c_2 - b_2 + a_3`, i.e. when `q` is the critical value
//! `q_l = (theta_l - a_3 + b_2) / c_2`.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::forms::Params3;
use super::value::RealValue;
use crate::array::IntersectionArray;
use crate::error::{Error, Result};
use crate::poly::rat;
use crate::qdistance::{cluster, rq_at, values_coincide, QEigen, QRegion, QValue};
use crate::spectrum::{adjacency_spectrum, eigenvalues, Eigenvalue};

fn thetas3(ia: &IntersectionArray) -> Result<(Params3, Vec<Eigenvalue>)> {
    let p = Params3::of(ia)?;
    Ok((p, eigenvalues(ia)?))
}

/// One critical value `q_l`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalEntry {
    pub l: usize,
    pub value: RealValue,
    /// `q_l = 0`, which happens exactly when `theta_2 = -1`.
    pub degenerate: bool,
    pub region: Option<QRegion>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalQ {
    pub entries: Vec<CriticalEntry>,
}

impl CriticalQ {
    pub fn q(&self, l: usize) -> &CriticalEntry {
        &self.entries[l - 1]
    }

    /// Whether `q` equals one of the non-degenerate critical values.
    pub fn contains(&self, q: &QValue) -> bool {
        let q = RealValue::from_qvalue(q);
        self.entries.iter().any(|e| !e.degenerate && e.value.same_as(&q))
    }
}

pub fn critical_q(ia: &IntersectionArray) -> Result<CriticalQ> {
    let (p, th) = thetas3(ia)?;
    let shift = rat(p.b2 as i64) - rat(p.a3 as i64);
    let scale = rat(p.c2 as i64);
    let entries = (1..=3)
        .map(|l| {
            let value = RealValue::from_eigenvalue(&th[l]).affine(&shift, &scale);
            CriticalEntry { l, degenerate: value.is_zero(), region: value.region(), value }
        })
        .collect();
    Ok(CriticalQ { entries })
}

/// Index pairs `(i, j)`, `i < j`, with `R_q(theta_i) = R_q(theta_j)` by the
/// `theta_l = q c_2 - b_2 + a_3` criterion.
pub fn coincidence_pairs(ia: &IntersectionArray, q: &QValue) -> Result<Vec<(usize, usize)>> {
    let (p, th) = thetas3(ia)?;
    let target = match q {
        QValue::Exact(q) => RealValue::rational(q.value() * rat(p.c2 as i64) - rat(p.b2 as i64) + rat(p.a3 as i64)),
        QValue::Approx(v) => RealValue::Numeric { value: v * p.c2 as f64 - p.b2 as f64 + p.a3 as f64 },
    };
    let mut out = Vec::new();
    for l in (1..=3).rev() {
        if RealValue::from_eigenvalue(&th[l]).same_as(&target) {
            let mut pair: Vec<usize> = (1..=3).filter(|&i| i != l).collect();
            pair.sort_unstable();
            out.push((pair[0], pair[1]));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// `R_q(k), R_q(theta_1), R_q(theta_2), R_q(theta_3)`.
pub fn four_values(ia: &IntersectionArray, q: &QValue) -> Result<Vec<(f64, Option<BigRational>)>> {
    let (_, th) = thetas3(ia)?;
    Ok(th.iter().map(|t| rq_at(ia, t, q)).collect())
}

fn same(x: &(f64, Option<BigRational>), y: &(f64, Option<BigRational>)) -> bool {
    match (&x.1, &y.1) {
        (Some(a), Some(b)) => a == b,
        _ => values_coincide(x.0, y.0),
    }
}

/// Groups of indices `0..=3` (0 standing for `k`) with equal `R_q`, each
/// sorted, ordered by smallest member.
pub fn value_groups(values: &[(f64, Option<BigRational>)]) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..values.len() {
        let hits: Vec<usize> =
            (0..groups.len()).filter(|&g| groups[g].iter().any(|&j| same(&values[i], &values[j]))).collect();
        match hits.split_first() {
            None => groups.push(vec![i]),
            Some((&first, rest)) => {
                for &g in rest.iter().rev() {
                    let moved = groups.remove(g);
                    groups[first].extend(moved);
                }
                groups[first].push(i);
                groups[first].sort_unstable();
            }
        }
    }
    groups.sort();
    groups
}

/// The four `q`-regimes of the distinct-count analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DistinctCase {
    /// `q` not critical, `q` outside `(-1, 0]`: exactly 4.
    #[serde(rename = "i")]
    I,
    /// `q` not critical, `-1 < q < 0`: at least 3.
    #[serde(rename = "ii")]
    II,
    /// `q` critical, outside `(-1, 0]`: exactly 3.
    #[serde(rename = "iii")]
    III,
    /// `q` critical, `-1 < q < 0`: 2 or 3.
    #[serde(rename = "iv")]
    IV,
}

impl DistinctCase {
    pub fn bounds(self) -> (usize, usize) {
        match self {
            DistinctCase::I => (4, 4),
            DistinctCase::II => (3, 4),
            DistinctCase::III => (3, 3),
            DistinctCase::IV => (2, 3),
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            DistinctCase::I => "i",
            DistinctCase::II => "ii",
            DistinctCase::III => "iii",
            DistinctCase::IV => "iv",
        }
    }
}

impl fmt::Display for DistinctCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: DistinctCase,
    /// Exact count from evaluating all four values.
    pub count: usize,
    /// Whether `count` lies within the bounds of `case`.
    pub bounds_hold: bool,
}

pub fn distinct_count_case(ia: &IntersectionArray, q: &QValue) -> Result<CaseReport> {
    let crit = critical_q(ia)?;
    let critical = crit.contains(q);
    let inside = q.region() == QRegion::BetweenMinusOneAndZero;
    let case = match (critical, inside) {
        (false, false) => DistinctCase::I,
        (false, true) => DistinctCase::II,
        (true, false) => DistinctCase::III,
        (true, true) => DistinctCase::IV,
    };
    let count = value_groups(&four_values(ia, q)?).len();
    let (lo, hi) = case.bounds();
    Ok(CaseReport { case, count, bounds_hold: (lo..=hi).contains(&count) })
}

/// At `q = 1` exactly three distinct values occur iff `c_2 + a_3 - b_2` is a
/// non-trivial eigenvalue.
pub fn three_distinct_at_unit_q(ia: &IntersectionArray) -> Result<bool> {
    let (p, th) = thetas3(ia)?;
    let target = p.c2 as i64 + p.a3 as i64 - p.b2 as i64;
    Ok(th[1..].iter().any(|t| t.as_integer() == Some(target)))
}

/// A `q` at which a bipartite array has three distinct values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BipartiteQ {
    pub l: usize,
    pub q: RealValue,
    pub region: Option<QRegion>,
    /// `q` in `(-1, 0]`, where the formula does not apply.
    pub excluded: bool,
}

/// `q = (k + theta_l)/c_2 - 1` for `l = 1, 2, 3`.
pub fn bipartite_three_distinct_q(ia: &IntersectionArray) -> Result<Vec<BipartiteQ>> {
    let (p, th) = thetas3(ia)?;
    if !ia.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let shift = rat(p.k as i64) - rat(p.c2 as i64);
    Ok((1..=3)
        .map(|l| {
            let q = RealValue::from_eigenvalue(&th[l]).affine(&shift, &rat(p.c2 as i64));
            let region = q.region();
            let excluded = matches!(region, None | Some(QRegion::BetweenMinusOneAndZero));
            BipartiteQ { l, q, region, excluded }
        })
        .collect())
}

/// For an antipodal `r`-cover: three distinct values iff
/// `theta_3 = -r/q - 1` (for `q > 0`) or `theta_1 = -r/q - 1` (for `q <= -1`).
pub fn antipodal_three_distinct(ia: &IntersectionArray, q: &QValue) -> Result<bool> {
    let (_, th) = thetas3(ia)?;
    let r = ia.antipodal_r().ok_or(Error::NotAntipodal)?;
    let region = q.region();
    if region == QRegion::BetweenMinusOneAndZero {
        return Err(Error::InvalidQRegion(q.to_string()));
    }
    let target = match q {
        QValue::Exact(q) => RealValue::rational(-rat(r as i64) / q.value() - rat(1)),
        QValue::Approx(v) => RealValue::Numeric { value: -(r as f64) / v - 1.0 },
    };
    let l = if region == QRegion::Positive { 3 } else { 1 };
    Ok(RealValue::from_eigenvalue(&th[l]).same_as(&target))
}

/// Which coincidence pattern produced two distinct values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwoDistinctCase {
    /// `R(theta_1) = R(theta_2)` and `R(k) = R(theta_3)`.
    I,
    /// `R(theta_1) = R(theta_3)` and `R(k) = R(theta_2)`.
    Ii,
    /// `R(k) = R(theta_1) = R(theta_2)`.
    Iii,
    /// `R(k) = R(theta_1) = R(theta_3)`.
    Iv,
    /// Any other split into two classes.
    Unlisted,
}

impl TwoDistinctCase {
    fn from_groups(groups: &[Vec<usize>]) -> Self {
        let g: Vec<&[usize]> = groups.iter().map(Vec::as_slice).collect();
        match g[..] {
            [[0, 3], [1, 2]] => TwoDistinctCase::I,
            [[0, 2], [1, 3]] => TwoDistinctCase::Ii,
            [[0, 1, 2], [3]] => TwoDistinctCase::Iii,
            [[0, 1, 3], [2]] => TwoDistinctCase::Iv,
            _ => TwoDistinctCase::Unlisted,
        }
    }
}

impl fmt::Display for TwoDistinctCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwoDistinctCase::I => "i",
            TwoDistinctCase::Ii => "ii",
            TwoDistinctCase::Iii => "iii",
            TwoDistinctCase::Iv => "iv",
            TwoDistinctCase::Unlisted => "unlisted",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoDistinctWitness {
    pub q: QValue,
    /// Which critical value `q_l` this is.
    pub l: usize,
    pub case: TwoDistinctCase,
    /// The two values, descending. Multiplicities are 0 when the array's
    /// multiplicities are not integral.
    pub values: Vec<QEigen>,
}

/// Every `q` among `{q_2, q_3}` in `(-1, 0)` giving exactly two distinct
/// values. `q_1 > 0` always, so it never qualifies.
pub fn two_distinct_witnesses(ia: &IntersectionArray) -> Result<Vec<TwoDistinctWitness>> {
    let crit = critical_q(ia)?;
    let mults: Option<Vec<u64>> = adjacency_spectrum(ia)?.integral_multiplicities().ok();
    let mut out = Vec::new();
    for l in [2, 3] {
        let entry = crit.q(l);
        if entry.region != Some(QRegion::BetweenMinusOneAndZero) {
            continue;
        }
        let q = entry.value.to_q().expect("region implies nonzero");
        let values = four_values(ia, &q)?;
        let groups = value_groups(&values);
        if groups.len() != 2 {
            continue;
        }
        let raw = values
            .iter()
            .enumerate()
            .map(|(i, (v, x))| QEigen { value: *v, value_exact: x.clone(), mult: mults.as_ref().map_or(0, |m| m[i]) })
            .collect();
        out.push(TwoDistinctWitness { q, l, case: TwoDistinctCase::from_groups(&groups), values: cluster(raw) });
    }
    Ok(out)
}

pub fn two_distinct_search(ia: &IntersectionArray) -> Result<Option<TwoDistinctWitness>> {
    Ok(two_distinct_witnesses(ia)?.into_iter().next())
}

/// The three eigenvalue bounds for diameter 3, clause by clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KpyBounds {
    /// `theta_1 > max(a_3 - b_2, 0)`.
    pub theta1: bool,
    /// `theta_3 < min(a_3 - b_2, -sqrt 2)`.
    pub theta3: bool,
    /// `theta_2` between `-1` and `a_3 - b_2`, ends included, either order.
    pub theta2: bool,
}

impl KpyBounds {
    pub fn all(&self) -> bool {
        self.theta1 && self.theta2 && self.theta3
    }
}

pub fn kpy_bounds(ia: &IntersectionArray) -> Result<KpyBounds> {
    let (p, th) = thetas3(ia)?;
    let m = p.a3 as f64 - p.b2 as f64;
    let (t1, t2, t3) = (th[1].value, th[2].value, th[3].value);
    let eps = 1e-9;
    let (lo, hi) = if m < -1.0 { (m, -1.0) } else { (-1.0, m) };
    Ok(KpyBounds {
        theta1: t1 > m.max(0.0) + eps,
        theta3: t3 < m.min(-(2f64.sqrt())) - eps,
        theta2: t2 >= lo - eps && t2 <= hi + eps,
    })
}

pub fn kpy_bounds_check(ia: &IntersectionArray) -> Result<bool> {
    Ok(kpy_bounds(ia)?.all())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdistance::RationalQ;

    fn ia(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    fn q(s: &str) -> QValue {
        QValue::Exact(s.parse::<RationalQ>().unwrap())
    }

    fn crit_text(s: &str) -> Vec<String> {
        critical_q(&ia(s)).unwrap().entries.iter().map(|e| e.value.to_string()).collect()
    }

    #[test]
    fn critical_values() {
        assert_eq!(crit_text("{9,4,1;1,4,9}"), ["1", "0", "-1/2"]);
        assert!(critical_q(&ia("{9,4,1;1,4,9}")).unwrap().q(2).degenerate);
        assert_eq!(crit_text("{35,18,1;1,18,35}"), ["1/3", "0", "-1/3"]);
        assert_eq!(crit_text("{15,8,3;1,4,9}"), ["1", "-1/2", "-3/2"]);
        assert!(!critical_q(&ia("{15,8,3;1,4,9}")).unwrap().q(2).degenerate);
        assert_eq!(critical_q(&ia("{3,2;1,1}")), Err(Error::WrongDiameter(2)));
    }

    #[test]
    fn coincidences() {
        let j = ia("{9,4,1;1,4,9}");
        assert_eq!(coincidence_pairs(&j, &q("-1/2")).unwrap(), vec![(1, 2)]);
        assert_eq!(coincidence_pairs(&j, &q("2")).unwrap(), vec![]);
        assert_eq!(coincidence_pairs(&ia("{35,18,1;1,18,35}"), &q("-1/3")).unwrap(), vec![(1, 2)]);
        assert_eq!(coincidence_pairs(&j, &q("1")).unwrap(), vec![(2, 3)]);
    }

    #[test]
    fn distinct_cases() {
        let j = ia("{9,4,1;1,4,9}");
        let r = distinct_count_case(&j, &q("2")).unwrap();
        assert_eq!((r.case, r.count, r.bounds_hold), (DistinctCase::I, 4, true));
        let r = distinct_count_case(&j, &q("1")).unwrap();
        assert_eq!((r.case, r.count), (DistinctCase::III, 3));
        let r = distinct_count_case(&j, &q("-1/2")).unwrap();
        assert_eq!((r.case, r.count, r.bounds_hold), (DistinctCase::IV, 2, true));
        let r = distinct_count_case(&j, &q("-1/3")).unwrap();
        assert_eq!(r.case, DistinctCase::II);
        assert_eq!(serde_json::to_string(&DistinctCase::IV).unwrap(), "\"iv\"");
    }

    #[test]
    fn unit_q() {
        assert!(three_distinct_at_unit_q(&ia("{9,4,1;1,4,9}")).unwrap());
        assert!(!three_distinct_at_unit_q(&ia("{4,3,3;1,1,2}")).unwrap());
        assert!(!three_distinct_at_unit_q(&ia("{2,1,1;1,1,1}")).unwrap());
        assert!(three_distinct_at_unit_q(&ia("{15,8,3;1,4,9}")).unwrap());
        assert!(three_distinct_at_unit_q(&ia("{24,21,3;1,3,18}")).unwrap());
    }

    #[test]
    fn bipartite_q() {
        let text = |s: &str| -> Vec<(String, bool)> {
            bipartite_three_distinct_q(&ia(s)).unwrap().iter().map(|b| (b.q.to_string(), b.excluded)).collect()
        };
        assert_eq!(text("{3,2,1;1,2,3}"), [("1".into(), false), ("0".into(), true), ("-1".into(), false)]);
        assert_eq!(
            text("{3,2,2;1,1,3}"),
            [("2+sqrt(2)".into(), false), ("2-sqrt(2)".into(), false), ("-1".into(), false)]
        );
        assert_eq!(text("{5,4,1;1,4,5}"), [("1/2".into(), false), ("0".into(), true), ("-1".into(), false)]);
        assert_eq!(bipartite_three_distinct_q(&ia("{9,4,1;1,4,9}")), Err(Error::NotBipartite));
    }

    #[test]
    fn antipodal_criterion() {
        assert!(antipodal_three_distinct(&ia("{9,4,1;1,4,9}"), &q("1")).unwrap());
        assert!(!antipodal_three_distinct(&ia("{35,18,1;1,18,35}"), &q("1")).unwrap());
        assert!(antipodal_three_distinct(&ia("{63,22,1;1,22,63}"), &q("1")).unwrap());
        assert_eq!(antipodal_three_distinct(&ia("{2,1,1;1,1,1}"), &q("1")), Err(Error::NotAntipodal));
        assert!(matches!(antipodal_three_distinct(&ia("{9,4,1;1,4,9}"), &q("-1/2")), Err(Error::InvalidQRegion(_))));
    }

    #[test]
    fn two_distinct() {
        let w = two_distinct_search(&ia("{9,4,1;1,4,9}")).unwrap().unwrap();
        assert_eq!((w.q.to_string().as_str(), w.case), ("-1/2", TwoDistinctCase::Iii));
        assert_eq!(w.values.iter().map(|e| (e.value, e.mult)).collect::<Vec<_>>(), [(3.0, 15), (-9.0, 5)]);
        let w = two_distinct_search(&ia("{15,8,3;1,4,9}")).unwrap().unwrap();
        assert_eq!((w.q.to_string().as_str(), w.case), ("-1/2", TwoDistinctCase::Ii));
        assert_eq!(w.values.iter().map(|e| e.value).collect::<Vec<_>>(), [15.0, -9.0]);
        assert_eq!(two_distinct_search(&ia("{2,1,1;1,1,1}")).unwrap(), None);
    }

    #[test]
    fn bounds() {
        for s in ["{9,4,1;1,4,9}", "{2,1,1;1,1,1}", "{3,2,2;1,1,3}", "{15,8,3;1,4,9}", "{4,3,3;1,1,2}"] {
            assert!(kpy_bounds_check(&ia(s)).unwrap(), "{s}");
        }
    }

    #[test]
    fn groups() {
        let v = |x: i64| (x as f64, Some(rat(x)));
        assert_eq!(value_groups(&[v(3), v(3), v(3), v(-9)]), vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(value_groups(&[v(15), v(-9), v(15), v(-9)]), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(value_groups(&[v(1), v(2), v(3), v(4)]).len(), 4);
    }
}
