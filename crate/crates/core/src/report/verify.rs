use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::AGREEMENT_TOL;
use crate::antipodal::{folded_r1_values, zero_multiplicity, zero_multiplicity_check};
use crate::array::{parse_array, IntersectionArray};
use crate::atlas::{atlas, parse_adjacency_text, verify_drg, ConcreteGraph};
use crate::diameter3::{
    critical_q, enumerate_antipodal_r, four_values, rq_cubic, rq_k_quadratic, rq_quadratic, three_distinct_at_unit_q,
    two_distinct_witnesses, value_groups,
};
use crate::error::{Error, Result};
use crate::qdistance::{
    dq_spectrum_formula, dq_spectrum_oracle, rq_value, spectra_agree, QRegion, QSpectrum, QValue, RationalQ,
};
use crate::spectrum::eigenvalues;

/// The `q` values every graph is checked at.
pub const Q_GRID: &[&str] = &["-2", "-1", "-1/2", "-1/3", "1/3", "1/2", "1", "2", "3"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckTag {
    /// Graph is distance-regular with the expected array.
    Drg,
    /// Formula spectrum equals the dense eigensolve.
    Formula,
    /// Zero eigenvalue of antipodal 2-covers.
    Antipodal,
    /// Diameter-3 classification against the oracle.
    Diameter3,
    /// Fixed values for named arrays.
    Regression,
}

impl CheckTag {
    pub const ALL: [CheckTag; 5] =
        [CheckTag::Drg, CheckTag::Formula, CheckTag::Antipodal, CheckTag::Diameter3, CheckTag::Regression];

    pub fn name(self) -> &'static str {
        match self {
            CheckTag::Drg => "drg",
            CheckTag::Formula => "formula",
            CheckTag::Antipodal => "antipodal",
            CheckTag::Diameter3 => "diameter3",
            CheckTag::Regression => "regression",
        }
    }
}

impl FromStr for CheckTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckTag::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<&str> = CheckTag::ALL.iter().map(|t| t.name()).collect();
            Error::Parse(format!("unknown filter {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

/// An extra graph to verify, optionally with the array it claims to have.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub graph: ConcreteGraph,
    pub claimed: Option<IntersectionArray>,
}

/// Reads an adjacency-list fixture. A comment line `# array: {...}` sets the
/// claimed array.
pub fn parse_fixture(name: &str, text: &str) -> Result<Fixture> {
    let mut claimed = None;
    for line in text.lines() {
        if let Some(rest) = line.trim().strip_prefix('#').map(str::trim) {
            if let Some(a) = rest.strip_prefix("array:") {
                claimed = Some(parse_array(a)?);
            }
        }
    }
    Ok(Fixture { name: name.to_string(), graph: parse_adjacency_text(text)?, claimed })
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Run only checks with this tag.
    pub filter: Option<CheckTag>,
    pub fixtures: Vec<Fixture>,
    /// Skip the bundled atlas graphs (fixtures and regressions still run).
    pub skip_atlas: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub tag: CheckTag,
    pub subject: String,
    pub check: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub checks: Vec<CheckOutcome>,
}

impl VerifySummary {
    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in self.failures() {
            let _ = writeln!(
                out,
                "FAIL [{}] {}: {}{}",
                c.tag.name(),
                c.subject,
                c.check,
                c.detail.as_ref().map_or(String::new(), |d| format!(" ({d})"))
            );
        }
        let failed = self.failures().count();
        if failed == 0 {
            let _ = writeln!(out, "all {} checks passed", self.checks.len());
        } else {
            let _ = writeln!(out, "{failed} of {} checks failed", self.checks.len());
        }
        out
    }
}

struct Recorder<'a> {
    filter: Option<CheckTag>,
    out: &'a mut Vec<CheckOutcome>,
}

impl Recorder<'_> {
    fn wants(&self, tag: CheckTag) -> bool {
        self.filter.is_none_or(|f| f == tag)
    }

    fn record(&mut self, tag: CheckTag, subject: &str, check: &str, result: std::result::Result<(), String>) {
        if !self.wants(tag) {
            return;
        }
        self.out.push(CheckOutcome {
            tag,
            subject: subject.to_string(),
            check: check.to_string(),
            passed: result.is_ok(),
            detail: result.err(),
        });
    }
}

fn grid() -> Vec<QValue> {
    Q_GRID.iter().map(|s| QValue::Exact(s.parse().expect("grid literal"))).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err_text(e: Error) -> String {
    e.to_string()
}

/// Formula against oracle at every grid `q`, caching the oracle spectra.
fn check_formula(
    rec: &mut Recorder,
    subject: &str,
    g: &ConcreteGraph,
    ia: &IntersectionArray,
) -> Vec<(QValue, QSpectrum)> {
    let mut oracles = Vec::new();
    for q in grid() {
        let result = (|| -> std::result::Result<QSpectrum, String> {
            let oracle = dq_spectrum_oracle(g, &q).map_err(err_text)?;
            let formula = dq_spectrum_formula(ia, q.exact().expect("grid is exact")).map_err(err_text)?;
            spectra_agree(&formula, &oracle, AGREEMENT_TOL)?;
            Ok(oracle)
        })();
        rec.record(
            CheckTag::Formula,
            subject,
            &format!("formula = oracle at q = {q}"),
            result.as_ref().map(|_| ()).map_err(Clone::clone),
        );
        if let Ok(o) = result {
            oracles.push((q, o));
        }
    }
    oracles
}

fn check_antipodal(rec: &mut Recorder, subject: &str, g: &ConcreteGraph, ia: &IntersectionArray) {
    if ia.antipodal_r() != Some(2) || !rec.wants(CheckTag::Antipodal) {
        return;
    }
    let formula = zero_multiplicity_check(ia);
    rec.record(
        CheckTag::Antipodal,
        subject,
        "zero multiplicity and distinct bound (formula)",
        match &formula {
            Ok(r) => ensure(r.pass, || format!("zero_mult {} distinct {}", r.zero_mult, r.distinct)),
            Err(e) => Err(e.to_string()),
        },
    );
    let n = ia.n() as f64;
    rec.record(
        CheckTag::Antipodal,
        subject,
        "R_1 vanishes on folded eigenvalues",
        folded_r1_values(ia).map_err(err_text).and_then(|vals| match vals.iter().find(|(_, v)| v.abs() > 1e-8 * n) {
            Some((t, v)) => Err(format!("R_1({t}) = {v}")),
            None => Ok(()),
        }),
    );
    let one = QValue::Exact(RationalQ::from_ratio(1, 1).expect("nonzero"));
    let oracle = dq_spectrum_oracle(g, &one);
    rec.record(
        CheckTag::Antipodal,
        subject,
        "zero multiplicity and distinct bound (oracle)",
        match (&formula, oracle) {
            (Ok(r), Ok(o)) => {
                let (zm, dc) = (zero_multiplicity(&o), o.count_distinct() as u64);
                ensure(zm >= r.floor_d_over_2 && dc <= r.bound && zm == r.zero_mult && dc == r.distinct, || {
                    format!("oracle zero_mult {zm} distinct {dc}")
                })
            }
            (Err(e), _) => Err(e.to_string()),
            (_, Err(e)) => Err(e.to_string()),
        },
    );
}

fn check_diameter3(
    rec: &mut Recorder,
    subject: &str,
    ia: &IntersectionArray,
    oracles: &[(QValue, QSpectrum)],
    g: &ConcreteGraph,
) {
    if ia.diameter() != 3 || !rec.wants(CheckTag::Diameter3) {
        return;
    }
    let unit = oracles.iter().find(|(q, _)| q.to_f64() == 1.0).map(|(_, s)| s.count_distinct());
    rec.record(
        CheckTag::Diameter3,
        subject,
        "three distinct at q = 1 iff c_2 + a_3 - b_2 is an eigenvalue",
        match (three_distinct_at_unit_q(ia), unit) {
            (Ok(pred), Some(count)) => {
                ensure(pred == (count == 3), || format!("predicate {pred}, oracle count {count}"))
            }
            (Err(e), _) => Err(e.to_string()),
            (_, None) => Err("no oracle spectrum at q = 1".into()),
        },
    );
    rec.record(CheckTag::Diameter3, subject, "two-distinct search matches oracle", two_distinct_vs_oracle(ia, g));
    rec.record(CheckTag::Diameter3, subject, "cubic = quadratic = recurrence", triple_agreement(ia));
    rec.record(
        CheckTag::Diameter3,
        subject,
        "non-trivial values take at least 2 distinct values",
        nontrivial_at_least_two(ia),
    );
    if ia.is_bipartite() {
        rec.record(CheckTag::Diameter3, subject, "bipartite: at least 3 distinct on (-1,0) grid", bipartite_grid(ia));
    }
}

fn two_distinct_vs_oracle(ia: &IntersectionArray, g: &ConcreteGraph) -> std::result::Result<(), String> {
    let witnesses = two_distinct_witnesses(ia).map_err(err_text)?;
    let crit = critical_q(ia).map_err(err_text)?;
    for l in [2, 3] {
        let e = crit.q(l);
        if e.region != Some(QRegion::BetweenMinusOneAndZero) {
            continue;
        }
        let q = e.value.to_q().expect("nonzero");
        let count = dq_spectrum_oracle(g, &q).map_err(err_text)?.count_distinct();
        let found = witnesses.iter().any(|w| w.l == l);
        if found != (count == 2) {
            return Err(format!("q_{l} = {}: witness {found}, oracle count {count}", e.value));
        }
    }
    Ok(())
}

/// Cubic, quadratic and recurrence values agree at every eigenvalue and
/// grid `q` within `1e-9` relative.
pub(crate) fn triple_agreement(ia: &IntersectionArray) -> std::result::Result<(), String> {
    let th = eigenvalues(ia).map_err(err_text)?;
    for q in grid() {
        let qf = q.to_f64();
        for (i, t) in th.iter().enumerate() {
            let direct = rq_value(ia, t.value, qf);
            let cubic = rq_cubic(ia, t.value, qf).map_err(err_text)?;
            let closed =
                if i == 0 { rq_k_quadratic(ia, qf) } else { rq_quadratic(ia, t.value, qf) }.map_err(err_text)?;
            let scale = 1f64.max(direct.abs());
            if (cubic - direct).abs() > 1e-9 * scale || (closed - direct).abs() > 1e-9 * scale {
                return Err(format!("theta = {t}, q = {q}: cubic {cubic}, quadratic {closed}, recurrence {direct}"));
            }
        }
    }
    Ok(())
}

pub(crate) fn nontrivial_at_least_two(ia: &IntersectionArray) -> std::result::Result<(), String> {
    for q in grid() {
        let vals = four_values(ia, &q).map_err(err_text)?;
        if value_groups(&vals[1..]).len() < 2 {
            return Err(format!("q = {q}"));
        }
    }
    Ok(())
}

/// `q = -j/101`, `j = 1..=100`.
pub(crate) fn open_interval_grid() -> Vec<QValue> {
    (1..=100).map(|j| QValue::Exact(RationalQ::from_ratio(-j, 101).expect("nonzero"))).collect()
}

pub(crate) fn bipartite_grid(ia: &IntersectionArray) -> std::result::Result<(), String> {
    for q in open_interval_grid() {
        let count = value_groups(&four_values(ia, &q).map_err(err_text)?).len();
        if count < 3 {
            return Err(format!("q = {q}: {count} distinct"));
        }
    }
    Ok(())
}

fn spectrum_is(ia: &str, q: &str, want: &[(i64, u64)]) -> std::result::Result<(), String> {
    let ia: IntersectionArray = ia.parse().map_err(err_text)?;
    let s = dq_spectrum_formula(&ia, &q.parse().map_err(err_text)?).map_err(err_text)?;
    let got: Vec<(Option<String>, u64)> =
        s.entries.iter().map(|e| (e.value_exact.as_ref().map(crate::scalar::format_rational), e.mult)).collect();
    let want: Vec<(Option<String>, u64)> = want.iter().map(|(v, m)| (Some(v.to_string()), *m)).collect();
    ensure(got == want, || format!("got {got:?}"))
}

fn regressions(rec: &mut Recorder) {
    if !rec.wants(CheckTag::Regression) {
        return;
    }
    let subject = "arrays";
    rec.record(
        CheckTag::Regression,
        subject,
        "{9,4,1;1,4,9} at q = -1/2",
        spectrum_is("{9,4,1;1,4,9}", "-1/2", &[(3, 15), (-9, 5)]),
    );
    rec.record(
        CheckTag::Regression,
        subject,
        "{35,18,1;1,18,35} at q = -1/3",
        spectrum_is("{35,18,1;1,18,35}", "-1/3", &[(8, 56), (-28, 16)]),
    );
    rec.record(
        CheckTag::Regression,
        subject,
        "{15,8,3;1,4,9} at q = -1/2",
        spectrum_is("{15,8,3;1,4,9}", "-1/2", &[(15, 21), (-9, 35)]),
    );
    rec.record(
        CheckTag::Regression,
        subject,
        "antipodal 2-cover enumeration",
        enumerate_antipodal_r(2).map_err(err_text).and_then(|e| {
            let rows: Vec<(u64, u64, u64)> = e.candidates.iter().map(|c| (c.theta1, c.m1, c.n)).collect();
            ensure(rows == [(1, 3, 8), (3, 5, 20), (5, 6, 32), (9, 7, 56), (21, 8, 128)] && e.bound == 128, || {
                format!("{rows:?}, bound {}", e.bound)
            })
        }),
    );
    for a in ["{3,2,1;1,2,3}", "{3,2,2;1,1,3}", "{5,4,1;1,4,5}"] {
        let ia: IntersectionArray = a.parse().expect("literal");
        rec.record(
            CheckTag::Regression,
            subject,
            &format!("{a}: at least 3 distinct on (-1,0) grid"),
            bipartite_grid(&ia),
        );
    }
}

fn verify_graph(rec: &mut Recorder, subject: &str, g: &ConcreteGraph, claimed: Option<&IntersectionArray>) {
    let found = verify_drg(g);
    let drg = match (&found, claimed) {
        (None, _) => Err("not distance-regular".to_string()),
        (Some(a), Some(c)) if a != c => Err(format!("array {a}, claimed {c}")),
        _ => Ok(()),
    };
    let ok = drg.is_ok();
    rec.record(CheckTag::Drg, subject, "distance-regular with expected array", drg);
    let Some(ia) = found.filter(|_| ok) else { return };
    let oracles = if rec.wants(CheckTag::Formula) || rec.wants(CheckTag::Diameter3) {
        check_formula(rec, subject, g, &ia)
    } else {
        Vec::new()
    };
    check_antipodal(rec, subject, g, &ia);
    check_diameter3(rec, subject, &ia, &oracles, g);
}

/// Runs the invariant suite over the atlas and any fixtures.
pub fn cmd_verify_atlas(opts: &VerifyOptions) -> VerifySummary {
    let mut checks = Vec::new();
    let mut rec = Recorder { filter: opts.filter, out: &mut checks };
    if !opts.skip_atlas {
        for entry in atlas() {
            verify_graph(&mut rec, &entry.name, &entry.graph, None);
        }
    }
    for f in &opts.fixtures {
        verify_graph(&mut rec, &f.name, &f.graph, f.claimed.as_ref());
    }
    regressions(&mut rec);
    // formula checks also feed diameter-3 checks; drop them when filtered out
    if let Some(tag) = opts.filter {
        checks.retain(|c| c.tag == tag);
    }
    VerifySummary { checks }
}
