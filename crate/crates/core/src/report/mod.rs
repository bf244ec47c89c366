//! Command implementations behind the `qdrg` binary: each returns a
//! serializable report and has a plain-text renderer.

mod verify;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use verify::{
    cmd_verify_atlas, parse_fixture, CheckOutcome, CheckTag, Fixture, VerifyOptions, VerifySummary, Q_GRID,
};

use crate::antipodal::{zero_multiplicity_check, ZeroMultiplicityReport};
use crate::array::{parse_array, IntersectionArray};
use crate::atlas::{by_name, verify_drg};
use crate::diameter3::{
    antipodal_three_distinct, bipartite_three_distinct_q, coincidence_pairs, critical_q, distinct_count_case,
    enumerate_antipodal_r, kpy_bounds, three_distinct_at_unit_q, two_distinct_search, BipartiteQ, CriticalQ,
    DistinctCase, Enumeration, KpyBounds, RealValue, TwoDistinctWitness,
};
use crate::error::{Error, Result};
use crate::feasibility::{feasibility_check, Violation};
use crate::qdistance::{
    dq_spectrum_formula_value, dq_spectrum_oracle, spectra_agree, QEigen, QRegion, QValue, RationalQ,
};
use crate::scalar::format_rational;

/// Relative tolerance for formula/oracle agreement.
pub const AGREEMENT_TOL: f64 = 1e-8;

/// Process exit code for an error: 2 for bad input, 1 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::InvalidArray(_) | Error::ZeroQ | Error::OutOfRange(_) => 2,
        Error::NonIntegralValency { .. } | Error::Overflow => 2,
        _ => 1,
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Atlas graph to cross-check against.
    pub graph: Option<String>,
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub graph: String,
    /// Array extracted from the graph, if it is distance-regular.
    pub graph_array: Option<IntersectionArray>,
    pub agree: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classifications {
    pub antipodal_r: Option<u64>,
    pub bipartite: bool,
    pub feasibility: Vec<Violation>,
    pub three_distinct_at_unit_q: Option<bool>,
    pub coincidence_pairs: Option<Vec<(usize, usize)>>,
    pub eigenvalue_bounds: Option<KpyBounds>,
    pub antipodal_three_distinct: Option<bool>,
    pub bipartite_three_distinct_q: Option<Vec<BipartiteQ>>,
    pub zero_multiplicity: Option<ZeroMultiplicityReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub array: IntersectionArray,
    pub q: QValue,
    pub spectrum: Vec<QEigen>,
    pub distinct: usize,
    pub case: Option<DistinctCase>,
    pub case_bounds_hold: Option<bool>,
    pub critical_q: Option<CriticalQ>,
    pub witness: Option<TwoDistinctWitness>,
    pub classifications: Classifications,
    pub oracle: Option<OracleCheck>,
    /// Sections that did not apply, with the reason.
    pub skipped: Vec<String>,
}

impl AnalysisReport {
    /// True unless an oracle cross-check ran and disagreed.
    pub fn ok(&self) -> bool {
        self.oracle.as_ref().is_none_or(|o| o.agree)
    }
}

fn oracle_check(ia: &IntersectionArray, q: &QValue, name: &str, formula: &[QEigen]) -> Result<OracleCheck> {
    let graph = by_name(name)?;
    let graph_array = verify_drg(&graph);
    let mut check =
        OracleCheck { graph: name.to_string(), graph_array: graph_array.clone(), agree: false, detail: None };
    if graph_array.as_ref() != Some(ia) {
        check.detail = Some(match graph_array {
            Some(a) => format!("graph has array {a}, not {ia}"),
            None => "graph is not distance-regular".to_string(),
        });
        return Ok(check);
    }
    let oracle = dq_spectrum_oracle(&graph, q)?;
    let formula = crate::qdistance::QSpectrum { q: q.clone(), entries: formula.to_vec() };
    match spectra_agree(&formula, &oracle, AGREEMENT_TOL) {
        Ok(()) => check.agree = true,
        Err(e) => check.detail = Some(e),
    }
    Ok(check)
}

/// Full analysis of one array at one `q`.
pub fn cmd_analyze(array_text: &str, q_text: &str, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let ia = parse_array(array_text)?;
    let q = QValue::Exact(q_text.parse::<RationalQ>()?);
    let spectrum = dq_spectrum_formula_value(&ia, &q)?;
    let mut skipped = Vec::new();
    let antipodal_r = ia.antipodal_r();
    let mut cls = Classifications {
        antipodal_r,
        bipartite: ia.is_bipartite(),
        feasibility: feasibility_check(&ia),
        three_distinct_at_unit_q: None,
        coincidence_pairs: None,
        eigenvalue_bounds: None,
        antipodal_three_distinct: None,
        bipartite_three_distinct_q: None,
        zero_multiplicity: None,
    };
    let (mut case, mut case_bounds_hold, mut crit, mut witness) = (None, None, None, None);
    if ia.diameter() == 3 {
        let report = distinct_count_case(&ia, &q)?;
        case = Some(report.case);
        case_bounds_hold = Some(report.bounds_hold);
        crit = Some(critical_q(&ia)?);
        witness = two_distinct_search(&ia)?;
        cls.three_distinct_at_unit_q = Some(three_distinct_at_unit_q(&ia)?);
        cls.coincidence_pairs = Some(coincidence_pairs(&ia, &q)?);
        cls.eigenvalue_bounds = Some(kpy_bounds(&ia)?);
        if antipodal_r.is_some() {
            match antipodal_three_distinct(&ia, &q) {
                Ok(v) => cls.antipodal_three_distinct = Some(v),
                Err(e) => skipped.push(format!("antipodal three-distinct test: {e}")),
            }
        }
        if cls.bipartite {
            cls.bipartite_three_distinct_q = Some(bipartite_three_distinct_q(&ia)?);
        }
    } else {
        skipped.push(format!("diameter-3 analyses: diameter is {}", ia.diameter()));
    }
    match antipodal_r {
        Some(2) => cls.zero_multiplicity = Some(zero_multiplicity_check(&ia)?),
        Some(r) => skipped.push(format!("zero-multiplicity check: cover index is {r}, not 2")),
        None => skipped.push("zero-multiplicity check: array is not antipodal".to_string()),
    }
    let oracle = match (&opts.graph, opts.oracle) {
        (Some(name), true) => Some(oracle_check(&ia, &q, name, &spectrum.entries)?),
        (None, true) => {
            skipped.push("oracle: no --graph given".to_string());
            None
        }
        (Some(_), false) => {
            skipped.push("oracle: --graph given without --oracle".to_string());
            None
        }
        (None, false) => None,
    };
    Ok(AnalysisReport {
        array: ia,
        q,
        distinct: spectrum.count_distinct(),
        spectrum: spectrum.entries,
        case,
        case_bounds_hold,
        critical_q: crit,
        witness,
        classifications: cls,
        oracle,
        skipped,
    })
}

fn fmt_value(e: &QEigen) -> String {
    match &e.value_exact {
        Some(x) => format_rational(x),
        None => format!("{:.12}", e.value),
    }
}

fn fmt_spectrum(entries: &[QEigen]) -> String {
    entries.iter().map(|e| format!("{}^{}", fmt_value(e), e.mult)).collect::<Vec<_>>().join(", ")
}

fn fmt_witness(w: &TwoDistinctWitness) -> String {
    format!("q = {} (q_{}), case {}: {}", w.q, w.l, w.case, fmt_spectrum(&w.values))
}

pub fn render_analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "array     {}", r.array);
    let _ = writeln!(out, "q         {}", r.q);
    let _ = writeln!(out, "spectrum  {}", fmt_spectrum(&r.spectrum));
    let _ = writeln!(out, "distinct  {}", r.distinct);
    if let Some(case) = r.case {
        let held = if r.case_bounds_hold == Some(true) { "bounds hold" } else { "BOUNDS FAIL" };
        let _ = writeln!(out, "case      {case} ({held})");
    }
    if let Some(c) = &r.critical_q {
        let qs: Vec<String> = c
            .entries
            .iter()
            .map(|e| format!("q_{} = {}{}", e.l, e.value, if e.degenerate { " (degenerate)" } else { "" }))
            .collect();
        let _ = writeln!(out, "critical  {}", qs.join(", "));
    }
    let cls = &r.classifications;
    let _ = writeln!(out, "antipodal {}", cls.antipodal_r.map_or("no".to_string(), |r| format!("yes, r = {r}")));
    let _ = writeln!(out, "bipartite {}", if cls.bipartite { "yes" } else { "no" });
    if cls.feasibility.is_empty() {
        let _ = writeln!(out, "feasible  yes");
    } else {
        for v in &cls.feasibility {
            let _ = writeln!(out, "violation {v}");
        }
    }
    if let Some(v) = cls.three_distinct_at_unit_q {
        let _ = writeln!(out, "three distinct at q = 1: {v}");
    }
    if let Some(v) = cls.antipodal_three_distinct {
        let _ = writeln!(out, "antipodal three-distinct criterion at q: {v}");
    }
    if let Some(list) = &cls.bipartite_three_distinct_q {
        let qs: Vec<String> =
            list.iter().map(|b| format!("{}{}", b.q, if b.excluded { " (excluded)" } else { "" })).collect();
        let _ = writeln!(out, "bipartite three-distinct q: {}", qs.join(", "));
    }
    match &r.witness {
        Some(w) => {
            let _ = writeln!(out, "two distinct at {}", fmt_witness(w));
        }
        None if r.case.is_some() => {
            let _ = writeln!(out, "two distinct: never");
        }
        None => {}
    }
    if let Some(z) = &cls.zero_multiplicity {
        let _ = writeln!(
            out,
            "zero multiplicity {} (>= {}), distinct at q = 1: {} (<= {}): {}",
            z.zero_mult,
            z.floor_d_over_2,
            z.distinct,
            z.bound,
            if z.pass { "pass" } else { "FAIL" }
        );
    }
    if let Some(o) = &r.oracle {
        let status = if o.agree { "agrees" } else { "DISAGREES" };
        let _ = writeln!(
            out,
            "oracle    {} {status}{}",
            o.graph,
            o.detail.as_ref().map_or(String::new(), |d| format!(": {d}"))
        );
    }
    for s in &r.skipped {
        let _ = writeln!(out, "skipped   {s}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub l: usize,
    pub q: RealValue,
    pub region: Option<QRegion>,
    pub degenerate: bool,
    /// Evaluated in floating point because `q` is irrational.
    pub approximate: bool,
    pub case: Option<DistinctCase>,
    pub distinct: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub array: IntersectionArray,
    pub rows: Vec<ScanRow>,
    pub witness: Option<TwoDistinctWitness>,
    pub three_distinct_at_unit_q: bool,
    pub bipartite_three_distinct_q: Option<Vec<BipartiteQ>>,
}

/// Distinct counts at each critical `q` of a diameter-3 array.
pub fn cmd_scan(array_text: &str) -> Result<ScanReport> {
    let ia = parse_array(array_text)?;
    let crit = critical_q(&ia)?;
    let mut rows = Vec::new();
    for e in &crit.entries {
        let mut row = ScanRow {
            l: e.l,
            q: e.value.clone(),
            region: e.region,
            degenerate: e.degenerate,
            approximate: !matches!(e.value, RealValue::Rational { .. }),
            case: None,
            distinct: None,
        };
        if let Some(q) = e.value.to_q() {
            let report = distinct_count_case(&ia, &q)?;
            row.case = Some(report.case);
            row.distinct = Some(report.count);
        }
        rows.push(row);
    }
    let bipartite = if ia.is_bipartite() { Some(bipartite_three_distinct_q(&ia)?) } else { None };
    Ok(ScanReport {
        witness: two_distinct_search(&ia)?,
        three_distinct_at_unit_q: three_distinct_at_unit_q(&ia)?,
        bipartite_three_distinct_q: bipartite,
        array: ia,
        rows,
    })
}

pub fn render_scan(s: &ScanReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "array {}", s.array);
    let _ = writeln!(out, "{:<4} {:<24} {:<12} {:<8} distinct", "l", "q_l", "region", "case");
    for row in &s.rows {
        let region = match row.region {
            None => "zero",
            Some(QRegion::Positive) => "positive",
            Some(QRegion::BetweenMinusOneAndZero) => "(-1,0)",
            Some(QRegion::MinusOne) => "boundary",
            Some(QRegion::BelowMinusOne) => "below -1",
        };
        let distinct = match (row.distinct, row.degenerate) {
            (_, true) => "degenerate".to_string(),
            (Some(d), _) => format!("{d}{}", if row.approximate { " (approx)" } else { "" }),
            (None, _) => "-".to_string(),
        };
        let case = row.case.map_or("-".to_string(), |c| c.to_string());
        let _ = writeln!(out, "{:<4} {:<24} {:<12} {:<8} {distinct}", row.l, row.q.to_string(), region, case);
    }
    let _ = writeln!(out, "three distinct at q = 1: {}", s.three_distinct_at_unit_q);
    match &s.witness {
        Some(w) => {
            let _ = writeln!(out, "two distinct at {}", fmt_witness(w));
        }
        None => {
            let _ = writeln!(out, "two distinct: never");
        }
    }
    if let Some(list) = &s.bipartite_three_distinct_q {
        let qs: Vec<String> =
            list.iter().map(|b| format!("{}{}", b.q, if b.excluded { " (excluded)" } else { "" })).collect();
        let _ = writeln!(out, "bipartite three-distinct q: {}", qs.join(", "));
    }
    out
}

pub fn cmd_enumerate(r: u64) -> Result<Enumeration> {
    enumerate_antipodal_r(r)
}

pub fn render_enumeration(e: &Enumeration) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "antipodal {}-covers of diameter 3 with smallest eigenvalue {}", e.r, -(e.r as i64) - 1);
    let _ = writeln!(out, "{:>8} {:<36} {:>6} {:>10} n <= bound", "theta_1", "array", "m_1", "n");
    for c in &e.candidates {
        let _ = writeln!(
            out,
            "{:>8} {:<36} {:>6} {:>10} {}",
            c.theta1,
            c.array.to_string(),
            c.m1,
            c.n,
            if c.within_bound { "yes" } else { "NO" }
        );
    }
    let _ = writeln!(out, "bound {} ; {} array-feasible candidates", e.bound, e.candidates.len());
    for rj in &e.rejected {
        let _ = writeln!(out, "rejected theta_1 = {}: {}", rj.theta1, rj.reason);
    }
    out
}
