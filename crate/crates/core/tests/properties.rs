use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use qdrg::antipodal::folded_spectrum;
use qdrg::atlas::{parse_adjacency_text, ConcreteGraph};
use qdrg::diameter3::{
    coincidence_pairs, enumerate_antipodal_r, family_b2_equals_c2, family_gq_spread, family_square_valency_cover,
    four_values, kpy_bounds, rq_quadratic, value_groups,
};
use qdrg::feasibility::feasibility_check;
use qdrg::qdistance::{distance_polys, rq_value, rq_value_exact, values_coincide, weight, QRegion};
use qdrg::report::{cmd_analyze, AnalysisReport, AnalyzeOptions};
use qdrg::spectrum::{adjacency_spectrum, eigenvalues, standard_sequence};
use qdrg::{dq_spectrum_formula, parse_array, IntersectionArray, QValue, RationalQ};

fn array(b: Vec<u64>, c: Vec<u64>) -> IntersectionArray {
    IntersectionArray::new(b, c).expect("family array is valid")
}

fn johnson(v: u64, k: u64) -> IntersectionArray {
    array((0..k).map(|i| (k - i) * (v - k - i)).collect(), (1..=k).map(|i| i * i).collect())
}

fn hamming(d: u64, s: u64) -> IntersectionArray {
    array((0..d).map(|i| (d - i) * (s - 1)).collect(), (1..=d).collect())
}

fn cycle(n: u64) -> IntersectionArray {
    let d = n / 2;
    let b = (0..d).map(|i| if i == 0 { 2 } else { 1 }).collect();
    let c = (1..=d).map(|i| if i == d && n.is_multiple_of(2) { 2 } else { 1 }).collect();
    array(b, c)
}

fn crown(m: u64) -> IntersectionArray {
    array(vec![m - 1, m - 2, 1], vec![1, m - 2, m - 1])
}

/// Point-line incidence graph of a projective plane of order `q`.
fn plane_incidence(q: u64) -> IntersectionArray {
    array(vec![q + 1, q, q], vec![1, 1, q + 1])
}

fn cover_candidates() -> Vec<IntersectionArray> {
    (2..=5).flat_map(|r| enumerate_antipodal_r(r).unwrap().candidates.into_iter().map(|c| c.array)).collect()
}

fn diameter3_arrays() -> impl Strategy<Value = IntersectionArray> {
    prop_oneof![
        (6u64..=14).prop_map(|v| johnson(v, 3)),
        (2u64..=6).prop_map(|s| hamming(3, s)),
        (6u64..=7).prop_map(cycle),
        (4u64..=12).prop_map(crown),
        prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]).prop_map(plane_incidence),
        (1u64..=6, 2u64..=8).prop_filter_map("infeasible", |(s, t)| family_gq_spread(s, t).ok()),
        (2u64..=8).prop_map(|r| family_square_valency_cover(r).unwrap()),
        prop::sample::select(vec![4u64, 5, 8, 9]).prop_map(|b| family_b2_equals_c2(b).unwrap()),
        prop::sample::select(cover_candidates()),
    ]
}

fn antipodal3_arrays() -> impl Strategy<Value = IntersectionArray> {
    diameter3_arrays().prop_filter("antipodal", |a| a.is_antipodal())
}

fn arrays() -> impl Strategy<Value = IntersectionArray> {
    prop_oneof![
        (4u64..=14).prop_flat_map(|v| (Just(v), 2..=v / 2)).prop_map(|(v, k)| johnson(v, k)),
        (2u64..=6, 2u64..=5).prop_map(|(d, s)| hamming(d, s)),
        (4u64..=20).prop_map(cycle),
        diameter3_arrays(),
    ]
}

fn nonzero_q() -> impl Strategy<Value = RationalQ> {
    (-12i64..=12, 1i64..=12)
        .prop_filter("nonzero", |(p, _)| *p != 0)
        .prop_map(|(p, r)| RationalQ::from_ratio(p, r).unwrap())
}

fn rel_close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * 1f64.max(x.abs()).max(y.abs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn array_text_round_trips(ia in arrays()) {
        let back = parse_array(&ia.to_string()).unwrap();
        prop_assert_eq!(back, ia);
    }

    #[test]
    fn array_parser_never_panics(s in "[{}0-9,; -]{0,24}") {
        let _ = parse_array(&s);
    }

    #[test]
    fn q_text_round_trips(q in nonzero_q()) {
        let back: RationalQ = q.to_string().parse().unwrap();
        prop_assert_eq!(back, q);
    }

    #[test]
    fn q_parser_never_panics(s in "[-+/0-9. a-z]{0,12}") {
        let _ = s.parse::<RationalQ>();
    }

    #[test]
    fn adjacency_text_round_trips(n in 1usize..16, bits in prop::collection::vec(any::<bool>(), 120)) {
        let mut it = bits.into_iter().cycle();
        let g = ConcreteGraph::from_predicate(n, |_, _| it.next().unwrap());
        let back = parse_adjacency_text(&g.to_adjacency_text()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn valencies_sum_to_n(ia in arrays()) {
        let d = ia.diameter();
        let total: u64 = (0..=d).map(|i| ia.k_i(i)).sum();
        prop_assert_eq!(total, ia.n());
        for i in 0..=d {
            prop_assert_eq!(ia.a(i) + ia.b(i) + ia.c(i), ia.k());
        }
    }

    #[test]
    fn adjacency_spectrum_has_d_plus_one_values(ia in arrays()) {
        let spec = adjacency_spectrum(&ia).unwrap();
        prop_assert_eq!(spec.entries.len(), ia.diameter() + 1);
        let n = ia.n() as f64;
        prop_assert!((spec.total_multiplicity() - n).abs() <= 1e-6 * n);
    }

    #[test]
    fn standard_sequence_orthogonal_to_ones(ia in arrays()) {
        let n = ia.n() as f64;
        for t in eigenvalues(&ia).unwrap().iter().skip(1) {
            let u = standard_sequence(&ia, t.value).unwrap().u;
            let s: f64 = u.iter().enumerate().map(|(i, ui)| ia.k_i(i) as f64 * ui).sum();
            prop_assert!(s.abs() <= 1e-8 * n, "theta = {t}: {s}");
            let v: f64 = distance_polys(&ia, t.value).iter().sum();
            prop_assert!(v.abs() <= 1e-8 * n, "theta = {t}: sum v_i = {v}");
        }
    }

    #[test]
    fn trace_is_zero(ia in arrays(), q in nonzero_q()) {
        let s = dq_spectrum_formula(&ia, &q).unwrap();
        match s.trace_exact() {
            Some(t) => prop_assert!(t.is_zero(), "trace {t}"),
            None => prop_assert!(s.trace().abs() <= 1e-8 * ia.n() as f64 * s.max_abs().max(1.0)),
        }
    }

    #[test]
    fn row_sum_identity(ia in arrays(), q in nonzero_q()) {
        let k = BigRational::from_integer(BigInt::from(ia.k()));
        let rows: BigRational = (0..=ia.diameter())
            .map(|i| weight(&q, i) * BigRational::from_integer(BigInt::from(ia.k_i(i))))
            .sum();
        prop_assert_eq!(rq_value_exact(&ia, &k, &q), rows);
    }

    #[test]
    fn distinct_count_at_most_d_plus_one(ia in arrays(), q in nonzero_q()) {
        let s = dq_spectrum_formula(&ia, &q).unwrap();
        prop_assert!(s.count_distinct() <= ia.diameter() + 1);
        prop_assert_eq!(s.total_multiplicity(), ia.n());
    }

    #[test]
    fn valency_value_simple_and_largest(ia in arrays(), q in nonzero_q()) {
        prop_assume!(q.region() != QRegion::BetweenMinusOneAndZero);
        let s = dq_spectrum_formula(&ia, &q).unwrap();
        let top = rq_value(&ia, ia.k() as f64, q.to_f64());
        let first = &s.entries[0];
        prop_assert!(values_coincide(first.value, top), "top {} vs R(k) {top}", first.value);
        prop_assert_eq!(first.mult, 1);
        prop_assert!(s.entries[1..].iter().all(|e| e.value < first.value && !values_coincide(e.value, top)));
    }

    #[test]
    fn antipodal_eigenvalue_relations(ia in antipodal3_arrays()) {
        let th = eigenvalues(&ia).unwrap();
        let (t1, t3) = (th[1].value, th[3].value);
        let (a1, c2, k) = (ia.a(1) as f64, ia.c(2) as f64, ia.k() as f64);
        prop_assert!(rel_close(t1 + t3, a1 - c2, 1e-8), "{t1} + {t3}");
        prop_assert!(rel_close(t1 * t3, -k, 1e-8), "{t1} * {t3}");
    }

    #[test]
    fn folded_eigenvalues_are_palindromic(ia in antipodal3_arrays()) {
        let f = folded_spectrum(&ia).unwrap();
        prop_assert!(f.palindromic);
        prop_assert_eq!(f.folded[0].value, ia.k() as f64);
    }

    #[test]
    fn eigenvalue_bounds(ia in diameter3_arrays()) {
        prop_assert!(feasibility_check(&ia).is_empty(), "{ia} infeasible");
        let b = kpy_bounds(&ia).unwrap();
        prop_assert!(b.all(), "{ia}: {b:?}");
        let th = eigenvalues(&ia).unwrap();
        let golden = (5f64.sqrt() - 1.0) / 2.0;
        prop_assert!(th[1].value >= golden - 1e-12);
        prop_assert!(th[3].value <= -golden - 1.0 + 1e-12);
    }

    #[test]
    fn coincidence_pairs_match_direct_values(ia in diameter3_arrays(), q in nonzero_q()) {
        let th = eigenvalues(&ia).unwrap();
        let qf = q.to_f64();
        let vals: Vec<f64> = th[1..].iter().map(|t| rq_quadratic(&ia, t.value, qf).unwrap()).collect();
        let direct = (0..3).any(|i| (i + 1..3).any(|j| values_coincide(vals[i], vals[j])));
        let pairs = coincidence_pairs(&ia, &QValue::Exact(q)).unwrap();
        prop_assert_eq!(!pairs.is_empty(), direct, "{:?} vs {:?}", pairs, vals);
    }

    #[test]
    fn nontrivial_values_never_all_equal(ia in diameter3_arrays(), q in nonzero_q()) {
        let vals = four_values(&ia, &QValue::Exact(q)).unwrap();
        prop_assert!(value_groups(&vals[1..]).len() >= 2);
    }

    #[test]
    fn antipodal_extremes_differ(ia in antipodal3_arrays(), q in nonzero_q()) {
        let th = eigenvalues(&ia).unwrap();
        let qf = q.to_f64();
        let (r1, r3) = (rq_value(&ia, th[1].value, qf), rq_value(&ia, th[3].value, qf));
        prop_assert!(!values_coincide(r1, r3), "{r1} {r3}");
    }

    #[test]
    fn analysis_json_round_trips(ia in arrays(), q in nonzero_q()) {
        let report = cmd_analyze(&ia.to_string(), &q.to_string(), &AnalyzeOptions::default()).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, report);
    }
}
