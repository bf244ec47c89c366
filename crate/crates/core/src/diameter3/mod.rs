//! Diameter-3 analysis: closed forms for `R_q`, critical `q` values,
//! distinct-count classification, and families of arrays.

mod classify;
mod families;
mod forms;
mod value;

pub use classify::{
    antipodal_three_distinct, bipartite_three_distinct_q, coincidence_pairs, critical_q, distinct_count_case,
    four_values, kpy_bounds, kpy_bounds_check, three_distinct_at_unit_q, two_distinct_search, two_distinct_witnesses,
    value_groups, BipartiteQ, CaseReport, CriticalEntry, CriticalQ, DistinctCase, KpyBounds, TwoDistinctCase,
    TwoDistinctWitness,
};
pub use families::{
    cover_vertex_bound, enumerate_antipodal_r, family_b2_equals_c2, family_gq_spread, family_square_valency_cover,
    AntipodalCandidate, Enumeration, RejectedCandidate, MAX_COVER_INDEX,
};
pub use forms::{
    rq_cubic, rq_cubic_exact, rq_cubic_in, rq_k_quadratic, rq_k_quadratic_exact, rq_k_quadratic_in, rq_quadratic,
    rq_quadratic_exact, rq_quadratic_in,
};
pub use value::RealValue;
