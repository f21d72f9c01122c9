//! Shared input builders for the benchmark suite: the anchor class whose
//! integral is 4, its symmetric-polynomial counterpart, and the standard
//! weight vector, all at desk scale (ranks 3–5).

use num_rational::BigRational;

use lgcalc_core::{elem_sym, parse_class_expr, rat, ClassExpr, SparsePoly, StrictPartition};

/// `s1^2 * s2^2` at rank 3 — the anchor integrand.
pub fn anchor_class() -> ClassExpr {
    parse_class_expr("s1^2*s2^2", 3).expect("fixed expression parses")
}

/// The same anchor as a symmetric polynomial in three Chern roots.
pub fn anchor_symmetric_poly() -> SparsePoly {
    let e1 = elem_sym(1, 3);
    let e2 = elem_sym(2, 3);
    &(&e1 * &e1) * &(&e2 * &e2)
}

/// The default weight vector `1, 2, 3` used by the localization route.
pub fn anchor_lambdas() -> Vec<BigRational> {
    (1..=3).map(rat).collect()
}

/// A three-part strict partition that exercises the Pfaffian expansion.
pub fn wide_partition() -> StrictPartition {
    StrictPartition::new(vec![4, 2, 1]).expect("strictly decreasing")
}
