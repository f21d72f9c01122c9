//! Exact intersection-theoretic calculator for Lagrangian Grassmannians.
//!
//! The crate evaluates integrals of characteristic classes over the
//! Lagrangian Grassmannian `LG(n)` (the variety of Lagrangian subspaces of a
//! `2n`-dimensional symplectic vector space) in exact rational arithmetic.
//! Three independent evaluation routes are provided and cross-checked:
//!
//! * coefficient extraction against the full antisymmetrizing kernel
//!   ([`integrate::c_coeff`]),
//! * a staircase-exponent coefficient rule ([`integrate::integrate_lg_dp`]),
//! * equivariant localization over the `2^n` torus-fixed points
//!   ([`integrate::localization_lg`]).
//!
//! On top of the integral the crate computes degrees of the classical
//! embeddings ([`quantum::degree_lg`]), Schubert-basis structure constants
//! ([`quantum::structure_constant`]), three-point degree-one Gromov-Witten
//! invariants ([`quantum::gw1`]) and quantum products truncated at degree one
//! ([`quantum::quantum_product`]).
//!
//! All arithmetic is performed over [`num_rational::BigRational`]; there is no
//! floating point anywhere in the evaluation paths.

#![forbid(unsafe_code)]

pub mod classes;
pub mod combinat;
pub mod expr;
pub mod identities;
pub mod integrate;
pub mod poly;
pub mod quantum;
pub mod sampling;

use num_rational::BigRational;

/// Errors reported by the calculator.
///
/// Every fallible operation in the crate returns [`Result`]; panics are
/// reserved for violated internal invariants.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A polynomial that must be symmetric in all its variables is not.
    #[error("polynomial is not symmetric in its {nvars} variables")]
    NotSymmetric {
        /// Number of variables of the offending polynomial.
        nvars: usize,
    },

    /// A polynomial exceeds the degree bound of the requested operation.
    #[error("degree {degree} exceeds the maximum {max} supported here")]
    DegreeTooHigh {
        /// Total degree found.
        degree: usize,
        /// Largest admissible total degree.
        max: usize,
    },

    /// Weight vectors for localization must be nonzero with pairwise
    /// distinct squares, so that no fixed-point denominator vanishes.
    #[error("weights must be nonzero with pairwise distinct squares")]
    InadmissibleWeights,

    /// Weight vectors for ordinary Grassmannian localization must be
    /// pairwise distinct.
    #[error("weights must be pairwise distinct")]
    WeightsNotDistinct,

    /// Parts of a strict partition must be positive and strictly decreasing.
    #[error("parts must be positive and strictly decreasing")]
    InvalidPartition,

    /// A partition does not fit inside the staircase for the given rank.
    #[error("partition does not fit: largest part {part} exceeds rank {rank}")]
    PartitionTooWide {
        /// Offending (largest) part.
        part: u32,
        /// Rank bound the parts must not exceed.
        rank: u32,
    },

    /// The number of supplied weights does not match what the operation
    /// requires.
    #[error("expected {expected} weights, found {found}")]
    WeightCountMismatch {
        /// Required number of weights.
        expected: usize,
        /// Number actually supplied.
        found: usize,
    },

    /// An interpolation sum needs exactly one root set per variable.
    #[error("expected {expected} root sets (one per variable), found {found}")]
    RootSetCountMismatch {
        /// Number of variables of the polynomial.
        expected: usize,
        /// Number of root sets supplied.
        found: usize,
    },

    /// A quantity that is an integer on theoretical grounds failed to be one.
    #[error("{context} produced the non-integer value {value}")]
    IntegralityViolation {
        /// Description of the computation that was expected to be integral.
        context: &'static str,
        /// The offending rational value, rendered as `p/q`.
        value: String,
    },

    /// Degrees passed to a triple invariant or product are incompatible.
    #[error("degree mismatch: {details}")]
    DegreeMismatch {
        /// Human-readable description of the failed degree constraint.
        details: String,
    },

    /// The quantum product is only expanded through curve degree one.
    #[error("total weight {total} needs curve degree > 1 (threshold {limit})")]
    UnsupportedQuantumDegree {
        /// Combined weight of the two factors.
        total: u32,
        /// Weight threshold at which degree-two corrections would start.
        limit: u32,
    },

    /// A class expression failed to parse.
    #[error("parse error at byte {pos}: {msg}")]
    Parse {
        /// Byte offset into the input at which the error was detected.
        pos: usize,
        /// Description of what was expected.
        msg: String,
    },

    /// A generator index `s<k>` lies outside `1..=rank`.
    #[error("generator s{index} is out of range for rank {rank}")]
    GeneratorOutOfRange {
        /// Index written in the expression.
        index: u64,
        /// Rank of the ambient ring.
        rank: u32,
    },

    /// Root sets for interpolation sums must be nonempty and duplicate-free.
    #[error("root set must be nonempty with pairwise-distinct roots")]
    InvalidRootSet,
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub use classes::{qtilde, qtilde2, schubert_staircase_poly, ClassExpr};
pub use combinat::{
    all_strict_partitions, lg_dimension, signed_assignments, strict_partitions, SignedAssignment,
    StrictPartition,
};
pub use expr::parse_class_expr;
pub use identities::{
    lemma1_sum, lemma2_sum, theorem1_check, theorem1_rewritten_check, IdentityReport, MonicRootSet,
};
pub use integrate::{
    c_coeff, certified, integrate_lg, integrate_lg_dp, localization_grassmannian,
    localization_lg, relation1_check, CoefficientCertificate, Route,
};
pub use poly::{discriminant, elem_sym, pairwise_sum_product, vandermonde, SparsePoly};
pub use quantum::{
    degree_lg, degree_lg_via_integral, gw1, quantum_product, structure_constant, QuantumProduct,
};
pub use sampling::{
    admissible_lambdas, distinct_lambdas, homogeneous_class, root_set, seeded_rng, symmetric_poly,
};

/// Renders a rational in the conventional `p/q` form, with the denominator
/// omitted when it is one. [`num_rational::BigRational`]'s `Display` already
/// does exactly this; the helper pins that contract for serialized output.
pub fn rational_string(value: &BigRational) -> String {
    value.to_string()
}

/// Shorthand for an integer-valued [`BigRational`], used pervasively when
/// building polynomials and expected values.
pub fn rat(value: i64) -> BigRational {
    BigRational::from_integer(value.into())
}
