//! Enumerative consequences of the integral: projective degrees, Schubert
//! structure constants, degree-one Gromov-Witten invariants, and the
//! quantum product truncated at curve degree one.
//!
//! All outputs here are integers on geometric grounds; every function
//! checks integrality (and nonnegativity) of the underlying rational
//! integral and reports [`crate::Error::IntegralityViolation`] if exact
//! arithmetic ever produced anything else.
//!
//! The degree-one invariant `⟨σ_α, σ_β, σ_δ⟩₁` on `LG(n)` is computed as
//! half the integral over `LG(n+1)` of the product of the corresponding
//! basis classes formed at rank `n + 1` — the quantum-to-classical rule
//! that trades one curve degree for one extra rank. Consistency of the
//! products it feeds is exercised by the associativity checks in the test
//! suite.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::classes::{qtilde, ClassExpr};
use crate::combinat::{lg_dimension, strict_partitions, StrictPartition};
use crate::integrate::{factorial, integrate_lg};
use crate::{Error, Result};

/// Degree of `LG(n)` in its minimal projective embedding, by the closed
/// product formula
/// `N! · ∏_{1≤i<j≤n} (2j - 2i) / ∏_{i=1}^{n} (2i - 1)!` with
/// `N = n(n+1)/2`.
pub fn degree_lg(n: u32) -> BigInt {
    let mut value = BigRational::from_integer(factorial(lg_dimension(n)));
    for i in 1..=n {
        value /= BigRational::from_integer(factorial(2 * i - 1));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            value *= BigRational::from_integer(BigInt::from(2 * (j - i)));
        }
    }
    assert!(value.is_integer(), "closed-form degree must be integral");
    value.to_integer()
}

/// Degree of `LG(n)` recomputed as `∫ σ_1^N`, cross-checked in debug
/// builds against the closed form.
pub fn degree_lg_via_integral(n: u32) -> Result<BigInt> {
    let hyperplane_power = ClassExpr::special(1, n).pow(lg_dimension(n));
    let value = integrate_lg(&hyperplane_power)?;
    let degree = nonnegative_integer(&value, "degree via integral")?;
    debug_assert_eq!(degree, degree_lg(n));
    Ok(degree)
}

/// Demands that an exactly-computed rational is a nonnegative integer and
/// converts it, reporting the offending value otherwise.
fn nonnegative_integer(value: &BigRational, context: &'static str) -> Result<BigInt> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::IntegralityViolation {
            context,
            value: value.to_string(),
        });
    }
    Ok(value.to_integer())
}

/// The Schubert structure constant `e_{α,β}^γ` on `LG(n)`: the coefficient
/// of `σ_γ` in `σ_α · σ_β`, computed as
/// `∫ Q̃_α Q̃_β Q̃_{γ^∨}` with `γ^∨` the dual partition.
///
/// Requires all three partitions to fit in rank `n` and
/// `|α| + |β| = |γ|`.
pub fn structure_constant(
    alpha: &StrictPartition,
    beta: &StrictPartition,
    gamma: &StrictPartition,
    n: u32,
) -> Result<BigInt> {
    alpha.ensure_fits(n)?;
    beta.ensure_fits(n)?;
    gamma.ensure_fits(n)?;
    if alpha.weight() + beta.weight() != gamma.weight() {
        return Err(Error::DegreeMismatch {
            details: format!(
                "|alpha| + |beta| = {} must equal |gamma| = {}",
                alpha.weight() + beta.weight(),
                gamma.weight()
            ),
        });
    }
    let product =
        &(&qtilde(alpha, n)? * &qtilde(beta, n)?) * &qtilde(&gamma.dual(n)?, n)?;
    let value = integrate_lg(&product)?;
    nonnegative_integer(&value, "structure constant")
}

/// The three-point, degree-one Gromov-Witten invariant
/// `⟨σ_α, σ_β, σ_δ⟩₁` on `LG(n)`: half the integral over `LG(n+1)` of
/// `Q̃_α Q̃_β Q̃_δ` formed at rank `n + 1`.
///
/// Requires the partitions to fit in rank `n` and the weights to sum to
/// `(n+1)(n+2)/2`, the dimension of `LG(n+1)` — equivalently
/// `n(n+1)/2 + (n+1)`, the virtual dimension condition for one line.
pub fn gw1(
    alpha: &StrictPartition,
    beta: &StrictPartition,
    delta: &StrictPartition,
    n: u32,
) -> Result<BigInt> {
    alpha.ensure_fits(n)?;
    beta.ensure_fits(n)?;
    delta.ensure_fits(n)?;
    let total = alpha.weight() + beta.weight() + delta.weight();
    let expected = lg_dimension(n + 1);
    if total != expected {
        return Err(Error::DegreeMismatch {
            details: format!(
                "|alpha| + |beta| + |delta| = {total} must equal {expected} \
                 for a degree-one invariant on rank {n}"
            ),
        });
    }
    let rank = n + 1;
    let product =
        &(&qtilde(alpha, rank)? * &qtilde(beta, rank)?) * &qtilde(delta, rank)?;
    let value = integrate_lg(&product)? / crate::rat(2);
    nonnegative_integer(&value, "degree-one Gromov-Witten invariant")
}

/// A quantum product `σ_α ∗ σ_β` on `LG(n)`, expanded through curve degree
/// one: the classical part lists `e_{α,β}^γ σ_γ` and the `q`-part lists
/// `⟨σ_α, σ_β, σ_{γ^∨}⟩₁ σ_γ q`. Zero coefficients are omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumProduct {
    /// Rank of the underlying Lagrangian Grassmannian.
    pub n: u32,
    /// Left factor index.
    pub alpha: StrictPartition,
    /// Right factor index.
    pub beta: StrictPartition,
    /// Nonzero classical coefficients, keyed by the basis partition.
    pub classical: BTreeMap<StrictPartition, BigInt>,
    /// Nonzero degree-one coefficients (of `σ_γ q`), keyed likewise.
    pub quantum1: BTreeMap<StrictPartition, BigInt>,
}

/// Expands `σ_α ∗ σ_β` on `LG(n)` through curve degree one.
///
/// Valid while `|α| + |β| < 2(n+1)`, where degree-two corrections cannot
/// yet appear; larger weights are rejected as unsupported.
pub fn quantum_product(
    alpha: &StrictPartition,
    beta: &StrictPartition,
    n: u32,
) -> Result<QuantumProduct> {
    alpha.ensure_fits(n)?;
    beta.ensure_fits(n)?;
    let total = alpha.weight() + beta.weight();
    let limit = 2 * (n + 1);
    if total >= limit {
        return Err(Error::UnsupportedQuantumDegree { total, limit });
    }
    let mut classical = BTreeMap::new();
    for gamma in strict_partitions(n, total) {
        let coefficient = structure_constant(alpha, beta, &gamma, n)?;
        if !coefficient.is_zero() {
            classical.insert(gamma, coefficient);
        }
    }
    let mut quantum1 = BTreeMap::new();
    if total > n {
        for gamma in strict_partitions(n, total - (n + 1)) {
            let coefficient = gw1(alpha, beta, &gamma.dual(n)?, n)?;
            if !coefficient.is_zero() {
                quantum1.insert(gamma, coefficient);
            }
        }
    }
    Ok(QuantumProduct {
        n,
        alpha: alpha.clone(),
        beta: beta.clone(),
        classical,
        quantum1,
    })
}

fn write_piece(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    gamma: &StrictPartition,
    coefficient: &BigInt,
    with_q: bool,
) -> fmt::Result {
    if !*first {
        f.write_str(" + ")?;
    }
    *first = false;
    if !coefficient.is_one() {
        write!(f, "{coefficient}*")?;
    }
    write!(f, "s[{gamma}]")?;
    if with_q {
        f.write_str("*q")?;
    }
    Ok(())
}

impl fmt::Display for QuantumProduct {
    /// Renders like `2*s[3,2] + s[1]*q`, classical part first, `0` when
    /// every coefficient vanishes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.classical.is_empty() && self.quantum1.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (gamma, coefficient) in &self.classical {
            write_piece(f, &mut first, gamma, coefficient, false)?;
        }
        for (gamma, coefficient) in &self.quantum1 {
            write_piece(f, &mut first, gamma, coefficient, true)?;
        }
        Ok(())
    }
}

impl QuantumProduct {
    /// Serializes as
    /// `{"n", "a", "b", "classical": [{"gamma", "coef"}, …], "q1": […]}`
    /// with partitions rendered as comma-joined part lists.
    pub fn to_json(&self) -> serde_json::Value {
        let encode = |map: &BTreeMap<StrictPartition, BigInt>| -> serde_json::Value {
            map.iter()
                .map(|(gamma, coefficient)| {
                    serde_json::json!({
                        "gamma": gamma.to_string(),
                        "coef": coefficient
                            .to_u64()
                            .expect("coefficient fits the JSON number encoding"),
                    })
                })
                .collect::<Vec<_>>()
                .into()
        };
        serde_json::json!({
            "n": self.n,
            "a": self.alpha.to_string(),
            "b": self.beta.to_string(),
            "classical": encode(&self.classical),
            "q1": encode(&self.quantum1),
        })
    }
}
