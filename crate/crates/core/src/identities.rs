//! Interpolation sums and the symmetric-function identity behind the
//! integration formulas.
//!
//! The building block is the Lagrange-interpolation fact that for a monic
//! polynomial `Q` with distinct roots `γ_1, …, γ_d`, the weighted power sum
//! `Σ_i γ_i^r / Q'(γ_i)` vanishes for `r < d-1` and equals one for
//! `r = d-1` ([`lemma1_sum`]). Its multivariate form ([`lemma2_sum`]) sums
//! `F(γ_{1,i_1}, …, γ_{n,i_n}) / ∏_k Q_k'(γ_{k,i_k})` over all choices of
//! one root per variable; when the total degree of `F` is at most
//! `Σ_k (d_k - 1)` the value does not depend on the root sets at all.
//!
//! [`theorem1_check`] evaluates both sides of the identity that ties the
//! fixed-point sum over signed weight vectors to the normalized kernel
//! coefficient of [`crate::integrate::c_coeff`]:
//!
//! ```text
//! Σ_{I ⊆ {1..n}} P(λ_I) / (∏_{i<j}(λ_{i,I} + λ_{j,I}) · ∏_i λ_{i,I})
//!     = 2^n · c(n) / n!
//! ```
//!
//! for any symmetric `P` of degree at most `n(n+1)/2` and admissible
//! weights. [`theorem1_rewritten_check`] does the same for the equivalent
//! denominator-cleared form
//!
//! ```text
//! Σ_{I} (-1)^{|I|} P(λ_I) / ∏_{i<j}(λ_{i,I} + λ_{j,I})
//!     = (-1)^n · (2^n · c(n) / n!) · ∏_i λ_i .
//! ```

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{lg_dimension, signed_assignments};
use crate::integrate::{c_coeff, factorial};
use crate::poly::SparsePoly;
use crate::{Error, Result};

/// The roots of a monic polynomial with pairwise-distinct roots — the data
/// the interpolation sums actually consume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicRootSet {
    roots: Vec<BigRational>,
}

impl MonicRootSet {
    /// Wraps a nonempty list of pairwise-distinct roots.
    pub fn new(roots: Vec<BigRational>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidRootSet);
        }
        for (i, a) in roots.iter().enumerate() {
            if roots[i + 1..].contains(a) {
                return Err(Error::InvalidRootSet);
            }
        }
        Ok(Self { roots })
    }

    /// The roots, in the order supplied.
    pub fn roots(&self) -> &[BigRational] {
        &self.roots
    }

    /// Number of roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    /// Always false — construction rejects empty root sets.
    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Degree of the monic polynomial `Q(x) = ∏_i (x - γ_i)`.
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// `Q'(γ_i) = ∏_{j≠i} (γ_i - γ_j)`, nonzero because the roots are
    /// distinct.
    pub fn q_prime(&self, i: usize) -> BigRational {
        let gi = &self.roots[i];
        self.roots
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, gj)| gi - gj)
            .product()
    }
}

/// Both sides of a verified identity, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    /// Value of the sum side.
    pub lhs: BigRational,
    /// Value of the closed-form side.
    pub rhs: BigRational,
    /// Whether the two sides agree exactly.
    pub equal: bool,
}

impl IdentityReport {
    /// Packages two exact values and records whether they coincide.
    pub fn new(lhs: BigRational, rhs: BigRational) -> Self {
        let equal = lhs == rhs;
        Self { lhs, rhs, equal }
    }
}

impl std::fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "lhs = {}, rhs = {} ({})",
            self.lhs,
            self.rhs,
            if self.equal { "equal" } else { "DIFFER" }
        )
    }
}

/// The weighted power sum `Σ_i γ_i^r / Q'(γ_i)` over the roots of a monic
/// polynomial of degree `d`. Defined for `0 ≤ r ≤ d-1`, where it equals
/// zero for `r < d-1` and one for `r = d-1`.
pub fn lemma1_sum(set: &MonicRootSet, r: usize) -> Result<BigRational> {
    let d = set.len();
    if r >= d {
        return Err(Error::DegreeTooHigh {
            degree: r,
            max: d - 1,
        });
    }
    let mut sum = BigRational::zero();
    for (i, root) in set.roots().iter().enumerate() {
        let mut power = BigRational::one();
        for _ in 0..r {
            power *= root;
        }
        sum += power / set.q_prime(i);
    }
    Ok(sum)
}

/// The multivariate interpolation sum
/// `Σ F(γ_{1,i_1}, …, γ_{n,i_n}) / ∏_k Q_k'(γ_{k,i_k})` over every choice
/// of one root per variable, for a polynomial `F` in `n` variables and `n`
/// root sets of sizes `d_1, …, d_n`.
///
/// Requires `deg F ≤ Σ_k (d_k - 1)`; under that bound the value equals
/// the coefficient of `x_1^{d_1-1} ⋯ x_n^{d_n-1}` in `F`, so it depends
/// on the sizes of the root sets but never on the roots themselves.
pub fn lemma2_sum(f: &SparsePoly, sets: &[MonicRootSet]) -> Result<BigRational> {
    let n = f.nvars();
    if sets.len() != n {
        return Err(Error::RootSetCountMismatch {
            expected: n,
            found: sets.len(),
        });
    }
    let max: usize = sets.iter().map(|s| s.len() - 1).sum();
    let degree = f.total_degree() as usize;
    if degree > max {
        return Err(Error::DegreeTooHigh { degree, max });
    }
    if n == 0 {
        return Ok(f.coeff(&[]));
    }
    // Precompute (γ, Q'(γ)) for every root of every set.
    let tables: Vec<Vec<(BigRational, BigRational)>> = sets
        .iter()
        .map(|s| {
            (0..s.len())
                .map(|i| (s.roots()[i].clone(), s.q_prime(i)))
                .collect()
        })
        .collect();
    let mut sum = BigRational::zero();
    for choice in tables.iter().map(|t| t.iter()).multi_cartesian_product() {
        let point: Vec<BigRational> = choice.iter().map(|(g, _)| g.clone()).collect();
        let value = f.eval(&point);
        if value.is_zero() {
            continue;
        }
        let denom: BigRational = choice.iter().map(|(_, q)| q).product();
        sum += value / denom;
    }
    Ok(sum)
}

fn checked_inputs(p: &SparsePoly, lambdas: &[BigRational]) -> Result<usize> {
    let n = p.nvars();
    if lambdas.len() != n {
        return Err(Error::WeightCountMismatch {
            expected: n,
            found: lambdas.len(),
        });
    }
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric { nvars: n });
    }
    let dim = lg_dimension(n as u32) as usize;
    let degree = p.total_degree() as usize;
    if degree > dim {
        return Err(Error::DegreeTooHigh { degree, max: dim });
    }
    Ok(n)
}

fn closed_form_side(p: &SparsePoly, n: usize) -> Result<BigRational> {
    let c = c_coeff(p)?;
    Ok(BigRational::from_integer(BigInt::one() << n) * c
        / BigRational::from_integer(factorial(n as u32)))
}

/// Evaluates both sides of the fixed-point identity
/// `Σ_I P(λ_I) / (∏_{i<j}(λ_{i,I} + λ_{j,I}) ∏_i λ_{i,I}) = 2^n c(n) / n!`
/// for a symmetric polynomial `P` of degree at most `n(n+1)/2` and an
/// admissible weight vector.
pub fn theorem1_check(p: &SparsePoly, lambdas: &[BigRational]) -> Result<IdentityReport> {
    let n = checked_inputs(p, lambdas)?;
    let mut lhs = BigRational::zero();
    for assignment in signed_assignments(lambdas)? {
        let value = p.eval(assignment.signed());
        if value.is_zero() {
            continue;
        }
        lhs += value / (assignment.pair_sum_product() * assignment.entry_product());
    }
    let rhs = closed_form_side(p, n)?;
    Ok(IdentityReport::new(lhs, rhs))
}

/// Evaluates both sides of the denominator-cleared form of the same
/// identity,
/// `Σ_I (-1)^{|I|} P(λ_I) / ∏_{i<j}(λ_{i,I} + λ_{j,I})
///  = (-1)^n (2^n c(n) / n!) ∏_i λ_i`.
pub fn theorem1_rewritten_check(
    p: &SparsePoly,
    lambdas: &[BigRational],
) -> Result<IdentityReport> {
    let n = checked_inputs(p, lambdas)?;
    let mut lhs = BigRational::zero();
    for assignment in signed_assignments(lambdas)? {
        let value = p.eval(assignment.signed());
        if value.is_zero() {
            continue;
        }
        let term = value / assignment.pair_sum_product();
        if assignment.subset_size() % 2 == 1 {
            lhs -= term;
        } else {
            lhs += term;
        }
    }
    let mut rhs = closed_form_side(p, n)? * lambdas.iter().product::<BigRational>();
    if n % 2 == 1 {
        rhs = -rhs;
    }
    Ok(IdentityReport::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::elem_sym;
    use crate::rat;

    fn rats(values: &[i64]) -> Vec<BigRational> {
        values.iter().copied().map(rat).collect()
    }

    fn set(values: &[i64]) -> MonicRootSet {
        MonicRootSet::new(rats(values)).unwrap()
    }

    #[test]
    fn root_sets_reject_degenerate_input() {
        assert_eq!(MonicRootSet::new(vec![]), Err(Error::InvalidRootSet));
        assert_eq!(
            MonicRootSet::new(rats(&[2, 5, 2])),
            Err(Error::InvalidRootSet)
        );
        let ok = set(&[0, 1, -4]);
        assert_eq!(ok.len(), 3);
        assert_eq!(ok.degree(), 3);
        assert!(!ok.is_empty());
    }

    #[test]
    fn derivative_products_match_hand_expansion() {
        // Q(x) = x(x-1): Q'(0) = -1, Q'(1) = 1
        let s = set(&[0, 1]);
        assert_eq!(s.q_prime(0), rat(-1));
        assert_eq!(s.q_prime(1), rat(1));
    }

    #[test]
    fn power_sums_hit_zero_then_one() {
        let s = set(&[0, 1]);
        assert_eq!(lemma1_sum(&s, 0).unwrap(), rat(0));
        assert_eq!(lemma1_sum(&s, 1).unwrap(), rat(1));
        assert_eq!(
            lemma1_sum(&s, 2),
            Err(Error::DegreeTooHigh { degree: 2, max: 1 })
        );

        let five = set(&[-7, -2, 0, 3, 11]);
        let pattern: Vec<BigRational> =
            (0..5).map(|r| lemma1_sum(&five, r).unwrap()).collect();
        assert_eq!(pattern, rats(&[0, 0, 0, 0, 1]));
    }

    #[test]
    fn interpolation_sum_extracts_corner_coefficients() {
        let x1 = SparsePoly::var(2, 0);
        let x2 = SparsePoly::var(2, 1);
        let pair = [set(&[0, 1]), set(&[0, 1])];
        assert_eq!(lemma2_sum(&(&x1 * &x2), &pair).unwrap(), rat(1));

        let square = &x1 * &x1;
        let mixed = [set(&[0, 1, 2]), set(&[0, 1])];
        assert_eq!(lemma2_sum(&square, &mixed).unwrap(), rat(0));
    }

    #[test]
    fn interpolation_sum_ignores_the_roots_for_fixed_sizes() {
        // The value is the coefficient at the exponents (d_1-1, d_2-1), so
        // it may depend on the root-set sizes but never on the roots.
        let f = &(&SparsePoly::var(2, 0) * &SparsePoly::var(2, 1)) + &elem_sym(1, 2);
        let a = [set(&[0, 1]), set(&[0, 1])];
        let b = [set(&[-3, 2]), set(&[4, 7])];
        let c = [set(&[5, -5]), set(&[0, -2])];
        let va = lemma2_sum(&f, &a).unwrap();
        assert_eq!(va, lemma2_sum(&f, &b).unwrap());
        assert_eq!(va, lemma2_sum(&f, &c).unwrap());
        assert_eq!(va, rat(1));

        let bigger = [set(&[9, 0, 1]), set(&[2, 4, 6])];
        let wider = [set(&[-1, -2, -3]), set(&[10, 20, 30])];
        assert_eq!(
            lemma2_sum(&f, &bigger).unwrap(),
            lemma2_sum(&f, &wider).unwrap()
        );
        assert_eq!(lemma2_sum(&f, &bigger).unwrap(), rat(0));
    }

    #[test]
    fn interpolation_sum_validates_its_input() {
        let f = elem_sym(1, 2);
        assert_eq!(
            lemma2_sum(&f, &[set(&[0, 1])]),
            Err(Error::RootSetCountMismatch {
                expected: 2,
                found: 1,
            })
        );
        let tight = [set(&[0, 1]), set(&[0, 1])];
        assert_eq!(
            lemma2_sum(&elem_sym(1, 2).pow(3), &tight),
            Err(Error::DegreeTooHigh { degree: 3, max: 2 })
        );
    }

    #[test]
    fn fixed_point_identity_holds_on_the_anchor() {
        let p = &elem_sym(1, 3).pow(2) * &elem_sym(2, 3).pow(2);
        let report = theorem1_check(&p, &rats(&[1, 2, 3])).unwrap();
        assert!(report.equal);
        assert_eq!(report.lhs, rat(32));
        assert_eq!(report.rhs, rat(32));
    }

    #[test]
    fn fixed_point_identity_vanishes_below_top_degree() {
        let report = theorem1_check(&SparsePoly::one(1), &rats(&[5])).unwrap();
        assert!(report.equal);
        assert_eq!(report.lhs, rat(0));
        assert_eq!(report.rhs, rat(0));
    }

    #[test]
    fn rewritten_identity_matches_hand_computation() {
        // P = x1, one weight λ = 5: both sides equal -10.
        let p = SparsePoly::var(1, 0);
        let report = theorem1_rewritten_check(&p, &rats(&[5])).unwrap();
        assert!(report.equal);
        assert_eq!(report.lhs, rat(-10));
        assert_eq!(report.rhs, rat(-10));
    }

    #[test]
    fn identity_checks_validate_their_input() {
        let p = elem_sym(1, 2);
        assert_eq!(
            theorem1_check(&p, &rats(&[1])),
            Err(Error::WeightCountMismatch {
                expected: 2,
                found: 1,
            })
        );
        assert_eq!(
            theorem1_check(&SparsePoly::var(2, 0), &rats(&[1, 2])),
            Err(Error::NotSymmetric { nvars: 2 })
        );
        assert_eq!(
            theorem1_check(&elem_sym(1, 2).pow(4), &rats(&[1, 2])),
            Err(Error::DegreeTooHigh { degree: 4, max: 3 })
        );
        assert_eq!(
            theorem1_rewritten_check(&p, &rats(&[1, -1])),
            Err(Error::InadmissibleWeights)
        );
    }

    #[test]
    fn reports_render_readably() {
        let eq = IdentityReport::new(rat(4), rat(4));
        assert!(eq.equal);
        assert_eq!(eq.to_string(), "lhs = 4, rhs = 4 (equal)");
        let ne = IdentityReport::new(rat(4), rat(5));
        assert!(!ne.equal);
        assert!(ne.to_string().contains("DIFFER"));
    }
}
