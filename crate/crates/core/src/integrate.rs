//! Integration over the Lagrangian Grassmannian, by three routes.
//!
//! For a class `Φ` on `LG(n)` of dimension `N = n(n+1)/2`, write `P` for its
//! Chern-root polynomial ([`ClassExpr::to_chern_roots`]). The routes are:
//!
//! 1. **Main coefficient rule** ([`integrate_lg`]): the integral equals
//!    `(-1)^N · c(n) / n!` where `c(n)` is the coefficient of
//!    `(x_1 ⋯ x_n)^{2n-1}` in `P · ∏_{i≠j}(x_i - x_j) · ∏_{i<j}(x_i + x_j)`
//!    ([`c_coeff`]).
//! 2. **Staircase coefficient rule** ([`integrate_lg_dp`]): the integral
//!    equals `(-1)^N` times the coefficient of
//!    `x_1^{2n-1} x_2^{2n-2} ⋯ x_n^n` in
//!    `P · ∏_{i<j}(x_i - x_j) · ∏_{i<j}(x_i + x_j)` — half the
//!    antisymmetrizing kernel, one target monomial per variable, no
//!    factorial division.
//! 3. **Localization** ([`localization_lg`]): the integral equals
//!    `(-1)^N / 2^n · Σ_I P(λ_I) / (∏_{i<j}(λ_{i,I} + λ_{j,I}) ∏_i λ_{i,I})`
//!    summed over all `2^n` sign assignments of an admissible weight vector;
//!    the value is independent of the weights chosen.
//!
//! Classes of degree below `N` integrate to zero on every route, so
//! inhomogeneous inputs need no special casing; degrees above `N` are
//! rejected. [`localization_grassmannian`] provides the analogous
//! fixed-point sum on an ordinary Grassmannian, which [`relation1_check`]
//! uses to compare the Lagrangian integral against an integral over
//! `G(n, 2n)` twisted by the staircase Schubert polynomial.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::classes::{schubert_staircase_poly, ClassExpr};
use crate::combinat::{check_distinct, lg_dimension, signed_assignments};
use crate::identities::IdentityReport;
use crate::poly::SparsePoly;
use crate::{rational_string, Error, Result};

/// Which evaluation route produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Coefficient extraction against the full antisymmetrizing kernel.
    MainCoefficient,
    /// Coefficient extraction at the staircase exponent.
    DpCoefficient,
    /// Fixed-point localization with the default weight vector `1, …, n`.
    Localization,
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Route::MainCoefficient => "main-coefficient",
            Route::DpCoefficient => "dp-coefficient",
            Route::Localization => "localization",
        };
        f.write_str(name)
    }
}

/// An integral value together with the normalized kernel coefficient it
/// corresponds to, and the route that produced it.
///
/// The two numbers always satisfy `integral = (-1)^{n(n+1)/2} · c_n / n!`;
/// for the main route `c_n` is literally the extracted coefficient, for the
/// other routes it is the coefficient certified by the route's value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientCertificate {
    /// Rank of the Lagrangian Grassmannian integrated over.
    pub n: u32,
    /// Route that produced the value.
    pub route: Route,
    /// Normalized kernel coefficient `c_n`.
    pub c_n: BigRational,
    /// The integral itself.
    pub integral: BigRational,
}

impl CoefficientCertificate {
    /// Serializes as `{"n", "route", "c_n", "integral"}` with the rationals
    /// rendered as `p/q` strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "route": self.route,
            "c_n": rational_string(&self.c_n),
            "integral": rational_string(&self.integral),
        })
    }
}

/// `n!` as a big integer.
pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `(-1)^{n(n+1)/2}` as a rational: the sign attached to the dimension of
/// `LG(n)` in every coefficient rule.
pub(crate) fn dimension_sign(n: u32) -> BigRational {
    if lg_dimension(n).is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// The normalized coefficient `c(n)` of a symmetric polynomial `P` in `n`
/// variables: the coefficient of `(x_1 ⋯ x_n)^{2n-1}` in
/// `P · ∏_{i≠j}(x_i - x_j) · ∏_{i<j}(x_i + x_j)`.
///
/// Errors when `P` is not symmetric or its total degree exceeds
/// `n(n+1)/2`; returns zero when the degree falls short of that dimension.
pub fn c_coeff(p: &SparsePoly) -> Result<BigRational> {
    let n = p.nvars();
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric { nvars: n });
    }
    let dim = lg_dimension(n as u32) as usize;
    let degree = p.total_degree() as usize;
    if degree > dim {
        return Err(Error::DegreeTooHigh { degree, max: dim });
    }
    if n == 0 {
        return Ok(p.coeff(&[]));
    }
    let cap = 2 * n as u32 - 1;
    let mut kernel = kernel_product(n, cap, true);
    kernel = kernel.mul_pruned(p, cap);
    Ok(kernel.coeff(&vec![cap; n]))
}

/// `∏(x_i - x_j) · ∏_{i<j}(x_i + x_j)` accumulated one linear factor at a
/// time under an exponent cap, with the difference product taken over
/// ordered pairs when `full_difference` is set and over `i < j` otherwise.
fn kernel_product(n: usize, cap: u32, full_difference: bool) -> SparsePoly {
    let vars: Vec<SparsePoly> = (0..n).map(|i| SparsePoly::var(n, i)).collect();
    let mut acc = SparsePoly::one(n);
    for i in 0..n {
        for j in 0..n {
            if i == j || (!full_difference && i > j) {
                continue;
            }
            acc = acc.mul_pruned(&(&vars[i] - &vars[j]), cap);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            acc = acc.mul_pruned(&(&vars[i] + &vars[j]), cap);
        }
    }
    acc
}

fn check_class_degree(class: &ClassExpr) -> Result<u32> {
    let n = class.rank();
    let dim = lg_dimension(n);
    if class.degree() > dim {
        return Err(Error::DegreeTooHigh {
            degree: class.degree() as usize,
            max: dim as usize,
        });
    }
    Ok(n)
}

/// Integrates a class over `LG(n)` by the main coefficient rule.
///
/// Errors when the class degree exceeds `n(n+1)/2`; lower-degree classes
/// integrate to zero.
pub fn integrate_lg(class: &ClassExpr) -> Result<BigRational> {
    let n = check_class_degree(class)?;
    let c = c_coeff(&class.to_chern_roots())?;
    Ok(dimension_sign(n) * c / BigRational::from_integer(factorial(n)))
}

/// Integrates a class over `LG(n)` by the staircase coefficient rule: a
/// single target monomial `x_1^{2n-1} ⋯ x_n^n` against half the kernel.
pub fn integrate_lg_dp(class: &ClassExpr) -> Result<BigRational> {
    let n = check_class_degree(class)?;
    let p = class.to_chern_roots();
    let nv = p.nvars();
    if nv == 0 {
        return Ok(p.coeff(&[]));
    }
    let cap = 2 * nv as u32 - 1;
    let mut kernel = kernel_product(nv, cap, false);
    kernel = kernel.mul_pruned(&p, cap);
    let target: Vec<u32> = (0..nv).map(|i| (2 * nv - 1 - i) as u32).collect();
    Ok(dimension_sign(n) * kernel.coeff(&target))
}

/// Integrates a class over `LG(n)` by summing over the `2^n` torus-fixed
/// points determined by an admissible weight vector (nonzero entries with
/// pairwise-distinct squares). The result is independent of the weights.
pub fn localization_lg(class: &ClassExpr, lambdas: &[BigRational]) -> Result<BigRational> {
    let n = check_class_degree(class)?;
    if lambdas.len() != n as usize {
        return Err(Error::WeightCountMismatch {
            expected: n as usize,
            found: lambdas.len(),
        });
    }
    let p = class.to_chern_roots();
    let mut sum = BigRational::zero();
    for assignment in signed_assignments(lambdas)? {
        let value = p.eval(assignment.signed());
        if value.is_zero() {
            continue;
        }
        sum += value / (assignment.pair_sum_product() * assignment.entry_product());
    }
    Ok(sum * dimension_sign(n) / BigRational::from_integer(BigInt::one() << n))
}

/// Fixed-point sum on the ordinary Grassmannian `G(k, m)`: for a symmetric
/// polynomial `P` in `k` variables and `m` pairwise-distinct weights,
/// returns `Σ_J P(λ_J) / ∏_{i∈J, j∉J}(λ_j - λ_i)` over all `k`-subsets `J`.
///
/// The value equals the integral over `G(k, m)` of the class with
/// Chern-root polynomial `P` (zero when `deg P < k(m-k)`) and is
/// independent of the weights. Errors when fewer than `k` weights are
/// supplied, when they are not pairwise distinct, when `P` is not
/// symmetric, or when `deg P > k(m-k)`.
pub fn localization_grassmannian(p: &SparsePoly, lambdas: &[BigRational]) -> Result<BigRational> {
    let k = p.nvars();
    let m = lambdas.len();
    if m < k {
        return Err(Error::WeightCountMismatch {
            expected: k,
            found: m,
        });
    }
    check_distinct(lambdas)?;
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric { nvars: k });
    }
    let dim = k * (m - k);
    let degree = p.total_degree() as usize;
    if degree > dim {
        return Err(Error::DegreeTooHigh { degree, max: dim });
    }
    let mut sum = BigRational::zero();
    for subset in (0..m).combinations(k) {
        let mut member = vec![false; m];
        for &i in &subset {
            member[i] = true;
        }
        let point: Vec<BigRational> = subset.iter().map(|&i| lambdas[i].clone()).collect();
        let value = p.eval(&point);
        if value.is_zero() {
            continue;
        }
        let mut denom = BigRational::one();
        for &i in &subset {
            for (j, lam) in lambdas.iter().enumerate() {
                if !member[j] {
                    denom *= lam - &lambdas[i];
                }
            }
        }
        sum += value / denom;
    }
    Ok(sum)
}

/// Compares the integral of a class over `LG(n)` against the fixed-point
/// sum over `G(n, 2n)` of the same class twisted by the staircase Schubert
/// polynomial `(-1)^{n(n-1)/2} ∏_{i<j}(x_i + x_j)`. Expects exactly `2n`
/// pairwise-distinct weights.
pub fn relation1_check(class: &ClassExpr, lambdas: &[BigRational]) -> Result<IdentityReport> {
    let n = class.rank();
    let expected = 2 * n as usize;
    if lambdas.len() != expected {
        return Err(Error::WeightCountMismatch {
            expected,
            found: lambdas.len(),
        });
    }
    let lhs = integrate_lg(class)?;
    let twisted = &class.to_chern_roots() * &schubert_staircase_poly(n);
    let rhs = localization_grassmannian(&twisted, lambdas)?;
    Ok(IdentityReport::new(lhs, rhs))
}

/// Integrates a class by the requested route and certifies the result as a
/// kernel coefficient: the returned pair satisfies
/// `integral = (-1)^{n(n+1)/2} · c_n / n!`.
///
/// The localization route uses the default admissible weights `1, …, n`.
pub fn certified(class: &ClassExpr, route: Route) -> Result<CoefficientCertificate> {
    let n = class.rank();
    let integral = match route {
        Route::MainCoefficient => integrate_lg(class)?,
        Route::DpCoefficient => integrate_lg_dp(class)?,
        Route::Localization => {
            let lambdas: Vec<BigRational> = (1..=i64::from(n)).map(crate::rat).collect();
            localization_lg(class, &lambdas)?
        }
    };
    let c_n = &integral * BigRational::from_integer(factorial(n)) * dimension_sign(n);
    Ok(CoefficientCertificate {
        n,
        route,
        c_n,
        integral,
    })
}
