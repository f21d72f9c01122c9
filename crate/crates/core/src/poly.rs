//! Sparse multivariate polynomial arithmetic over the rationals.
//!
//! [`SparsePoly`] is the computational substrate of the crate: every
//! characteristic-class integral eventually becomes a coefficient extraction
//! from a product of these polynomials. Coefficients are exact
//! [`BigRational`]s, terms live in a canonical sparse map (no zero
//! coefficients are ever stored), and equality of values is equality of the
//! maps. The structured kernels used by the integration routines —
//! [`vandermonde`], [`discriminant`] and [`pairwise_sum_product`] — are built
//! here as honest products of linear factors.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A sparse polynomial in `nvars` variables `x1, …, xn` with exact rational
/// coefficients.
///
/// Invariants maintained by every constructor and operation:
///
/// * every exponent key has length `nvars`,
/// * no stored coefficient is zero (the zero polynomial is the empty map
///   with `nvars` retained),
/// * arithmetic panics if the operands disagree on `nvars` — mixing variable
///   counts is a programming error, not a data error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: HashMap<Vec<u32>, BigRational>,
}

impl SparsePoly {
    /// The zero polynomial in `nvars` variables.
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: HashMap::new(),
        }
    }

    /// The constant polynomial `1`.
    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// A constant polynomial.
    pub fn constant(nvars: usize, value: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], value);
        p
    }

    /// The variable `x{index+1}` (zero-based `index`).
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(
            index < nvars,
            "variable index {index} out of range for {nvars} variables"
        );
        let mut exponents = vec![0; nvars];
        exponents[index] = 1;
        Self::monomial(nvars, &exponents, BigRational::one())
    }

    /// The monomial `coeff · x1^e1 ⋯ xn^en`.
    pub fn monomial(nvars: usize, exponents: &[u32], coeff: BigRational) -> Self {
        assert_eq!(
            exponents.len(),
            nvars,
            "exponent vector length must equal the variable count"
        );
        let mut p = Self::zero(nvars);
        p.add_term(exponents.to_vec(), coeff);
        p
    }

    /// Number of variables (fixed at construction).
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates over `(exponent vector, coefficient)` pairs in arbitrary
    /// order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// The coefficient of the monomial with the given exponents (zero if the
    /// monomial is absent).
    pub fn coeff(&self, exponents: &[u32]) -> BigRational {
        assert_eq!(
            exponents.len(),
            self.nvars,
            "exponent vector length must equal the variable count"
        );
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Total degree: the maximum over terms of the sum of exponents. The
    /// zero polynomial reports degree 0.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Whether all terms share one total degree (vacuously true for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    fn add_term(&mut self, exponents: Vec<u32>, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(exponents.len(), self.nvars);
        match self.terms.entry(exponents) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplies two polynomials, discarding every product term in which
    /// some exponent exceeds `cap`.
    ///
    /// Exponents only grow when polynomials with nonnegative exponents are
    /// multiplied, so for any monomial whose exponents are all `≤ cap`,
    /// iterated pruned products produce exactly the coefficient the unpruned
    /// product would. This keeps coefficient extraction against large
    /// structured kernels tractable: intermediate term counts stay bounded
    /// by `(cap+1)^nvars` instead of exploding.
    pub fn mul_pruned(&self, rhs: &Self, cap: u32) -> Self {
        self.mul_impl(rhs, Some(cap))
    }

    fn mul_impl(&self, rhs: &Self, cap: Option<u32>) -> Self {
        assert_eq!(
            self.nvars, rhs.nvars,
            "cannot multiply polynomials with different variable counts"
        );
        let mut out = Self::zero(self.nvars);
        out.terms.reserve(self.terms.len().max(rhs.terms.len()));
        for (ea, ca) in &self.terms {
            'rhs: for (eb, cb) in &rhs.terms {
                let mut e = Vec::with_capacity(self.nvars);
                for (a, b) in ea.iter().zip(eb) {
                    let s = a.checked_add(*b).expect("exponent overflow");
                    if cap.is_some_and(|c| s > c) {
                        continue 'rhs;
                    }
                    e.push(s);
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// `self` raised to the `k`-th power; `k = 0` gives the constant 1.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates the polynomial at a point, which must supply one value per
    /// variable. Powers of each coordinate are computed once and reused.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(
            point.len(),
            self.nvars,
            "evaluation point length must equal the variable count"
        );
        let mut max_exp = vec![0u32; self.nvars];
        for e in self.terms.keys() {
            for (m, &x) in max_exp.iter_mut().zip(e) {
                *m = (*m).max(x);
            }
        }
        let tables: Vec<Vec<BigRational>> = point
            .iter()
            .zip(&max_exp)
            .map(|(x, &m)| {
                let mut powers = Vec::with_capacity(m as usize + 1);
                powers.push(BigRational::one());
                for k in 1..=m as usize {
                    let next = &powers[k - 1] * x;
                    powers.push(next);
                }
                powers
            })
            .collect();
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (table, &k) in tables.iter().zip(e) {
                if k > 0 {
                    term *= &table[k as usize];
                }
            }
            acc += term;
        }
        acc
    }

    /// Whether the polynomial is invariant under every permutation of its
    /// variables. Checked on the adjacent transpositions, which generate the
    /// full symmetric group.
    pub fn is_symmetric(&self) -> bool {
        for k in 0..self.nvars.saturating_sub(1) {
            for (e, c) in &self.terms {
                if e[k] != e[k + 1] {
                    let mut swapped = e.clone();
                    swapped.swap(k, k + 1);
                    if self.terms.get(&swapped) != Some(c) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(
            self.nvars, rhs.nvars,
            "cannot add polynomials with different variable counts"
        );
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(
            self.nvars, rhs.nvars,
            "cannot subtract polynomials with different variable counts"
        );
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.mul_impl(rhs, None)
    }
}

impl fmt::Display for SparsePoly {
    /// Renders terms in graded-lexicographic order — total degree
    /// descending, then exponent vectors lexicographically descending — with
    /// unit coefficient magnitudes omitted, e.g. `-x1^2+2*x1*x2-x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (pos, e) in keys.iter().enumerate() {
            write_signed_term(f, pos == 0, &self.terms[*e], &monomial_string(e))?;
        }
        Ok(())
    }
}

/// Writes one `±coeff*factors` chunk of a polynomial rendering, omitting
/// unit coefficient magnitudes and choosing the separator from the sign.
/// Shared between [`SparsePoly`] and the class-expression display.
pub(crate) fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &BigRational,
    factors: &str,
) -> fmt::Result {
    let negative = coeff < &BigRational::zero();
    if negative {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    let magnitude = if negative { -coeff } else { coeff.clone() };
    if factors.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude.is_one() {
        f.write_str(factors)
    } else {
        write!(f, "{magnitude}*{factors}")
    }
}

fn monomial_string(exponents: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exponents.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

/// The elementary symmetric polynomial `e_k(x1, …, x_nvars)`: the sum of all
/// products of `k` distinct variables. `e_0 = 1`, and `e_k = 0` for
/// `k > nvars`.
pub fn elem_sym(k: usize, nvars: usize) -> SparsePoly {
    if k > nvars {
        return SparsePoly::zero(nvars);
    }
    let mut p = SparsePoly::zero(nvars);
    for subset in (0..nvars).combinations(k) {
        let mut e = vec![0u32; nvars];
        for i in subset {
            e[i] = 1;
        }
        p.add_term(e, BigRational::one());
    }
    p
}

/// `x_i + sign·x_j` in `n` variables (zero-based indices).
fn linear_pair_factor(n: usize, i: usize, j: usize, sign: i64) -> SparsePoly {
    let mut p = SparsePoly::var(n, i);
    let mut e = vec![0u32; n];
    e[j] = 1;
    p.add_term(e, crate::rat(sign));
    p
}

/// The Vandermonde product `∏_{1≤i<j≤n}(x_i − x_j)` (empty product 1 for
/// `n ≤ 1`).
pub fn vandermonde(n: usize) -> SparsePoly {
    let mut acc = SparsePoly::one(n);
    for i in 0..n {
        for j in (i + 1)..n {
            acc = &acc * &linear_pair_factor(n, i, j, -1);
        }
    }
    acc
}

/// The product `∏_{i≠j}(x_i − x_j)` over ordered pairs; it equals
/// `(−1)^{n(n−1)/2}` times the squared Vandermonde product.
pub fn discriminant(n: usize) -> SparsePoly {
    let mut acc = SparsePoly::one(n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc = &acc * &linear_pair_factor(n, i, j, -1);
            }
        }
    }
    acc
}

/// The product `∏_{1≤i<j≤n}(x_i + x_j)` (empty product 1 for `n ≤ 1`).
pub fn pairwise_sum_product(n: usize) -> SparsePoly {
    let mut acc = SparsePoly::one(n);
    for i in 0..n {
        for j in (i + 1)..n {
            acc = &acc * &linear_pair_factor(n, i, j, 1);
        }
    }
    acc
}
