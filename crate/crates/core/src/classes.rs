//! Cohomology classes of `LG(n)` as polynomials in the special classes.
//!
//! The cohomology ring of `LG(n)` is generated by the special Schubert
//! classes `σ_1, …, σ_n`; a [`ClassExpr`] is a polynomial in those
//! generators with exact rational coefficients, tagged with its ambient rank
//! `n`. The Schubert basis class attached to a strict partition is built by
//! the two-stage Giambelli construction: [`qtilde2`] gives the two-index
//! classes and [`qtilde`] reduces longer index partitions to them by a
//! Pfaffian-style Laplace expansion. [`ClassExpr::to_chern_roots`]
//! substitutes `σ_i ↦ (−1)^i e_i(x_1, …, x_n)` — the sign because `σ_i` is a
//! Chern class of the *dual* of the tautological sub-bundle while the
//! integration kernels work with the Chern roots of the sub-bundle itself —
//! producing the symmetric polynomial the integration routines consume.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::StrictPartition;
use crate::poly::{self, SparsePoly};
use crate::{rat, Error, Result};

/// A polynomial in the special classes `σ_1, …, σ_rank` with exact rational
/// coefficients.
///
/// Terms map exponent vectors (entry `k` is the exponent of `σ_{k+1}`) to
/// nonzero coefficients; the zero class is the empty map. The rank is part
/// of the value: the same partition expands differently for different
/// ambient ranks, because generators above the rank vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassExpr {
    rank: u32,
    terms: HashMap<Vec<u32>, BigRational>,
}

impl ClassExpr {
    /// The zero class.
    pub fn zero(rank: u32) -> Self {
        Self {
            rank,
            terms: HashMap::new(),
        }
    }

    /// The unit class.
    pub fn one(rank: u32) -> Self {
        Self::monomial(rank, &vec![0; rank as usize], BigRational::one())
    }

    /// The special class `σ_i`, total by convention: `σ_0 = 1`, and `σ_i = 0`
    /// for `i < 0` or `i > rank`. The totalization is what makes the
    /// two-index formula's sum self-truncating.
    pub fn special(i: i64, rank: u32) -> Self {
        if i == 0 {
            return Self::one(rank);
        }
        if i < 0 || i > rank as i64 {
            return Self::zero(rank);
        }
        let mut exponents = vec![0; rank as usize];
        exponents[(i - 1) as usize] = 1;
        Self::monomial(rank, &exponents, BigRational::one())
    }

    /// A single term `coeff · σ_1^{e_1} ⋯ σ_rank^{e_rank}`.
    pub fn monomial(rank: u32, exponents: &[u32], coeff: BigRational) -> Self {
        assert_eq!(
            exponents.len(),
            rank as usize,
            "exponent vector length must equal the rank"
        );
        let mut c = Self::zero(rank);
        c.add_term(exponents.to_vec(), coeff);
        c
    }

    /// The ambient rank `n`.
    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Whether this is the zero class.
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

    /// The coefficient of `σ_1^{e_1} ⋯ σ_rank^{e_rank}` (zero if absent).
    pub fn coefficient(&self, exponents: &[u32]) -> BigRational {
        assert_eq!(
            exponents.len(),
            self.rank as usize,
            "exponent vector length must equal the rank"
        );
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The cohomological degree: the maximum over terms of `Σ i·e_i` (the
    /// generator `σ_i` has degree `i`). The zero class reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| term_degree(e)).max().unwrap_or(0)
    }

    /// Whether all terms share one cohomological degree (vacuously true for
    /// the zero class).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| term_degree(e));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// The class multiplied by a rational factor.
    pub fn scaled(&self, factor: &BigRational) -> Self {
        let mut out = Self::zero(self.rank);
        if factor.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c * factor);
        }
        out
    }

    /// `self` raised to the `k`-th power; `k = 0` gives the unit class.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The symmetric polynomial representing this class on Chern roots of
    /// the tautological sub-bundle: substitutes `σ_i ↦ (−1)^i e_i(x_1…x_n)`
    /// with `n = rank`. Cohomological degree becomes total degree.
    pub fn to_chern_roots(&self) -> SparsePoly {
        let n = self.rank as usize;
        let generators: Vec<SparsePoly> = (1..=n)
            .map(|i| {
                let e = poly::elem_sym(i, n);
                if i % 2 == 1 {
                    -&e
                } else {
                    e
                }
            })
            .collect();
        let mut out = SparsePoly::zero(n);
        for (exponents, coeff) in &self.terms {
            let mut term = SparsePoly::constant(n, coeff.clone());
            for (idx, &e) in exponents.iter().enumerate() {
                if e > 0 {
                    term = &term * &generators[idx].pow(e);
                }
            }
            out = &out + &term;
        }
        out
    }

    fn add_term(&mut self, exponents: Vec<u32>, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(exponents.len(), self.rank as usize);
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
}

fn term_degree(exponents: &[u32]) -> u32 {
    exponents
        .iter()
        .enumerate()
        .map(|(k, &e)| (k as u32 + 1) * e)
        .sum()
}

impl std::ops::Add for &ClassExpr {
    type Output = ClassExpr;

    fn add(self, rhs: &ClassExpr) -> ClassExpr {
        assert_eq!(self.rank, rhs.rank, "cannot add classes of different ranks");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &ClassExpr {
    type Output = ClassExpr;

    fn sub(self, rhs: &ClassExpr) -> ClassExpr {
        assert_eq!(
            self.rank, rhs.rank,
            "cannot subtract classes of different ranks"
        );
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Neg for &ClassExpr {
    type Output = ClassExpr;

    fn neg(self) -> ClassExpr {
        self.scaled(&rat(-1))
    }
}

impl std::ops::Mul for &ClassExpr {
    type Output = ClassExpr;

    fn mul(self, rhs: &ClassExpr) -> ClassExpr {
        assert_eq!(
            self.rank, rhs.rank,
            "cannot multiply classes of different ranks"
        );
        let mut out = ClassExpr::zero(self.rank);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea
                    .iter()
                    .zip(eb)
                    .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                    .collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for ClassExpr {
    /// Renders in the same grammar the parser accepts: factors like
    /// `2*s4*s3` and `s5*s1^2` joined by signs, e.g. `s2*s1-2*s3`. Terms are
    /// ordered by cohomological degree descending, then lexicographically on
    /// the exponent vectors read from the highest generator down; factors
    /// within a term carry descending generator indices. Unit coefficient
    /// magnitudes are omitted and the zero class renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            term_degree(b)
                .cmp(&term_degree(a))
                .then_with(|| a.iter().rev().cmp(b.iter().rev()))
        });
        for (pos, e) in keys.iter().enumerate() {
            poly::write_signed_term(f, pos == 0, &self.terms[*e], &class_monomial_string(e))?;
        }
        Ok(())
    }
}

fn class_monomial_string(exponents: &[u32]) -> String {
    let mut parts = Vec::new();
    for (idx, &e) in exponents.iter().enumerate().rev() {
        match e {
            0 => {}
            1 => parts.push(format!("s{}", idx + 1)),
            _ => parts.push(format!("s{}^{}", idx + 1, e)),
        }
    }
    parts.join("*")
}

/// The two-index Schubert basis class for `i > j > 0`:
///
/// `Q̃_{i,j} = σ_i σ_j + 2·Σ_{k=1}^{rank−i} (−1)^k σ_{i+k} σ_{j−k}`,
///
/// homogeneous of degree `i + j`. Terms where `j − k < 0` vanish through the
/// totalized [`ClassExpr::special`], so the sum bound only needs to stop the
/// first index at the rank.
pub fn qtilde2(i: u32, j: u32, rank: u32) -> Result<ClassExpr> {
    if i <= j || j == 0 {
        return Err(Error::InvalidPartition);
    }
    if i > rank {
        return Err(Error::PartitionTooWide { part: i, rank });
    }
    Ok(pair_class(i, j, rank))
}

/// `Q̃_{a,b}` for `a > b ≥ 0` with `a ≤ rank`; `b = 0` degenerates to the
/// one-index class `Q̃_a = σ_a`, the reading used by the Laplace expansion's
/// zero padding.
fn pair_class(a: u32, b: u32, rank: u32) -> ClassExpr {
    if b == 0 {
        return ClassExpr::special(a as i64, rank);
    }
    let mut acc = &ClassExpr::special(a as i64, rank) * &ClassExpr::special(b as i64, rank);
    for k in 1..=(rank - a) {
        let term = &ClassExpr::special((a + k) as i64, rank)
            * &ClassExpr::special(b as i64 - k as i64, rank);
        let factor = if k % 2 == 1 { rat(-2) } else { rat(2) };
        acc = &acc + &term.scaled(&factor);
    }
    acc
}

/// The Schubert basis class `Q̃_α` of `LG(rank)` for a strict partition
/// `α ∈ D_rank`, homogeneous of degree `|α|`.
///
/// Construction: length 0 gives the unit, length 1 the special class,
/// length 2 the two-index class, and longer partitions reduce by the
/// Pfaffian Laplace expansion
///
/// `Q̃_α = Σ_{k=1}^{r−1} (−1)^{k−1} Q̃_{α_k, α_r} · Q̃_{α ∖ {α_k, α_r}}`,
///
/// where the length is first rounded up to an even `r` by appending a zero
/// part and `Q̃_{m,0}` is read as `Q̃_m`.
pub fn qtilde(alpha: &StrictPartition, rank: u32) -> Result<ClassExpr> {
    alpha.ensure_fits(rank)?;
    Ok(qtilde_parts(alpha.parts(), rank))
}

fn qtilde_parts(parts: &[u32], rank: u32) -> ClassExpr {
    match parts.len() {
        0 => ClassExpr::one(rank),
        1 => ClassExpr::special(parts[0] as i64, rank),
        2 => pair_class(parts[0], parts[1], rank),
        _ => {
            let mut padded = parts.to_vec();
            if padded.len() % 2 == 1 {
                padded.push(0);
            }
            let r = padded.len();
            let last = padded[r - 1];
            let mut acc = ClassExpr::zero(rank);
            for k in 0..(r - 1) {
                let mut rest = padded.clone();
                rest.remove(r - 1);
                rest.remove(k);
                let product = &pair_class(padded[k], last, rank) * &qtilde_parts(&rest, rank);
                acc = if k % 2 == 0 {
                    &acc + &product
                } else {
                    &acc - &product
                };
            }
            acc
        }
    }
}

/// The symmetric polynomial representing the staircase Schubert class
/// `σ_{(n−1, …, 1)}` on `G(n, 2n)` in the Chern roots of the tautological
/// sub-bundle: `(−1)^{n(n−1)/2}·∏_{i<j}(x_i + x_j)`. This class mediates
/// between integrals over `G(n, 2n)` and over `LG(n)`.
pub fn schubert_staircase_poly(n: u32) -> SparsePoly {
    let p = poly::pairwise_sum_product(n as usize);
    if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        -&p
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::all_strict_partitions;
    use crate::poly::SparsePoly;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn sigma(i: i64, rank: u32) -> ClassExpr {
        ClassExpr::special(i, rank)
    }

    #[test]
    fn special_classes_are_total() {
        assert_eq!(sigma(0, 3), ClassExpr::one(3));
        assert!(sigma(-1, 3).is_zero());
        assert!(sigma(4, 3).is_zero());
        assert_eq!(sigma(2, 3).coefficient(&[0, 1, 0]), rat(1));
        assert_eq!(sigma(2, 3).degree(), 2);
    }

    #[test]
    fn class_arithmetic_expands_products() {
        let n = 3;
        let p = &sigma(1, n) + &sigma(2, n);
        let sq = &p * &p;
        assert_eq!(sq.coefficient(&[2, 0, 0]), rat(1));
        assert_eq!(sq.coefficient(&[1, 1, 0]), rat(2));
        assert_eq!(sq.coefficient(&[0, 2, 0]), rat(1));
        assert!(!sq.is_homogeneous());
        assert_eq!(sq.degree(), 4);
        assert_eq!(p.pow(2), sq);
        let cancel = &p - &p;
        assert!(cancel.is_zero());
    }

    #[test]
    fn two_index_classes_match_printed_expansions() {
        // Q̃_{2,1} at rank 3 = σ2σ1 − 2σ3
        let q21 = qtilde2(2, 1, 3).unwrap();
        let expect = &(&sigma(2, 3) * &sigma(1, 3)) - &sigma(3, 3).scaled(&rat(2));
        assert_eq!(q21, expect);
        // Q̃_{3,2} at rank 4 = σ3σ2 − 2σ4σ1
        let q32 = qtilde2(3, 2, 4).unwrap();
        let expect = &(&sigma(3, 4) * &sigma(2, 4))
            - &(&sigma(4, 4) * &sigma(1, 4)).scaled(&rat(2));
        assert_eq!(q32, expect);
        // Q̃_{4,3} at rank 5 = σ4σ3 − 2σ5σ2
        let q43 = qtilde2(4, 3, 5).unwrap();
        let expect = &(&sigma(4, 5) * &sigma(3, 5))
            - &(&sigma(5, 5) * &sigma(2, 5)).scaled(&rat(2));
        assert_eq!(q43, expect);
        // the same pair expands differently at a larger rank
        let q21_wide = qtilde2(2, 1, 5).unwrap();
        assert_ne!(q21_wide.coefficient(&[0, 0, 1, 0, 0]), rat(0));
    }

    #[test]
    fn two_index_preconditions() {
        assert_eq!(qtilde2(1, 1, 3), Err(Error::InvalidPartition));
        assert_eq!(qtilde2(2, 0, 3), Err(Error::InvalidPartition));
        assert_eq!(
            qtilde2(5, 1, 4),
            Err(Error::PartitionTooWide { part: 5, rank: 4 })
        );
        // i = rank leaves an empty correction sum
        assert_eq!(
            qtilde2(3, 1, 3).unwrap(),
            &sigma(3, 3) * &sigma(1, 3)
        );
    }

    #[test]
    fn qtilde_reproduces_the_length_three_expansion() {
        // Q̃_{4,2,1} at rank 5 = σ4σ2σ1 − 2σ4σ3 + 2σ5σ2 − 2σ5σ1²
        let q = qtilde(&sp(&[4, 2, 1]), 5).unwrap();
        let s = |i| sigma(i, 5);
        let expect = &(&(&(&s(4) * &s(2)) * &s(1))
            - &(&s(4) * &s(3)).scaled(&rat(2)))
            + &(&(&s(5) * &s(2)).scaled(&rat(2))
                - &(&(&s(5) * &s(1)) * &s(1)).scaled(&rat(2)));
        assert_eq!(q, expect);
        assert!(q.is_homogeneous());
        assert_eq!(q.degree(), 7);
    }

    #[test]
    fn qtilde_short_lengths_delegate() {
        assert_eq!(qtilde(&StrictPartition::empty(), 4).unwrap(), ClassExpr::one(4));
        assert_eq!(qtilde(&sp(&[3]), 4).unwrap(), sigma(3, 4));
        assert_eq!(qtilde(&sp(&[2, 1]), 3).unwrap(), qtilde2(2, 1, 3).unwrap());
        assert!(qtilde(&sp(&[5, 1]), 4).is_err());
    }

    #[test]
    fn laplace_expansion_matches_direct_pfaffian_for_length_four() {
        for rank in [4u32, 5] {
            let q = qtilde(&sp(&[4, 3, 2, 1]), rank).unwrap();
            let p = |a, b| qtilde2(a, b, rank).unwrap();
            let direct = &(&(&p(4, 3) * &p(2, 1)) - &(&p(4, 2) * &p(3, 1)))
                + &(&p(4, 1) * &p(3, 2));
            assert_eq!(q, direct, "mismatch at rank {rank}");
        }
    }

    #[test]
    fn qtilde_is_homogeneous_of_the_partition_weight() {
        for n in 1..=4u32 {
            for a in all_strict_partitions(n) {
                let q = qtilde(&a, n).unwrap();
                assert!(q.is_homogeneous(), "Q[{a}] at rank {n}");
                assert!(!q.is_zero());
                assert_eq!(q.degree(), a.weight(), "Q[{a}] at rank {n}");
            }
        }
    }

    #[test]
    fn chern_root_substitution_applies_dual_signs() {
        assert_eq!(
            sigma(1, 1).to_chern_roots(),
            -&SparsePoly::var(1, 0)
        );
        assert_eq!(
            sigma(2, 2).to_chern_roots(),
            &SparsePoly::var(2, 0) * &SparsePoly::var(2, 1)
        );
        let p = qtilde2(2, 1, 3).unwrap().to_chern_roots();
        assert!(p.is_symmetric());
        assert!(p.is_homogeneous());
        assert_eq!(p.total_degree(), 3);
        assert!(ClassExpr::zero(2).to_chern_roots().is_zero());
    }

    #[test]
    fn staircase_polynomial_carries_the_parity_sign() {
        assert_eq!(schubert_staircase_poly(1), SparsePoly::one(1));
        let n2 = schubert_staircase_poly(2);
        assert_eq!(n2.coeff(&[1, 0]), rat(-1));
        assert_eq!(n2.coeff(&[0, 1]), rat(-1));
        let n3 = schubert_staircase_poly(3);
        assert!(n3.is_symmetric());
        assert_eq!(n3.total_degree(), 3);
        assert_eq!(n3.coeff(&[2, 1, 0]), rat(-1));
        assert_eq!(n3.coeff(&[1, 1, 1]), rat(-2));
    }

    #[test]
    fn display_matches_the_parser_grammar() {
        assert_eq!(qtilde2(2, 1, 3).unwrap().to_string(), "s2*s1-2*s3");
        assert_eq!(qtilde2(3, 2, 4).unwrap().to_string(), "s3*s2-2*s4*s1");
        assert_eq!(ClassExpr::zero(2).to_string(), "0");
        assert_eq!(ClassExpr::one(2).to_string(), "1");
        assert_eq!(sigma(2, 3).scaled(&rat(-1)).to_string(), "-s2");
        let q421 = qtilde(&sp(&[4, 2, 1]), 5).unwrap();
        assert_eq!(
            q421.to_string(),
            "s4*s2*s1-2*s4*s3-2*s5*s1^2+2*s5*s2"
        );
    }
}
