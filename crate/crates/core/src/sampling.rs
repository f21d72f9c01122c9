//! Seeded random inputs for randomized verification.
//!
//! Everything here is deterministic given the seed, so a failing trial can
//! be replayed exactly. The generators produce the three kinds of input the
//! identity checks consume: admissible weight vectors, duplicate-free root
//! sets, and random (symmetric) polynomials and classes of bounded degree.

use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classes::ClassExpr;
use crate::identities::MonicRootSet;
use crate::poly::{elem_sym, SparsePoly};
use crate::rat;

/// A reproducible RNG for a given seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn distinct_from_pool<R: Rng + ?Sized>(
    rng: &mut R,
    mut pool: Vec<i64>,
    count: usize,
) -> Vec<BigRational> {
    assert!(pool.len() >= count, "sample pool smaller than request");
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let k = rng.random_range(0..pool.len());
        out.push(rat(pool.swap_remove(k)));
    }
    out
}

/// `n` distinct integers from `1..=10n` — admissible as localization
/// weights, since distinct positive integers have distinct squares.
pub fn admissible_lambdas<R: Rng + ?Sized>(rng: &mut R, n: u32) -> Vec<BigRational> {
    if n == 0 {
        return Vec::new();
    }
    let bound = 10 * i64::from(n);
    distinct_from_pool(rng, (1..=bound).collect(), n as usize)
}

/// `count` pairwise-distinct integers from `-5·count..=5·count` (zero
/// included — ordinary Grassmannian weights only need distinctness).
pub fn distinct_lambdas<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<BigRational> {
    let bound = 5 * count as i64;
    distinct_from_pool(rng, (-bound..=bound).collect(), count)
}

/// A root set of the given size with distinct integer roots from
/// `-3·size..=3·size`.
pub fn root_set<R: Rng + ?Sized>(rng: &mut R, size: usize) -> MonicRootSet {
    assert!(size >= 1, "root sets are nonempty");
    let bound = 3 * size as i64;
    let roots = distinct_from_pool(rng, (-bound..=bound).collect(), size);
    MonicRootSet::new(roots).expect("pool sampling yields distinct roots")
}

/// All exponent vectors `(a_1, …, a_n)` with `Σ k·a_k ≤ bound` (or exactly
/// `bound` when `exact` is set), where slot `k` carries weight `k`.
fn exponent_vectors(n: usize, bound: u32, exact: bool) -> Vec<Vec<u32>> {
    fn fill(
        out: &mut Vec<Vec<u32>>,
        current: &mut Vec<u32>,
        pos: usize,
        remaining: u32,
        exact: bool,
    ) {
        if pos == current.len() {
            if !exact || remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let weight = (pos + 1) as u32;
        for a in 0..=remaining / weight {
            current[pos] = a;
            fill(out, current, pos + 1, remaining - a * weight, exact);
        }
        current[pos] = 0;
    }
    let mut out = Vec::new();
    fill(&mut out, &mut vec![0; n], 0, bound, exact);
    out
}

/// A nonzero rational with integer numerator in `-magnitude..=magnitude`
/// and denominator in `1..=max_denominator`.
fn random_coeff<R: Rng + ?Sized>(rng: &mut R, magnitude: i64, max_denominator: i64) -> BigRational {
    let mut numerator = 0;
    while numerator == 0 {
        numerator = rng.random_range(-magnitude..=magnitude);
    }
    let denominator = rng.random_range(1..=max_denominator);
    BigRational::new(numerator.into(), denominator.into())
}

/// A random nonzero symmetric polynomial in `n` variables of total degree
/// at most `max_weight`: a rational combination of products of elementary
/// symmetric polynomials.
pub fn symmetric_poly<R: Rng + ?Sized>(rng: &mut R, n: usize, max_weight: u32) -> SparsePoly {
    assert!(n >= 1, "need at least one variable");
    let vectors = exponent_vectors(n, max_weight, false);
    let elems: Vec<SparsePoly> = (1..=n).map(|k| elem_sym(k, n)).collect();
    let term = |rng: &mut R, exponents: &[u32]| {
        let mut t = SparsePoly::constant(n, random_coeff(rng, 9, 3));
        for (slot, &a) in exponents.iter().enumerate() {
            if a > 0 {
                t = &t * &elems[slot].pow(a);
            }
        }
        t
    };
    let mut acc = SparsePoly::zero(n);
    let mut included = false;
    for v in &vectors {
        if rng.random_bool(0.35) {
            acc = &acc + &term(rng, v);
            included = true;
        }
    }
    if !included {
        let pick = rng.random_range(0..vectors.len());
        acc = &acc + &term(rng, &vectors[pick]);
    }
    acc
}

/// A random nonzero class on `LG(n)`, homogeneous of the given weight,
/// with small integer coefficients.
pub fn homogeneous_class<R: Rng + ?Sized>(rng: &mut R, n: u32, weight: u32) -> ClassExpr {
    assert!(n >= 1, "need at least one generator");
    let vectors = exponent_vectors(n as usize, weight, true);
    let mut acc = ClassExpr::zero(n);
    let mut included = false;
    for v in &vectors {
        if rng.random_bool(0.5) {
            acc = &acc + &ClassExpr::monomial(n, v, random_coeff(rng, 3, 1));
            included = true;
        }
    }
    if !included {
        let pick = rng.random_range(0..vectors.len());
        acc = &acc + &ClassExpr::monomial(n, &vectors[pick], random_coeff(rng, 3, 1));
    }
    acc
}
