//! Strict partitions and signed weight assignments.
//!
//! The Schubert basis of the cohomology of `LG(n)` is indexed by `D_n`, the
//! set of strict partitions whose parts are at most `n`; [`StrictPartition`]
//! models those index partitions together with the dual (complementary)
//! partition and the staircase. The torus fixed points of `LG(n)` are
//! indexed by subsets `I ⊆ {1, …, n}`; [`SignedAssignment`] records the
//! sign-flipped weight vector `λ_I` attached to each subset, which is what
//! the localization sums in [`crate::integrate`] and [`crate::identities`]
//! iterate over.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Complex dimension of `LG(n)`, the triangular number `n(n+1)/2`.
pub fn lg_dimension(n: u32) -> u32 {
    n * (n + 1) / 2
}

/// A strictly decreasing sequence of positive integer parts.
///
/// Values carry no ambient rank: the same partition indexes a Schubert class
/// on every `LG(n)` large enough to admit it, and some operations
/// deliberately evaluate one partition against several ranks (degree-one
/// three-point invariants lift classes of `LG(n)` to `LG(n+1)`). Membership
/// in `D_n` is therefore checked per operation via [`StrictPartition::fits`].
///
/// The derived ordering (lexicographic on the part vectors) is used only to
/// give deterministic iteration orders to maps keyed by partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    /// Validates that `parts` is strictly decreasing with positive entries.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] > w[1]);
        let positive = parts.last().is_none_or(|&p| p > 0);
        if decreasing && positive {
            Ok(Self { parts })
        } else {
            Err(Error::InvalidPartition)
        }
    }

    /// The empty partition, the unit index of weight zero.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The staircase partition `(n−1, n−2, …, 1)`; empty for `n = 1`.
    pub fn staircase(n: u32) -> Self {
        Self {
            parts: (1..n).rev().collect(),
        }
    }

    /// The parts in decreasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The weight `|α|`, i.e. the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The length `l(α)`, i.e. the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The largest part, or 0 for the empty partition.
    pub fn max_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Whether the partition lies in `D_n`, i.e. every part is at most `n`.
    pub fn fits(&self, n: u32) -> bool {
        self.max_part() <= n
    }

    /// Errors with [`Error::PartitionTooWide`] unless the partition is in
    /// `D_n`.
    pub fn ensure_fits(&self, n: u32) -> Result<()> {
        if self.fits(n) {
            Ok(())
        } else {
            Err(Error::PartitionTooWide {
                part: self.max_part(),
                rank: n,
            })
        }
    }

    /// The dual partition `α∨`, whose parts complement the parts of `α` in
    /// `{1, …, n}`. Duality is an involution and weights are complementary:
    /// `|α| + |α∨| = n(n+1)/2`.
    pub fn dual(&self, n: u32) -> Result<Self> {
        self.ensure_fits(n)?;
        let taken: HashSet<u32> = self.parts.iter().copied().collect();
        let parts = (1..=n).rev().filter(|p| !taken.contains(p)).collect();
        Ok(Self { parts })
    }
}

impl fmt::Display for StrictPartition {
    /// Comma-separated decreasing parts, e.g. `3,2,1`; the empty partition
    /// renders as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    /// Parses comma-separated decreasing parts. The empty string and `"0"`
    /// both mean the empty partition. Reported positions are byte offsets
    /// into the trimmed input.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "0" {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        let mut offset = 0usize;
        for piece in trimmed.split(',') {
            let value: u32 = piece.trim().parse().map_err(|_| Error::Parse {
                pos: offset,
                msg: format!("expected a positive integer part, found {piece:?}"),
            })?;
            parts.push(value);
            offset += piece.len() + 1;
        }
        Self::new(parts)
    }
}

/// All strict partitions with parts at most `n` and weight exactly `w`, in
/// lexicographically descending order (largest first part first). Empty when
/// `w` exceeds `n(n+1)/2`, since no such partition exists.
pub fn strict_partitions(n: u32, w: u32) -> Vec<StrictPartition> {
    fn gen(bound: u32, w: u32, prefix: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
        if w == 0 {
            out.push(StrictPartition {
                parts: prefix.clone(),
            });
            return;
        }
        let top = bound.min(w);
        for p in (1..=top).rev() {
            prefix.push(p);
            gen(p - 1, w - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    gen(n, w, &mut Vec::new(), &mut out);
    out
}

/// All of `D_n`, grouped by weight `0, 1, …, n(n+1)/2` and lexicographically
/// descending within each weight. The total count is `2^n`.
pub fn all_strict_partitions(n: u32) -> Vec<StrictPartition> {
    (0..=lg_dimension(n))
        .flat_map(|w| strict_partitions(n, w))
        .collect()
}

/// Errors unless the weights are admissible for the fixed-point sums over
/// `LG(n)`: every entry nonzero and the squares pairwise distinct. (Equal
/// squares would put `λ_i + λ_j` or `λ_i − λ_j` to zero in some fixed-point
/// denominator.)
pub fn check_admissible(lambdas: &[BigRational]) -> Result<()> {
    if lambdas.iter().any(|l| l.is_zero()) {
        return Err(Error::InadmissibleWeights);
    }
    let mut squares = HashSet::new();
    for l in lambdas {
        if !squares.insert(l * l) {
            return Err(Error::InadmissibleWeights);
        }
    }
    Ok(())
}

/// Errors with [`Error::WeightsNotDistinct`] unless the weights are pairwise
/// distinct (the admissibility notion for ordinary Grassmannian fixed-point
/// sums, where only differences `λ_i − λ_j` appear in denominators).
pub fn check_distinct(lambdas: &[BigRational]) -> Result<()> {
    let mut seen = HashSet::new();
    for l in lambdas {
        if !seen.insert(l.clone()) {
            return Err(Error::WeightsNotDistinct);
        }
    }
    Ok(())
}

/// One torus fixed point of `LG(n)`: the subset `I ⊆ {1, …, n}` encoded as a
/// bitmask together with the signed weight vector `λ_I`, whose `k`-th entry
/// is `λ_{k+1}` when `k+1 ∈ I` and `−λ_{k+1}` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedAssignment {
    mask: u32,
    signed: Vec<BigRational>,
}

impl SignedAssignment {
    /// Number of weights `n`.
    pub fn n(&self) -> usize {
        self.signed.len()
    }

    /// The subset as a bitmask; bit `k` set means `k+1 ∈ I`.
    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// The cardinality `|I|`.
    pub fn subset_size(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Whether the zero-based index `k` keeps its sign, i.e. `k+1 ∈ I`.
    pub fn contains(&self, k: usize) -> bool {
        self.mask >> k & 1 == 1
    }

    /// The signed weight vector `λ_I`.
    pub fn signed(&self) -> &[BigRational] {
        &self.signed
    }

    /// `∏_{i<j} (λ_{i,I} + λ_{j,I})`, the pairwise-sum product that shows
    /// up in every fixed-point denominator. Nonzero whenever the weights
    /// are admissible, since `λ_{i,I} + λ_{j,I} = ±λ_i ± λ_j` and the
    /// squares of the weights are pairwise distinct.
    pub fn pair_sum_product(&self) -> BigRational {
        let mut product = BigRational::one();
        for (i, a) in self.signed.iter().enumerate() {
            for b in &self.signed[i + 1..] {
                product *= a + b;
            }
        }
        product
    }

    /// `∏_i λ_{i,I}`, the product of the signed weights themselves.
    pub fn entry_product(&self) -> BigRational {
        self.signed.iter().product()
    }
}

/// All `2^n` signed assignments for an admissible weight vector, in
/// increasing bitmask order (so the first entry is `I = ∅`, all signs
/// flipped, and the last is `I = {1, …, n}`, no flips).
pub fn signed_assignments(lambdas: &[BigRational]) -> Result<Vec<SignedAssignment>> {
    check_admissible(lambdas)?;
    let n = lambdas.len();
    assert!(n < 31, "signed assignment enumeration is exponential in n");
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0..(1u32 << n) {
        let signed = lambdas
            .iter()
            .enumerate()
            .map(|(k, l)| if mask >> k & 1 == 1 { l.clone() } else { -l })
            .collect();
        out.push(SignedAssignment { mask, signed });
    }
    Ok(out)
}
