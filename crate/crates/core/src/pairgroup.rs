//! The pair group: vertex permutations, the permutations they induce on the
//! `C(n,2)` edge slots, and the resulting action on edge-weight vectors.
//!
//! Edges are numbered 1-based in lexicographic order
//! `(1,2) < (1,3) < ... < (1,n) < (2,3) < ... < (n-1,n)`. Storage is 0-based;
//! every public constructor and accessor that talks about labels or
//! positions uses 1-based numbers.

use std::fmt;

use itertools::Itertools;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default bound on `n` for anything that materializes all `n!` group elements.
pub const DEFAULT_MAX_N: usize = 8;

/// Configuration for exhaustive group enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: DEFAULT_MAX_N }
    }
}

impl Limits {
    pub fn new(max_n: usize) -> Self {
        Limits { max_n }
    }

    pub(crate) fn check(&self, n: usize) -> Result<()> {
        if n < 3 {
            return Err(Error::DegenerateSize { n });
        }
        if n > self.max_n {
            return Err(Error::SizeLimit { n, max: self.max_n });
        }
        Ok(())
    }
}

/// Number of edge slots on `n` vertices.
pub const fn edge_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Rank of the pair `(i, j)` in lexicographic pair order, 1-based.
pub fn pair_index(i: usize, j: usize, n: usize) -> Result<usize> {
    if i == 0 || i >= j || j > n {
        return Err(Error::InvalidPair { i, j, n });
    }
    Ok(pair_slot(i - 1, j - 1, n) + 1)
}

/// Inverse of [`pair_index`]: the pair `(i, j)` at 1-based position `s`.
pub fn pair_at(s: usize, n: usize) -> Result<(usize, usize)> {
    let m = edge_count(n);
    if s == 0 || s > m {
        return Err(Error::DimensionMismatch { expected: m, found: s });
    }
    let (a, b) = pair_of_slot(s - 1, n);
    Ok((a + 1, b + 1))
}

// 0-based labels a < b, 0-based slot.
#[inline]
pub(crate) fn pair_slot(a: usize, b: usize, n: usize) -> usize {
    debug_assert!(a < b && b < n);
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

pub(crate) fn pair_of_slot(mut s: usize, n: usize) -> (usize, usize) {
    let mut a = 0;
    while s >= n - a - 1 {
        s -= n - a - 1;
        a += 1;
    }
    (a, a + 1 + s)
}

#[inline]
pub(crate) fn unordered_slot(a: usize, b: usize, n: usize) -> usize {
    if a < b {
        pair_slot(a, b, n)
    } else {
        pair_slot(b, a, n)
    }
}

/// A bijection of the vertex labels `{1..n}`.
///
/// Ordering is lexicographic on one-line notation, which is the order used
/// to break ties between frames.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPermutation {
    images: Vec<usize>,
}

impl VertexPermutation {
    pub fn identity(n: usize) -> Self {
        VertexPermutation { images: (0..n).collect() }
    }

    /// Builds `σ` from one-line notation: entry `i` (1-based) is `σ(i)`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={n}")));
            }
            seen[v - 1] = true;
            zero_based.push(v - 1);
        }
        Ok(VertexPermutation { images: zero_based })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        VertexPermutation { images }
    }

    /// Transposition of the 1-based labels `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!("transposition ({a} {b}) outside 1..={n}")));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Ok(VertexPermutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    /// `σ(v)` for a 1-based label.
    pub fn image(&self, v: usize) -> usize {
        self.images[v - 1] + 1
    }

    pub(crate) fn images0(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &VertexPermutation) -> VertexPermutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        VertexPermutation { images: other.images.iter().map(|&v| self.images[v]).collect() }
    }

    pub fn inverse(&self) -> VertexPermutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        VertexPermutation { images: inv }
    }

    /// All `n!` permutations in lexicographic one-line order.
    pub fn all(n: usize) -> impl Iterator<Item = VertexPermutation> {
        (0..n).permutations(n).map(|images| VertexPermutation { images })
    }
}

impl fmt::Display for VertexPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images.iter().map(|v| v + 1).join(" "))
    }
}

/// The permutation of edge slots induced by a vertex permutation, together
/// with that vertex permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairAction {
    n: usize,
    source: VertexPermutation,
    index_map: Vec<usize>,
}

impl PairAction {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> &VertexPermutation {
        &self.source
    }

    /// `τ` in one-line notation over the 1-based edge positions.
    pub fn index_map(&self) -> Vec<usize> {
        self.index_map.iter().map(|s| s + 1).collect()
    }

    pub(crate) fn index_map0(&self) -> &[usize] {
        &self.index_map
    }

    /// `self ∘ other` on edge positions; equals the action induced by the
    /// composed vertex permutations.
    pub fn compose(&self, other: &PairAction) -> PairAction {
        assert_eq!(self.n, other.n, "composing pair actions of different n");
        PairAction {
            n: self.n,
            source: self.source.compose(&other.source),
            index_map: other.index_map.iter().map(|&s| self.index_map[s]).collect(),
        }
    }

    pub fn inverse(&self) -> PairAction {
        let mut inv = vec![0; self.index_map.len()];
        for (s, &t) in self.index_map.iter().enumerate() {
            inv[t] = s;
        }
        PairAction { n: self.n, source: self.source.inverse(), index_map: inv }
    }
}

/// `τ(pair_index(i,j)) = pair_index(sort(σ(i), σ(j)))` for every pair.
pub fn induced_pair_action(sigma: &VertexPermutation) -> PairAction {
    let n = sigma.degree();
    let mut index_map = Vec::with_capacity(edge_count(n));
    for a in 0..n {
        for b in a + 1..n {
            index_map.push(unordered_slot(sigma.images[a], sigma.images[b], n));
        }
    }
    PairAction { n, source: sigma.clone(), index_map }
}

/// Every element of the pair group on `n` vertices, one per vertex
/// permutation, in lexicographic order of the source permutation.
pub fn enumerate_group(n: usize, limits: Limits) -> Result<Vec<PairAction>> {
    limits.check(n)?;
    Ok(VertexPermutation::all(n).map(|s| induced_pair_action(&s)).collect())
}

/// Edge weights of a graph on `n` vertices, in lexicographic pair order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeVector {
    n: usize,
    weights: Vec<Scalar>,
}

impl EdgeVector {
    pub fn new(n: usize, weights: Vec<Scalar>) -> Result<Self> {
        if n < 3 {
            return Err(Error::DegenerateSize { n });
        }
        let m = edge_count(n);
        if weights.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: weights.len() });
        }
        Ok(EdgeVector { n, weights })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        EdgeVector::new(n, vec![Scalar::zero(); edge_count(n)])
    }

    /// Convenience constructor from integer weights.
    pub fn from_integers(n: usize, weights: &[i64]) -> Result<Self> {
        EdgeVector::new(n, weights.iter().map(|&w| crate::scalar::from_i64(w)).collect())
    }

    /// The graph whose only nonzero edge is `{i, j}` with weight 1.
    pub fn basis(n: usize, i: usize, j: usize) -> Result<Self> {
        let s = pair_index(i, j, n)?;
        let mut x = EdgeVector::zeros(n)?;
        x.weights[s - 1] = crate::scalar::from_i64(1);
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Scalar] {
        &self.weights
    }

    pub fn into_weights(self) -> Vec<Scalar> {
        self.weights
    }

    /// Weight of the edge between 1-based labels `i` and `j` (either order).
    pub fn weight(&self, i: usize, j: usize) -> Result<&Scalar> {
        let s = if i < j { pair_index(i, j, self.n)? } else { pair_index(j, i, self.n)? };
        Ok(&self.weights[s - 1])
    }

    /// True when every weight is 0 or 1.
    pub fn is_simple(&self) -> bool {
        self.weights.iter().all(crate::scalar::is_zero_or_one)
    }

    /// Sorted copy of the weights.
    pub fn multiset(&self) -> Vec<Scalar> {
        let mut w = self.weights.clone();
        w.sort();
        w
    }
}

impl fmt::Display for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.weights.iter().join(","))
    }
}

/// Every {0,1} edge vector on `n` vertices, in lexicographic order.
pub fn simple_graphs(n: usize) -> Result<impl Iterator<Item = EdgeVector>> {
    if n < 3 {
        return Err(Error::DegenerateSize { n });
    }
    let m = edge_count(n);
    if m >= usize::BITS as usize {
        return Err(Error::SizeLimit { n, max: 11 });
    }
    Ok((0usize..1 << m).map(move |mask| EdgeVector {
        n,
        weights: (0..m).map(|s| crate::scalar::from_i64(((mask >> (m - 1 - s)) & 1) as i64)).collect(),
    }))
}

/// `(τ·x)_s = x_{τ⁻¹(s)}`: the weight on slot `s` moves to slot `τ(s)`.
pub fn act(tau: &PairAction, x: &EdgeVector) -> Result<EdgeVector> {
    if tau.n != x.n {
        return Err(Error::DimensionMismatch { expected: tau.n, found: x.n });
    }
    Ok(act_unchecked(&tau.index_map, x))
}

pub(crate) fn act_unchecked(index_map: &[usize], x: &EdgeVector) -> EdgeVector {
    let mut out = vec![Scalar::zero(); x.weights.len()];
    for (s, w) in x.weights.iter().enumerate() {
        out[index_map[s]] = w.clone();
    }
    EdgeVector { n: x.n, weights: out }
}

/// Relabels the vertices of `x` by `σ`; shorthand for `act(induced(σ), x)`.
pub fn relabel(sigma: &VertexPermutation, x: &EdgeVector) -> Result<EdgeVector> {
    if sigma.degree() != x.n {
        return Err(Error::DimensionMismatch { expected: x.n, found: sigma.degree() });
    }
    let n = x.n;
    let mut out = vec![Scalar::zero(); x.weights.len()];
    let mut s = 0;
    for a in 0..n {
        for b in a + 1..n {
            out[unordered_slot(sigma.images[a], sigma.images[b], n)] = x.weights[s].clone();
            s += 1;
        }
    }
    Ok(EdgeVector { n, weights: out })
}
