//! Lexicographic orbit canonization under the pair group.
//!
//! The canonical form of `x` is the lex-smallest vector in its orbit. The
//! frame is the vertex permutation taking `x` there; when several do, the one
//! smallest in one-line notation is chosen. The stabilizer is reported in
//! full, sorted in the same order.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::pairgroup::{
    induced_pair_action, relabel, unordered_slot, EdgeVector, Limits, PairAction, VertexPermutation,
};
use crate::scalar::Scalar;

/// Which canonizer to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Exhaustive minimum over all `n!` relabelings. Bounded by [`Limits::max_n`].
    Brute,
    /// Prefix-pruned backtracking; no `n!` materialization.
    #[default]
    Pruned,
}

/// Result of canonizing one edge vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonResult {
    pub canonical: EdgeVector,
    pub frame: VertexPermutation,
    /// The stabilizer of the input, sorted lexicographically.
    pub automorphisms: Vec<VertexPermutation>,
}

impl CanonResult {
    pub fn aut_order(&self) -> usize {
        self.automorphisms.len()
    }

    /// `n! / |Aut|`.
    pub fn orbit_size(&self) -> BigUint {
        let n = self.frame.degree();
        let fact = (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
        fact / BigUint::from(self.automorphisms.len())
    }

    /// A small generating set for the automorphism group, chosen greedily in
    /// lexicographic order. Empty for the trivial group.
    pub fn generators(&self) -> Vec<VertexPermutation> {
        let n = self.frame.degree();
        let mut gens: Vec<VertexPermutation> = Vec::new();
        let mut generated: HashSet<VertexPermutation> = HashSet::from([VertexPermutation::identity(n)]);
        for a in &self.automorphisms {
            if generated.contains(a) {
                continue;
            }
            gens.push(a.clone());
            generated = closure(&gens, n);
            if generated.len() == self.automorphisms.len() {
                break;
            }
        }
        gens
    }

    /// The invariantized coordinates of the input.
    pub fn invariants(&self) -> InvariantVector {
        InvariantVector { values: self.canonical.weights().to_vec() }
    }
}

fn closure(gens: &[VertexPermutation], n: usize) -> HashSet<VertexPermutation> {
    let id = VertexPermutation::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for h in gens {
            let p = h.compose(&g);
            if seen.insert(p.clone()) {
                frontier.push(p);
            }
        }
    }
    seen
}

/// The coordinates `I_1(x), ..., I_m(x)` of the canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantVector {
    pub values: Vec<Scalar>,
}

pub fn canonical_form(x: &EdgeVector, engine: Engine, limits: Limits) -> Result<CanonResult> {
    match engine {
        Engine::Brute => canonical_form_bruteforce(x, limits),
        Engine::Pruned => Ok(canonical_form_pruned(x)),
    }
}

/// Exhaustive canonization over every element of the group.
pub fn canonical_form_bruteforce(x: &EdgeVector, limits: Limits) -> Result<CanonResult> {
    let n = x.n();
    limits.check(n)?;
    let w = x.weights();
    let m = w.len();

    let mut best: Option<(Vec<usize>, VertexPermutation)> = None;
    let mut automorphisms = Vec::new();
    let mut inverse = vec![0usize; m];
    // Permutations arrive in lex order, so the first minimizer seen for the
    // final minimum is the tie-break winner.
    for sigma in VertexPermutation::all(n) {
        let tau = induced_pair_action(&sigma);
        for (s, &t) in tau.index_map0().iter().enumerate() {
            inverse[t] = s;
        }
        if (0..m).all(|t| w[inverse[t]] == w[t]) {
            automorphisms.push(sigma.clone());
        }
        let better = match &best {
            None => true,
            Some((best_inv, _)) => {
                let image = inverse.iter().map(|&s| &w[s]);
                let incumbent = best_inv.iter().map(|&s| &w[s]);
                image.lt(incumbent)
            }
        };
        if better {
            best = Some((inverse.clone(), sigma));
        }
    }
    let (best_inv, frame) = best.expect("group is nonempty");
    let canonical = EdgeVector::new(n, best_inv.iter().map(|&s| w[s].clone()).collect())?;
    Ok(CanonResult { canonical, frame, automorphisms })
}

/// Backtracking canonization.
///
/// Canonical labels are handed out in order `0..n`. A vertex may receive the
/// next label only if its vector of weights to the already-labelled vertices
/// is lex-minimal among the unlabelled ones: any other choice yields a leaf
/// that a swap of two vertices strictly improves, so it can neither be the
/// minimum nor tie with it. Under that rule the whole first row of the
/// canonical vector is fixed once label 0 is placed, and the next row fills
/// in one entry per level; that determined prefix is compared against the
/// incumbent and branches that are already greater are cut. Branches that tie
/// are kept so every minimizing leaf is seen, which yields both the tie-break
/// frame and the full stabilizer.
pub fn canonical_form_pruned(x: &EdgeVector) -> CanonResult {
    let n = x.n();
    let ranks = rank_weights(x.weights());
    let mut search = PrunedSearch {
        n,
        ranks: &ranks,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        first_row: Vec::with_capacity(n),
        incumbent: None,
        minimizers: Vec::new(),
    };
    search.descend();

    let frames: BTreeSet<VertexPermutation> = search
        .minimizers
        .iter()
        .map(|order| {
            let mut images = vec![0; n];
            for (label, &v) in order.iter().enumerate() {
                images[v] = label;
            }
            VertexPermutation::from_zero_based(images)
        })
        .collect();
    let frame = frames.iter().next().expect("search reaches at least one leaf").clone();
    let frame_inv = frame.inverse();
    let mut automorphisms: Vec<VertexPermutation> = frames.iter().map(|rho| frame_inv.compose(rho)).collect();
    automorphisms.sort();
    let canonical = relabel(&frame, x).expect("frame has degree n");
    CanonResult { canonical, frame, automorphisms }
}

/// Replaces each weight by its rank among the distinct weights. Lex order on
/// rank vectors agrees with lex order on the weights.
fn rank_weights(weights: &[Scalar]) -> Vec<u32> {
    let mut distinct: Vec<&Scalar> = weights.iter().collect();
    distinct.sort();
    distinct.dedup();
    weights.iter().map(|w| distinct.binary_search(&w).expect("weight present") as u32).collect()
}

struct PrunedSearch<'a> {
    n: usize,
    ranks: &'a [u32],
    /// `order[label]` is the vertex carrying that canonical label.
    order: Vec<usize>,
    used: Vec<bool>,
    /// Sorted weights from `order[0]` to every other vertex.
    first_row: Vec<u32>,
    incumbent: Option<Vec<u32>>,
    minimizers: Vec<Vec<usize>>,
}

impl PrunedSearch<'_> {
    #[inline]
    fn w(&self, a: usize, b: usize) -> u32 {
        self.ranks[unordered_slot(a, b, self.n)]
    }

    fn descend(&mut self) {
        let depth = self.order.len();
        if depth == self.n {
            self.leaf();
            return;
        }
        for v in self.candidates() {
            self.order.push(v);
            self.used[v] = true;
            if depth == 0 {
                let mut row: Vec<u32> = (0..self.n).filter(|&u| u != v).map(|u| self.w(v, u)).collect();
                row.sort_unstable();
                self.first_row = row;
            }
            if !self.prefix_exceeds_incumbent() {
                self.descend();
            }
            self.used[v] = false;
            self.order.pop();
        }
    }

    /// Unlabelled vertices whose weight profile against the labelled ones is
    /// lex-minimal, in ascending vertex order.
    fn candidates(&self) -> Vec<usize> {
        let mut best: Vec<usize> = Vec::new();
        let mut best_profile: Vec<u32> = Vec::new();
        let mut profile = Vec::with_capacity(self.order.len());
        for u in (0..self.n).filter(|&u| !self.used[u]) {
            profile.clear();
            profile.extend(self.order.iter().map(|&a| self.w(a, u)));
            if best.is_empty() {
                best.push(u);
                best_profile.clone_from(&profile);
                continue;
            }
            match profile.cmp(&best_profile) {
                std::cmp::Ordering::Less => {
                    best.clear();
                    best.push(u);
                    best_profile.clone_from(&profile);
                }
                std::cmp::Ordering::Equal => best.push(u),
                std::cmp::Ordering::Greater => {}
            }
        }
        best
    }

    fn prefix_exceeds_incumbent(&self) -> bool {
        let Some(incumbent) = &self.incumbent else {
            return false;
        };
        let depth = self.order.len();
        let first = &incumbent[..self.first_row.len()];
        match self.first_row.as_slice().cmp(first) {
            std::cmp::Ordering::Greater => return true,
            std::cmp::Ordering::Less => return false,
            std::cmp::Ordering::Equal => {}
        }
        // Second row: labels (1, b) for 2 <= b < depth.
        if depth < 3 {
            return false;
        }
        let offset = self.n - 1;
        let a = self.order[1];
        for b in 2..depth {
            let ours = self.w(a, self.order[b]);
            let theirs = incumbent[offset + b - 2];
            if ours != theirs {
                return ours > theirs;
            }
        }
        false
    }

    fn leaf(&mut self) {
        let n = self.n;
        let mut vector = Vec::with_capacity(self.ranks.len());
        for a in 0..n {
            for b in a + 1..n {
                vector.push(self.w(self.order[a], self.order[b]));
            }
        }
        match &self.incumbent {
            Some(inc) if vector > *inc => {}
            Some(inc) if vector == *inc => self.minimizers.push(self.order.clone()),
            _ => {
                self.incumbent = Some(vector);
                self.minimizers.clear();
                self.minimizers.push(self.order.clone());
            }
        }
    }
}

/// Invariantized coordinates: the canonical representative of `x`.
pub fn invariantize(x: &EdgeVector) -> InvariantVector {
    canonical_form_pruned(x).invariants()
}

/// Decides whether `x` and `y` lie in one orbit. When they do, returns a
/// witness `σ` with `relabel(σ, x) = y`, namely `frame(y)⁻¹ ∘ frame(x)`.
pub fn is_isomorphic(x: &EdgeVector, y: &EdgeVector) -> Result<Option<VertexPermutation>> {
    is_isomorphic_with(x, y, Engine::Pruned, Limits::default())
}

pub fn is_isomorphic_with(
    x: &EdgeVector,
    y: &EdgeVector,
    engine: Engine,
    limits: Limits,
) -> Result<Option<VertexPermutation>> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch { expected: x.n(), found: y.n() });
    }
    let cx = canonical_form(x, engine, limits)?;
    let cy = canonical_form(y, engine, limits)?;
    if cx.canonical != cy.canonical {
        return Ok(None);
    }
    Ok(Some(cy.frame.inverse().compose(&cx.frame)))
}

/// Checks that `ρ(τ·x) ∘ τ ∘ ρ(x)⁻¹` fixes `can(x)`: the frame is equivariant
/// up to the stabilizer of the canonical form.
pub fn frame_coset_check(x: &EdgeVector, tau: &PairAction) -> Result<bool> {
    if tau.n() != x.n() {
        return Err(Error::DimensionMismatch { expected: x.n(), found: tau.n() });
    }
    let cx = canonical_form_pruned(x);
    let moved = crate::pairgroup::act(tau, x)?;
    let cm = canonical_form_pruned(&moved);
    let g = cm.frame.compose(tau.source()).compose(&cx.frame.inverse());
    Ok(relabel(&g, &cx.canonical)? == cx.canonical)
}
