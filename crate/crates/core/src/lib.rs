//! Canonization of edge-weighted graphs under the pair group `S_n^(2)`.
//!
//! A graph on `n` vertices is an [`EdgeVector`]: its `C(n,2)` weights in
//! lexicographic pair order. Relabelling vertices permutes those weights;
//! the canonical form is the lex-smallest relabelling, and its coordinates
//! form a complete isomorphism invariant. The [`polyinv`] module provides the
//! classical polynomial invariants for cross-checking on small graphs, and
//! [`sortframe`] the same construction for `S_n` permuting a point in `Q^n`.

pub mod cli;
pub mod error;
pub mod frame;
pub mod graphio;
pub mod pairgroup;
pub mod polyinv;
pub mod scalar;
pub mod sortframe;

pub use error::{Error, Result};
pub use frame::{
    canonical_form, canonical_form_bruteforce, canonical_form_pruned, frame_coset_check, invariantize, is_isomorphic,
    is_isomorphic_with, CanonResult, Engine, InvariantVector,
};
pub use pairgroup::{
    act, edge_count, enumerate_group, induced_pair_action, pair_at, pair_index, relabel, simple_graphs, EdgeVector,
    Limits, PairAction, VertexPermutation, DEFAULT_MAX_N,
};
pub use scalar::Scalar;
