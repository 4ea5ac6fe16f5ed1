//! The extremal toolkit: weight-guided compression runs, dense compressed
//! subgraph extraction, symmetrization with cleaning, isomorphism-free
//! enumeration under hereditary predicates, and tiny exact Turán numbers.

mod compress_run;
mod dense_sub;
mod enumerate;
mod symmetrize;
mod turan;

use thiserror::Error;

pub use compress_run::{left_compress_to_fixpoint, CompressionStep, CompressionTrace};
pub use dense_sub::{dense_compressed_subgraph, DenseCompressed};
pub use enumerate::{
    cell_limit, enumerate_free, enumerate_left_compressed, EnumerateOptions, Predicate,
    ENUMERATE_CELL_LIMIT,
};
pub use symmetrize::{
    replay_symmetrization, symmetrize_and_clean, SymStep, SymmetrizationTrace, SymmetrizeOutcome,
};
pub use turan::{max_lagrangian_over_free, turan_bruteforce, TURAN_CELL_LIMIT};

#[derive(Debug, Error)]
pub enum ExtremalError {
    #[error("scale guard: {cells} candidate edges exceed the limit {limit} (set LAGRANGIA_MAX_CELLS or force to override)")]
    ScaleGuard { cells: usize, limit: usize },

    #[error("weight vector has length {got}, expected {expected}")]
    WeightLength { got: usize, expected: usize },

    #[error("threshold alpha must lie in (0, 1], got {0}")]
    BadAlpha(f64),

    #[error("{0}")]
    DidNotConverge(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Graph(#[from] hypergraph_core::GraphError),

    #[error(transparent)]
    Detection(#[from] detection::DetectionError),
}
