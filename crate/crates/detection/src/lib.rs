//! Exact decision procedures for the forbidden-structure predicates the
//! extremal suites quantify over: matchings, complete subgraphs, subgraph
//! embedding, weak-extension membership, vertex covers, and density.
//!
//! Everything here is a pure function over immutable graphs; independent
//! searches can run concurrently.

mod clique;
mod density;
mod embed;
mod matching;
mod weak_ext;

use hypergraph_core::Hypergraph;
use thiserror::Error;

pub use clique::{clique_number, has_clique};
pub use density::{density_report, is_dense, Density, DensityReport, LagrangianEval, DENSITY_TOL};
pub use embed::{find_embedding, for_each_embedding_in, has_subgraph, Embedding};
pub use matching::{has_matching, matching_number};
pub use weak_ext::contains_weak_extension;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectionError {
    #[error("uniformity mismatch: pattern is {pattern}-uniform, host is {host}-uniform")]
    UniformityMismatch { pattern: usize, host: usize },

    #[error("core size {p} is smaller than the pattern's vertex count {base}")]
    CoreTooSmall { p: usize, base: usize },
}

/// True iff every edge of G meets S.
pub fn is_vertex_cover(g: &Hypergraph, s: &[usize]) -> bool {
    let mask: u128 = s
        .iter()
        .filter(|&&v| v >= 1 && v <= g.n())
        .fold(0, |acc, &v| acc | (1u128 << (v - 1)));
    g.edge_masks().iter().all(|&e| e & mask != 0)
}
