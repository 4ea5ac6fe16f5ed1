//! Immutable r-uniform hypergraph values with set-system operators
//! (links, compressions, induced subgraphs, blowups), named extremal
//! constructions, exact canonical labeling, and the `.hg` text format.
//!
//! Vertices are 1-based: a graph on n vertices lives on `[n] = {1, ..., n}`.
//! All values are immutable after construction and every operation is a pure
//! function, so graphs can be shared freely across threads.

mod canonical;
mod error;
mod family;
mod hypergraph;
mod io;

/// Hard cap on vertex counts; edges are stored as 128-bit vertex masks.
pub const MAX_VERTICES: usize = 128;

pub use canonical::{canonical_form, canonicalize, is_isomorphic};
pub use error::GraphError;
pub use family::{
    balanced_parts, complete, family_f, family_g, linear_star, matching, turan_blowup,
    turan_count, FamilySpec,
};
pub use hypergraph::{lex_cmp, mask_of, mask_vertices, EdgeMask, Hypergraph};
pub use io::{parse_hg, write_hg};
