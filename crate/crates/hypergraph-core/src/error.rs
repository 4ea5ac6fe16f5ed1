use thiserror::Error;

/// Errors produced when constructing or transforming hypergraphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("uniformity must be at least 2, got {0}")]
    UniformityTooSmall(usize),

    #[error("vertex count {0} exceeds the supported maximum of {max}", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("edge {edge:?} has {got} distinct vertices, expected {expected}")]
    WrongArity {
        edge: Vec<usize>,
        got: usize,
        expected: usize,
    },

    #[error("vertex out of range: edge {edge:?} contains {vertex}, but vertices are 1..={n}")]
    VertexOutOfRange {
        edge: Vec<usize>,
        vertex: usize,
        n: usize,
    },

    #[error("vertex {0} is not in 1..={1}")]
    BadVertex(usize, usize),

    #[error("vertices {0} and {1} must be distinct")]
    SamePair(usize, usize),

    #[error("set of size {0} is not smaller than the uniformity {1}")]
    LinkSetTooLarge(usize, usize),

    #[error("expected a permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("part sizes list has length {got}, expected one entry per vertex ({expected})")]
    BadPartition { got: usize, expected: usize },

    #[error("extension order {p} is smaller than the base vertex count {base}")]
    ExtensionTooSmall { p: usize, base: usize },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("parse error: {0}")]
    Parse(String),
}
