//! Weight-guided left compression run to a fixpoint, with a replayable trace.

use crate::ExtremalError;
use hypergraph_core::{mask_vertices, Hypergraph};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum CompressionStep {
    /// One application of `π_ij`; s-values are taken in the weight order.
    Compress {
        i: usize,
        j: usize,
        s_before: u64,
        s_after: u64,
    },
    /// Restriction to an induced subgraph (dense-subgraph phases only).
    TakeDenseSubgraph {
        vertices: Vec<usize>,
        n_before: usize,
        n_after: usize,
    },
    /// A fresh optimum was computed (dense-subgraph phases only).
    RecomputeOptimum { value: f64 },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CompressionTrace {
    pub steps: Vec<CompressionStep>,
}

impl CompressionTrace {
    /// Reapplies the recorded operations to `input`; the output must equal the
    /// graph the trace was recorded from.
    pub fn replay(&self, input: &Hypergraph) -> Result<Hypergraph, ExtremalError> {
        let mut g = input.clone();
        for step in &self.steps {
            match step {
                CompressionStep::Compress { i, j, .. } => {
                    g = g.compress(*i, *j)?;
                }
                CompressionStep::TakeDenseSubgraph { vertices, .. } => {
                    let (sub, _) = g.induced(vertices)?;
                    g = sub;
                }
                CompressionStep::RecomputeOptimum { .. } => {}
            }
        }
        Ok(g)
    }
}

/// Positions of the vertices in the weight order (descending weight, ties by
/// ascending label): `pos[v-1]` is the 1-based rank of vertex v.
fn weight_positions(x: &[f64]) -> Vec<usize> {
    let n = x.len();
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by(|&a, &b| {
        x[b - 1]
            .partial_cmp(&x[a - 1])
            .expect("weights are finite")
            .then_with(|| a.cmp(&b))
    });
    let mut pos = vec![0usize; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v - 1] = k + 1;
    }
    pos
}

/// `Σ_e Σ_{v∈e} pos(v)`: strictly decreases with every compression that moves
/// weight toward earlier positions, so the run terminates.
fn s_in_order(g: &Hypergraph, pos: &[usize]) -> u64 {
    g.edge_masks()
        .iter()
        .map(|&e| {
            mask_vertices(e)
                .iter()
                .map(|&v| pos[v - 1] as u64)
                .sum::<u64>()
        })
        .sum()
}

/// Repeatedly applies `π_ij` for the first (in the weight order) pair with
/// `x_i > x_j` strictly and a nonempty exclusive link, until no such pair
/// remains. The output H satisfies λ(H, x) ≥ λ(G, x) and carries the same
/// edge count; if G avoided a matching `M_t^r`, so does H.
pub fn left_compress_to_fixpoint(
    g: &Hypergraph,
    x: &[f64],
) -> Result<(Hypergraph, CompressionTrace), ExtremalError> {
    if x.len() != g.n() {
        return Err(ExtremalError::WeightLength {
            got: x.len(),
            expected: g.n(),
        });
    }
    let pos = weight_positions(x);
    let mut order: Vec<usize> = (1..=g.n()).collect();
    order.sort_by_key(|&v| pos[v - 1]);

    let mut current = g.clone();
    let mut trace = CompressionTrace::default();
    'outer: loop {
        for a in 0..order.len() {
            for b in (a + 1)..order.len() {
                let (i, j) = (order[a], order[b]);
                if x[i - 1] > x[j - 1] && !current.link_diff(j, i)?.is_empty() {
                    let s_before = s_in_order(&current, &pos);
                    current = current.compress(i, j)?;
                    let s_after = s_in_order(&current, &pos);
                    debug_assert!(s_after < s_before);
                    trace.steps.push(CompressionStep::Compress {
                        i,
                        j,
                        s_before,
                        s_after,
                    });
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok((current, trace))
}
