//! Dense and compressed subgraph extraction: alternate optimum-support
//! restriction (until the graph is dense within tolerance) with one weight-
//! guided compression step, until the optimum weights admit no compression.

use crate::compress_run::{CompressionStep, CompressionTrace};
use crate::ExtremalError;
use detection::{density_report, Density};
use hypergraph_core::Hypergraph;
use lagrangian_engine::{maximize, Maximizer, OptimizerConfig};

/// Coordinates below this are treated as outside the optimum support.
const SUPPORT_EPS: f64 = 1e-9;
/// A vertex whose deletion costs at most this much value is removed when the
/// graph is not yet dense; the total value drift stays below n·DELETE_TOL.
const DELETE_TOL: f64 = 1e-9;

pub struct DenseCompressed {
    pub graph: Hypergraph,
    pub witness: Vec<f64>,
    pub value: f64,
    pub trace: CompressionTrace,
    pub density: Density,
}

/// Runs the extraction. The output graph G' satisfies λ(G') ≥ λ(G) - 1e-7
/// (numerically), is dense or at worst numerically inconclusive, and has an
/// optimum witness under which no strict-weight pair admits a compression.
pub fn dense_compressed_subgraph(
    g: &Hypergraph,
    cfg: &OptimizerConfig,
) -> Result<DenseCompressed, ExtremalError> {
    let engine = Maximizer::new(cfg.clone());
    let mut current = g.clone();
    let mut trace = CompressionTrace::default();

    let mut guard = 0usize;
    let max_steps = 200 + 20 * g.n() * (g.edge_count() + 1);

    loop {
        guard += 1;
        if guard > max_steps {
            return Err(ExtremalError::DidNotConverge(
                "dense/compressed alternation exceeded its step budget".into(),
            ));
        }

        // Step 1: shrink to a dense subgraph with (numerically) the same value
        let density = loop {
            if current.n() == 0 {
                break Density::Dense;
            }
            let res = maximize(&current, cfg);
            let support: Vec<usize> = (1..=current.n())
                .filter(|&v| res.witness.as_slice()[v - 1] > SUPPORT_EPS)
                .collect();
            if support.len() < current.n() {
                let n_before = current.n();
                let (sub, _) = current.induced(&support)?;
                let shrunk = maximize(&sub, cfg);
                if shrunk.value < res.value - 1e-7 {
                    return Err(ExtremalError::DidNotConverge(format!(
                        "support restriction lost value: {} -> {}",
                        res.value, shrunk.value
                    )));
                }
                trace.steps.push(CompressionStep::TakeDenseSubgraph {
                    vertices: support,
                    n_before,
                    n_after: sub.n(),
                });
                current = sub;
                continue;
            }
            let report = density_report(&current, &engine, detection::DENSITY_TOL);
            match report.status {
                Density::Dense => break Density::Dense,
                _ => {
                    // delete the cheapest vertex if that is value-safe
                    let victim = (1..=current.n())
                        .filter(|&v| report.gaps[v - 1] <= DELETE_TOL)
                        .min_by(|&a, &b| {
                            report.gaps[a - 1]
                                .partial_cmp(&report.gaps[b - 1])
                                .unwrap()
                                .then(a.cmp(&b))
                        });
                    match victim {
                        Some(v) => {
                            let keep: Vec<usize> =
                                (1..=current.n()).filter(|&u| u != v).collect();
                            let n_before = current.n();
                            let (sub, _) = current.induced(&keep)?;
                            trace.steps.push(CompressionStep::TakeDenseSubgraph {
                                vertices: keep,
                                n_before,
                                n_after: sub.n(),
                            });
                            current = sub;
                        }
                        // every gap is positive but some sit inside the
                        // tolerance band: accept as inconclusive
                        None => break report.status,
                    }
                }
            }
        };

        if current.n() == 0 {
            return Ok(DenseCompressed {
                graph: current,
                witness: Vec::new(),
                value: 0.0,
                trace,
                density,
            });
        }

        // Step 2: fresh optimum; compress once if the weights allow it
        let res = maximize(&current, cfg);
        trace
            .steps
            .push(CompressionStep::RecomputeOptimum { value: res.value });
        let x = res.witness.as_slice().to_vec();
        let mut order: Vec<usize> = (1..=current.n()).collect();
        order.sort_by(|&a, &b| {
            x[b - 1]
                .partial_cmp(&x[a - 1])
                .unwrap()
                .then_with(|| a.cmp(&b))
        });
        let mut compressed = None;
        'find: for a in 0..order.len() {
            for b in (a + 1)..order.len() {
                let (i, j) = (order[a], order[b]);
                if x[i - 1] > x[j - 1] + SUPPORT_EPS && !current.link_diff(j, i)?.is_empty() {
                    compressed = Some((i, j));
                    break 'find;
                }
            }
        }
        match compressed {
            Some((i, j)) => {
                let s_before = current.s_value();
                current = current.compress(i, j)?;
                trace.steps.push(CompressionStep::Compress {
                    i,
                    j,
                    s_before,
                    s_after: current.s_value(),
                });
            }
            None => {
                return Ok(DenseCompressed {
                    graph: current,
                    value: res.value,
                    witness: x,
                    trace,
                    density,
                });
            }
        }
    }
}
