//! Multi-start projected gradient ascent for the Lagrangian over the simplex
//! and the box-capped simplex, with KKT residual certificates.
//!
//! The reported value is a certified lower bound on λ(G): it is always the
//! exact polynomial value of the returned feasible witness. Global optimality
//! is not proved (except for 2-graphs, where the Motzkin-Straus closed form
//! is available as an oracle); the KKT residual quantifies stationarity.

use crate::eval::{evaluate_unchecked, gradient_unchecked};
use crate::project::{project_simplex, project_simplex_box};
use crate::symmetry::symmetrize_uncovered;
use crate::{EngineError, WeightVector};
use hypergraph_core::{mask_vertices, Hypergraph};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct OptimizerConfig {
    /// number of seeded random starts, on top of the uniform start and one
    /// start per edge support
    pub restarts: usize,
    pub max_iterations: usize,
    /// per-iteration improvement below which convergence is tested
    pub step_tolerance: f64,
    /// stationarity residual required to declare convergence
    pub kkt_tolerance: f64,
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            restarts: 50,
            max_iterations: 10_000,
            step_tolerance: 1e-14,
            kkt_tolerance: 1e-10,
            seed: 0,
        }
    }
}

impl OptimizerConfig {
    pub fn with_seed(seed: u64) -> Self {
        OptimizerConfig {
            seed,
            ..Default::default()
        }
    }

    /// Trimmed-down configuration for sweeps over many small graphs.
    pub fn fast(seed: u64) -> Self {
        OptimizerConfig {
            restarts: 12,
            max_iterations: 4_000,
            seed,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LagrangianResult {
    pub value: f64,
    pub witness: WeightVector,
    pub kkt_residual: f64,
    pub restarts: usize,
    pub bounded_by: Option<f64>,
    pub seed: u64,
    pub infeasible: bool,
}

fn project(v: &[f64], bound: Option<f64>) -> Vec<f64> {
    match bound {
        None => project_simplex(v),
        Some(b) => project_simplex_box(v, b).expect("feasibility was checked upfront"),
    }
}

/// Projected gradient ascent with Armijo backtracking from a single start.
fn ascend(g: &Hypergraph, start: &[f64], bound: Option<f64>, cfg: &OptimizerConfig) -> Vec<f64> {
    let mut x = project(start, bound);
    let mut f = evaluate_unchecked(g, &x);
    let mut step = 1.0f64;
    let mut stalls = 0usize;
    for _ in 0..cfg.max_iterations {
        let grad = gradient_unchecked(g, &x);
        let mut t = (step * 2.0).min(1e6);
        let mut accepted: Option<(Vec<f64>, f64, f64)> = None;
        for _ in 0..60 {
            let trial: Vec<f64> = x.iter().zip(&grad).map(|(xi, gi)| xi + t * gi).collect();
            let y = project(&trial, bound);
            let fy = evaluate_unchecked(g, &y);
            let dot: f64 = grad.iter().zip(y.iter().zip(&x)).map(|(gi, (yi, xi))| gi * (yi - xi)).sum();
            if fy >= f + 1e-4 * dot {
                accepted = Some((y, fy, t));
                break;
            }
            t *= 0.5;
        }
        let Some((y, fy, t)) = accepted else { break };
        let improvement = fy - f;
        x = y;
        f = fy;
        step = t;
        if improvement < cfg.step_tolerance {
            if kkt_impl(g, &x, bound) < cfg.kkt_tolerance {
                break;
            }
            stalls += 1;
            if stalls > 100 {
                break;
            }
        } else {
            stalls = 0;
        }
    }
    x
}

fn lex_smaller(a: &[f64], b: &[f64]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x < y {
            return true;
        }
        if x > y {
            return false;
        }
    }
    false
}

/// The deterministic start list: uniform, one start per edge support, then
/// `restarts` seeded Dirichlet-like draws (alternately spiky).
fn start_list(g: &Hypergraph, cfg: &OptimizerConfig) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut starts = Vec::with_capacity(1 + g.edge_count() + cfg.restarts);
    starts.push(vec![1.0 / n as f64; n]);
    for &e in g.edge_masks() {
        let mut x = vec![0.0; n];
        for v in mask_vertices(e) {
            x[v - 1] = 1.0 / g.r() as f64;
        }
        starts.push(x);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for k in 0..cfg.restarts {
        let mut x: Vec<f64> = (0..n)
            .map(|_| {
                let u: f64 = rng.gen::<f64>();
                let e = -(1.0 - u).ln();
                if k % 2 == 1 {
                    e * e
                } else {
                    e
                }
            })
            .collect();
        let sum: f64 = x.iter().sum();
        if sum > 0.0 {
            for v in &mut x {
                *v /= sum;
            }
        }
        starts.push(x);
    }
    starts
}

fn maximize_impl(
    g: &Hypergraph,
    bound: Option<f64>,
    cfg: &OptimizerConfig,
) -> LagrangianResult {
    let n = g.n();
    if let Some(b) = bound {
        if (n as f64) * b < 1.0 - 1e-12 {
            return LagrangianResult {
                value: 0.0,
                witness: WeightVector::empty(),
                kkt_residual: 0.0,
                restarts: cfg.restarts,
                bounded_by: bound,
                seed: cfg.seed,
                infeasible: true,
            };
        }
    }
    if n == 0 {
        return LagrangianResult {
            value: 0.0,
            witness: WeightVector::empty(),
            kkt_residual: 0.0,
            restarts: cfg.restarts,
            bounded_by: bound,
            seed: cfg.seed,
            infeasible: false,
        };
    }
    let polish_cfg = OptimizerConfig {
        max_iterations: cfg.max_iterations.min(2_000),
        ..cfg.clone()
    };
    let mut best: Option<(f64, Vec<f64>)> = None;
    for start in start_list(g, cfg) {
        let x = ascend(g, &start, bound, cfg);
        // averaging across symmetric pairs never lowers the value and keeps
        // the cap; a short re-ascent settles the polished point
        let polished = symmetrize_uncovered(g, &x);
        let x2 = ascend(g, &polished, bound, &polish_cfg);
        for cand in [x, x2] {
            let v = evaluate_unchecked(g, &cand);
            let better = match &best {
                None => true,
                Some((bv, bw)) => v > *bv || (v == *bv && lex_smaller(&cand, bw)),
            };
            if better {
                best = Some((v, cand));
            }
        }
    }
    let (value, witness) = best.expect("at least the uniform start ran");
    let kkt_residual = kkt_impl(g, &witness, bound);
    LagrangianResult {
        value,
        witness: WeightVector::from_raw(witness),
        kkt_residual,
        restarts: cfg.restarts,
        bounded_by: bound,
        seed: cfg.seed,
        infeasible: false,
    }
}

/// `λ(G)` by multi-start projected gradient over the simplex.
pub fn maximize(g: &Hypergraph, cfg: &OptimizerConfig) -> LagrangianResult {
    maximize_impl(g, None, cfg)
}

/// `λ_b(G)` over the b-capped simplex. When no b-bounded feasible vector
/// exists (n·b < 1) the result is value 0 with the infeasible flag set.
pub fn maximize_bounded(
    g: &Hypergraph,
    b: f64,
    cfg: &OptimizerConfig,
) -> Result<LagrangianResult, EngineError> {
    if !(b > 0.0) || b > 1.0 {
        return Err(EngineError::BadBound { b });
    }
    Ok(maximize_impl(g, Some(b), cfg))
}

const SUPPORT_EPS: f64 = 1e-9;

fn kkt_impl(g: &Hypergraph, x: &[f64], bound: Option<f64>) -> f64 {
    if x.is_empty() {
        return 0.0;
    }
    let lam = evaluate_unchecked(g, x);
    let grad = gradient_unchecked(g, x);
    let at_cap = |xi: f64| bound.map_or(false, |b| xi >= b - SUPPORT_EPS);
    let interior = |xi: f64| xi > SUPPORT_EPS && !at_cap(xi);
    // the multiplier of the simplex constraint: r·λ when no cap is active (the
    // Euler identity), otherwise the weighted mean of the interior gradient
    let nu = if !x.iter().any(|&xi| at_cap(xi)) {
        g.r() as f64 * lam
    } else {
        let (mut wsum, mut wdot) = (0.0, 0.0);
        for (xi, gi) in x.iter().zip(&grad) {
            if interior(*xi) {
                wsum += xi;
                wdot += xi * gi;
            }
        }
        if wsum > 0.0 {
            wdot / wsum
        } else {
            x.iter()
                .zip(&grad)
                .filter(|(xi, _)| at_cap(**xi))
                .map(|(_, gi)| *gi)
                .fold(f64::INFINITY, f64::min)
        }
    };
    let mut resid = 0.0f64;
    for (xi, gi) in x.iter().zip(&grad) {
        let v = if interior(*xi) {
            (gi - nu).abs()
        } else if at_cap(*xi) {
            (nu - gi).max(0.0)
        } else {
            (gi - nu).max(0.0)
        };
        resid = resid.max(v);
    }
    resid
}

/// Stationarity residual on the simplex: on the support, |∂_i λ - rλ|; off
/// the support, the positive part of ∂_i λ - rλ.
pub fn kkt_residual(g: &Hypergraph, x: &[f64]) -> Result<f64, EngineError> {
    if x.len() != g.n() {
        return Err(EngineError::LengthMismatch {
            got: x.len(),
            expected: g.n(),
        });
    }
    Ok(kkt_impl(g, x, None))
}

/// Bounded-mode residual: coordinates at the cap are exempt from the gradient
/// equality and checked with the reversed inequality instead; the reference
/// multiplier is the weighted interior gradient, which reduces to r·λ when no
/// cap is active.
pub fn kkt_residual_bounded(g: &Hypergraph, x: &[f64], b: f64) -> Result<f64, EngineError> {
    if x.len() != g.n() {
        return Err(EngineError::LengthMismatch {
            got: x.len(),
            expected: g.n(),
        });
    }
    if !(b > 0.0) || b > 1.0 {
        return Err(EngineError::BadBound { b });
    }
    Ok(kkt_impl(g, x, Some(b)))
}

/// Adapter so the detection crate's density check can drive this optimizer.
#[derive(Debug, Clone, Default)]
pub struct Maximizer {
    pub config: OptimizerConfig,
}

impl Maximizer {
    pub fn new(config: OptimizerConfig) -> Self {
        Maximizer { config }
    }
}

impl detection::LagrangianEval for Maximizer {
    fn lagrangian(&self, g: &Hypergraph) -> f64 {
        maximize(g, &self.config).value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypergraph_core::{complete, linear_star, Hypergraph};

    fn binom(n: usize, k: usize) -> usize {
        let mut acc = 1usize;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn complete_graph_values() {
        let cfg = OptimizerConfig::fast(0);
        for (r, m) in [(2, 4), (3, 5), (3, 6), (4, 6)] {
            let k = complete(r, m).unwrap();
            let res = maximize(&k, &cfg);
            let expect = binom(m, r) as f64 / (m as f64).powi(r as i32);
            assert!(
                (res.value - expect).abs() < 1e-9,
                "K_{m}^{r}: got {}, want {expect}",
                res.value
            );
            assert!(res.kkt_residual < 1e-8);
            for w in res.witness.as_slice() {
                assert!((w - 1.0 / m as f64).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn empty_and_edgeless() {
        let res = maximize(&Hypergraph::empty(3, 4).unwrap(), &OptimizerConfig::fast(0));
        assert_eq!(res.value, 0.0);
        assert_eq!(res.witness.as_slice().len(), 4);
        assert!(!res.infeasible);

        let res = maximize(&Hypergraph::empty(3, 0).unwrap(), &OptimizerConfig::fast(0));
        assert_eq!(res.value, 0.0);
        assert!(res.witness.as_slice().is_empty());
    }

    #[test]
    fn bounded_at_one_matches_unbounded() {
        let k5 = complete(3, 5).unwrap();
        let cfg = OptimizerConfig::fast(0);
        let free = maximize(&k5, &cfg);
        let capped = maximize_bounded(&k5, 1.0, &cfg).unwrap();
        assert!((free.value - capped.value).abs() < 1e-8);
        assert!((free.value - 0.08).abs() < 1e-9);
    }

    #[test]
    fn bounded_infeasible_flag() {
        let k4 = complete(3, 4).unwrap();
        let res = maximize_bounded(&k4, 0.2, &OptimizerConfig::fast(0)).unwrap();
        assert!(res.infeasible);
        assert_eq!(res.value, 0.0);
        assert!(res.witness.as_slice().is_empty());
        assert!(maximize_bounded(&k4, 0.0, &OptimizerConfig::fast(0)).is_err());
        assert!(maximize_bounded(&k4, 1.5, &OptimizerConfig::fast(0)).is_err());
    }

    #[test]
    fn star_bounded_respects_closed_form() {
        // a 3-uniform star with cap b obeys λ_b ≤ b(1-b)²/2
        let b = 1.0 / 7.0;
        for n in [8, 10, 12] {
            let star = {
                let mut edges = Vec::new();
                for i in 2..n {
                    for j in (i + 1)..=n {
                        edges.push(vec![1, i, j]);
                    }
                }
                Hypergraph::build(3, n, &edges).unwrap()
            };
            let res = maximize_bounded(&star, b, &OptimizerConfig::fast(0)).unwrap();
            assert!(res.value <= 0.5 * b * (1.0 - b) * (1.0 - b) + 1e-8);
            assert!(res.kkt_residual < 1e-6);
        }
    }

    #[test]
    fn kkt_examples() {
        // zero up to the last bits of the float evaluation
        let k5 = complete(3, 5).unwrap();
        let resid = kkt_residual(&k5, &[0.2; 5]).unwrap();
        assert!(resid < 1e-15, "{resid}");

        let single = Hypergraph::build(3, 3, &[vec![1, 2, 3]]).unwrap();
        let resid = kkt_residual(&single, &[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(resid, 0.0);

        assert!(kkt_residual(&k5, &[0.5, 0.5]).is_err());
    }

    #[test]
    fn deterministic_across_runs() {
        let star = linear_star(3, 2).unwrap();
        let cfg = OptimizerConfig::with_seed(7);
        let a = maximize(&star, &cfg);
        let b = maximize(&star, &cfg);
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(
            a.witness
                .as_slice()
                .iter()
                .map(|v| v.to_bits())
                .collect::<Vec<_>>(),
            b.witness
                .as_slice()
                .iter()
                .map(|v| v.to_bits())
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn linear_star_value() {
        // the optimum concentrates the off-center mass on a single edge, so
        // λ(L_2^3) equals the single-edge value 1/27
        let star = linear_star(3, 2).unwrap();
        let res = maximize(&star, &OptimizerConfig::fast(0));
        assert!((res.value - 1.0 / 27.0).abs() < 1e-9);
        assert!(res.kkt_residual < 1e-8);
    }
}
