//! Numerical density check: G is dense when every vertex deletion strictly
//! lowers the Lagrangian.

use hypergraph_core::Hypergraph;

/// Anything that can evaluate the Lagrangian of a graph. The optimizer crate
/// provides the real implementation; tests may stub it with closed forms.
pub trait LagrangianEval: Sync {
    fn lagrangian(&self, g: &Hypergraph) -> f64;
}

impl<F: Fn(&Hypergraph) -> f64 + Sync> LagrangianEval for F {
    fn lagrangian(&self, g: &Hypergraph) -> f64 {
        self(g)
    }
}

/// Three-valued verdict. Vertex-deletion gaps `λ(G) - λ(G - v)` are
/// nonnegative in exact arithmetic, so:
/// - `Dense`: every gap exceeds +tol;
/// - `Inconclusive`: the smallest gap lies within ±tol (equality, i.e. a
///   non-dense graph, is numerically indistinguishable from a borderline
///   dense one);
/// - `NotDense`: some gap is below -tol, which certifies that the value
///   reported for G was not optimal and in particular G was not verified dense.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Density {
    Dense,
    NotDense,
    Inconclusive,
}

impl Density {
    /// Boolean view: only a certified `Dense` counts as true.
    pub fn as_bool(self) -> bool {
        matches!(self, Density::Dense)
    }
}

#[derive(Debug, Clone)]
pub struct DensityReport {
    pub lambda: f64,
    /// `λ(G) - λ(G - v)` for each vertex v in 1..=n
    pub gaps: Vec<f64>,
    pub status: Density,
}

/// Deleting one vertex at a time suffices: the Lagrangian is monotone under
/// taking subgraphs, so a deficient proper subgraph yields a deficient
/// single-vertex deletion.
pub fn density_report<E: LagrangianEval + ?Sized>(
    g: &Hypergraph,
    eval: &E,
    tol: f64,
) -> DensityReport {
    let lambda = eval.lagrangian(g);
    let mut gaps = Vec::with_capacity(g.n());
    for v in 1..=g.n() {
        let rest: Vec<usize> = (1..=g.n()).filter(|&u| u != v).collect();
        let (sub, _) = g.induced(&rest).expect("vertex range is valid");
        gaps.push(lambda - eval.lagrangian(&sub));
    }
    let min_gap = gaps.iter().copied().fold(f64::INFINITY, f64::min);
    let status = if min_gap > tol {
        Density::Dense
    } else if min_gap < -tol {
        Density::NotDense
    } else {
        Density::Inconclusive
    };
    DensityReport {
        lambda,
        gaps,
        status,
    }
}

/// Default tolerance for density checks.
pub const DENSITY_TOL: f64 = 1e-7;

pub fn is_dense<E: LagrangianEval + ?Sized>(g: &Hypergraph, eval: &E, tol: f64) -> Density {
    density_report(g, eval, tol).status
}
