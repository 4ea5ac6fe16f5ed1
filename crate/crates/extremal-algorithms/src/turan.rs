//! Exact tiny-scale Turán numbers and the matching-free Lagrangian maximum
//! over enumerated isomorphism classes.

use crate::enumerate::{all_r_subsets, binom, cell_limit, enumerate_free, EnumerateOptions, Predicate};
use crate::ExtremalError;
use detection::has_subgraph;
use hypergraph_core::{canonical_form, EdgeMask, Hypergraph};
use lagrangian_engine::{maximize, OptimizerConfig};
use rayon::prelude::*;

/// Default ceiling on C(n, r) for the 2^C(n,r) brute force.
pub const TURAN_CELL_LIMIT: usize = 21;

struct TuranSearch<'a> {
    r: usize,
    n: usize,
    forbidden: &'a Hypergraph,
    best: usize,
}

impl TuranSearch<'_> {
    fn run(
        &mut self,
        idx: usize,
        all: &[EdgeMask],
        chosen: &mut Vec<EdgeMask>,
    ) -> Result<(), ExtremalError> {
        if chosen.len() > self.best {
            self.best = chosen.len();
        }
        if idx == all.len() || chosen.len() + (all.len() - idx) <= self.best {
            return Ok(());
        }
        // include all[idx] when the graph stays forbidden-free
        chosen.push(all[idx]);
        let g = Hypergraph::from_masks(self.r, self.n, chosen.clone())?;
        if !has_subgraph(&g, self.forbidden)? {
            self.run(idx + 1, all, chosen)?;
        }
        chosen.pop();
        // exclude it
        self.run(idx + 1, all, chosen)
    }
}

/// Exact `ex(n, F)` by depth-first search over edge sets with an additive
/// bound. Guarded to C(n, r) ≤ 21 unless forced.
pub fn turan_bruteforce(
    n: usize,
    forbidden: &Hypergraph,
    force_scale: bool,
) -> Result<usize, ExtremalError> {
    let r = forbidden.r();
    let cells = binom(n, r);
    let limit = cell_limit(TURAN_CELL_LIMIT);
    if cells > limit && !force_scale {
        return Err(ExtremalError::ScaleGuard { cells, limit });
    }
    let all = all_r_subsets(r, n);
    let mut search = TuranSearch {
        r,
        n,
        forbidden,
        best: 0,
    };
    search.run(0, &all, &mut Vec::new())?;
    Ok(search.best)
}

/// Maximum Lagrangian over all enumerated F-free isomorphism classes with no
/// isolated vertex on at most `n_max` vertices, optionally excluding named
/// graphs (up to isomorphism). Returns the value and the winning class.
pub fn max_lagrangian_over_free(
    n_max: usize,
    forbidden: &Hypergraph,
    exclusions: &[Hypergraph],
    cfg: &OptimizerConfig,
    opts: &EnumerateOptions,
) -> Result<(f64, Hypergraph), ExtremalError> {
    let r = forbidden.r();
    let classes = enumerate_free(
        r,
        n_max,
        &[Predicate::Free(forbidden.clone()), Predicate::NoIsolated],
        opts,
    )?;
    let excluded: Vec<Vec<u8>> = exclusions.iter().map(canonical_form).collect();
    let scored: Vec<(f64, &Hypergraph)> = classes
        .par_iter()
        .filter(|g| !excluded.contains(&canonical_form(g)))
        .map(|g| (maximize(g, cfg).value, g))
        .collect();
    let mut best: Option<(f64, &Hypergraph)> = None;
    for (v, g) in scored {
        let better = match best {
            None => true,
            Some((bv, bg)) => {
                v > bv || (v == bv && canonical_form(g) < canonical_form(bg))
            }
        };
        if better {
            best = Some((v, g));
        }
    }
    best.map(|(v, g)| (v, g.clone()))
        .ok_or_else(|| ExtremalError::DidNotConverge("no class survived the exclusions".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypergraph_core::{complete, matching};

    #[test]
    fn mantel_value() {
        let k3 = complete(2, 3).unwrap();
        assert_eq!(turan_bruteforce(5, &k3, false).unwrap(), 6);
    }

    #[test]
    fn matching_turan_values() {
        let m2 = matching(3, 2).unwrap();
        assert_eq!(turan_bruteforce(5, &m2, false).unwrap(), 10);
        let m2_2 = matching(2, 2).unwrap();
        assert_eq!(turan_bruteforce(4, &m2_2, false).unwrap(), 3);
    }

    #[test]
    fn scale_guard() {
        let m2 = matching(3, 2).unwrap();
        assert!(matches!(
            turan_bruteforce(7, &m2, false),
            Err(ExtremalError::ScaleGuard { .. })
        ));
    }

    #[test]
    fn bipartite_lagrangian_maximum() {
        // triangle-free 2-graphs on <= 5 vertices: the maximum Lagrangian is
        // 1/4, by the 2-clique closed form
        let k3 = complete(2, 3).unwrap();
        let (value, _witness_graph) = max_lagrangian_over_free(
            5,
            &k3,
            &[],
            &OptimizerConfig::fast(0),
            &EnumerateOptions::default(),
        )
        .unwrap();
        assert!((value - 0.25).abs() < 1e-7);
    }
}
