//! Isomorphism-free enumeration of predicate-constrained r-graphs by edge
//! augmentation with canonical-form rejection, plus the labeled enumeration
//! of left-compressed graphs as down-sets of the coordinate dominance order.

use crate::ExtremalError;
use detection::{has_matching, has_subgraph};
use hypergraph_core::{canonical_form, mask_of, mask_vertices, EdgeMask, Hypergraph};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::path::PathBuf;

/// Predicates closed under edge removal prune the augmentation search; the
/// label-sensitive ones (`NoIsolated`, `LeftCompressed`) act at emission or
/// switch the generator.
#[derive(Debug, Clone, PartialEq)]
pub enum Predicate {
    /// no t pairwise disjoint edges (M_t-free)
    MatchingFree(usize),
    /// no complete subgraph on p vertices (K_p-free)
    CliqueFree(usize),
    /// no copy of the given graph
    Free(Hypergraph),
    NoIsolated,
    /// left-compressed relative to the natural order (labeled enumeration)
    LeftCompressed,
}

impl Predicate {
    fn hereditary_ok(&self, g: &Hypergraph) -> Result<bool, ExtremalError> {
        Ok(match self {
            Predicate::MatchingFree(t) => !has_matching(g, *t),
            Predicate::CliqueFree(p) => !detection::has_clique(g, *p),
            Predicate::Free(f) => !has_subgraph(g, f)?,
            Predicate::NoIsolated | Predicate::LeftCompressed => true,
        })
    }
}

/// Default ceiling on the number of candidate edges C(n, r).
pub const ENUMERATE_CELL_LIMIT: usize = 35;

/// Reads the `LAGRANGIA_MAX_CELLS` override for a scale guard.
pub fn cell_limit(default: usize) -> usize {
    std::env::var("LAGRANGIA_MAX_CELLS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(default)
}

pub(crate) fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub(crate) fn all_r_subsets(r: usize, n: usize) -> Vec<EdgeMask> {
    let mut out = Vec::new();
    fn rec(from: usize, n: usize, r: usize, pick: &mut Vec<usize>, out: &mut Vec<EdgeMask>) {
        if pick.len() == r {
            out.push(mask_of(pick));
            return;
        }
        for v in from..=n {
            pick.push(v);
            rec(v + 1, n, r, pick, out);
        }
    }
    rec(1, n, r, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, Default)]
pub struct EnumerateOptions {
    pub limit: Option<usize>,
    pub force_scale: bool,
    /// BFS frontier checkpoint for resume (isomorphism-class mode only)
    pub checkpoint: Option<PathBuf>,
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    r: usize,
    n: usize,
    level: usize,
    frontier: Vec<String>,
    emitted: Vec<String>,
}

/// All isomorphism classes of r-graphs on at most n vertices satisfying the
/// predicates. Classes on fewer vertices appear via isolated-vertex padding;
/// with `NoIsolated` the emitted graphs are stripped to their support and
/// deduplicated, so each class on ≤ n vertices shows up exactly once.
///
/// When `LeftCompressed` is among the predicates the output switches to the
/// labeled enumeration of [`enumerate_left_compressed`].
pub fn enumerate_free(
    r: usize,
    n: usize,
    predicates: &[Predicate],
    opts: &EnumerateOptions,
) -> Result<Vec<Hypergraph>, ExtremalError> {
    if predicates.contains(&Predicate::LeftCompressed) {
        return enumerate_left_compressed(r, n, predicates, opts);
    }
    let cells = binom(n, r);
    let limit = cell_limit(ENUMERATE_CELL_LIMIT);
    if cells > limit && !opts.force_scale {
        return Err(ExtremalError::ScaleGuard { cells, limit });
    }
    let no_isolated = predicates.contains(&Predicate::NoIsolated);
    let all_edges = all_r_subsets(r, n);

    let mut frontier: Vec<Hypergraph> = vec![Hypergraph::empty(r, n)?];
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    seen.insert(canonical_form(&frontier[0]));
    let mut emitted_seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out: Vec<Hypergraph> = Vec::new();
    let mut level = 0usize;

    if let Some(path) = &opts.checkpoint {
        if let Ok(text) = std::fs::read_to_string(path) {
            let cp: Checkpoint = serde_json::from_str(&text)
                .map_err(|e| ExtremalError::Checkpoint(e.to_string()))?;
            if cp.r == r && cp.n == n {
                frontier = cp
                    .frontier
                    .iter()
                    .map(|s| hypergraph_core::parse_hg(s))
                    .collect::<Result<Vec<_>, _>>()?;
                out = cp
                    .emitted
                    .iter()
                    .map(|s| hypergraph_core::parse_hg(s))
                    .collect::<Result<Vec<_>, _>>()?;
                for g in &frontier {
                    seen.insert(canonical_form(g));
                }
                for g in &out {
                    emitted_seen.insert(canonical_form(g));
                }
                level = cp.level;
            }
        }
    }

    loop {
        // emit the current level
        for g in &frontier {
            let candidate = if no_isolated {
                let (stripped, _) = g.remove_isolated();
                stripped
            } else {
                g.clone()
            };
            if emitted_seen.insert(canonical_form(&candidate)) {
                out.push(candidate);
                if let Some(limit) = opts.limit {
                    if out.len() >= limit {
                        return Ok(out);
                    }
                }
            }
        }
        if frontier.is_empty() {
            break;
        }
        // augment every class by every absent edge; keep new canonical forms
        let candidates: Vec<(Vec<u8>, Hypergraph)> = frontier
            .par_iter()
            .map(|g| {
                let mut local = Vec::new();
                for &e in &all_edges {
                    if g.has_edge_mask(e) {
                        continue;
                    }
                    let mut masks = g.edge_masks().to_vec();
                    masks.push(e);
                    let bigger = Hypergraph::from_masks(r, n, masks)?;
                    let mut ok = true;
                    for p in predicates {
                        if !p.hereditary_ok(&bigger)? {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        local.push((canonical_form(&bigger), bigger));
                    }
                }
                Ok::<_, ExtremalError>(local)
            })
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .flatten()
            .collect();
        let mut next = Vec::new();
        for (key, g) in candidates {
            if seen.insert(key) {
                next.push(g);
            }
        }
        frontier = next;
        level += 1;
        if let Some(path) = &opts.checkpoint {
            let cp = Checkpoint {
                r,
                n,
                level,
                frontier: frontier.iter().map(hypergraph_core::write_hg).collect(),
                emitted: out.iter().map(hypergraph_core::write_hg).collect(),
            };
            let text = serde_json::to_string(&cp)
                .map_err(|e| ExtremalError::Checkpoint(e.to_string()))?;
            std::fs::write(path, text).map_err(|e| ExtremalError::Checkpoint(e.to_string()))?;
        }
    }
    Ok(out)
}

/// Immediate dominance predecessors of an edge: decrement one vertex label,
/// keeping the tuple strictly increasing.
fn immediate_predecessors(e: EdgeMask) -> Vec<EdgeMask> {
    let vs = mask_vertices(e);
    let mut out = Vec::new();
    for k in 0..vs.len() {
        let floor = if k == 0 { 1 } else { vs[k - 1] + 1 };
        if vs[k] > floor {
            let mut w = vs.clone();
            w[k] -= 1;
            out.push(mask_of(&w));
        }
    }
    out
}

/// All labeled graphs on `[n]` that are left-compressed relative to the
/// natural order (down-sets of the dominance order on sorted r-tuples) and
/// satisfy the predicates.
pub fn enumerate_left_compressed(
    r: usize,
    n: usize,
    predicates: &[Predicate],
    opts: &EnumerateOptions,
) -> Result<Vec<Hypergraph>, ExtremalError> {
    let cells = binom(n, r);
    let limit = cell_limit(ENUMERATE_CELL_LIMIT);
    if cells > limit && !opts.force_scale {
        return Err(ExtremalError::ScaleGuard { cells, limit });
    }
    let no_isolated = predicates.contains(&Predicate::NoIsolated);
    // lexicographic order on sorted tuples refines the dominance order
    let mut edges: Vec<Vec<usize>> = all_r_subsets(r, n)
        .iter()
        .map(|&m| mask_vertices(m))
        .collect();
    edges.sort();
    let edge_masks: Vec<EdgeMask> = edges.iter().map(|e| mask_of(e)).collect();
    let preds: Vec<Vec<EdgeMask>> = edge_masks
        .iter()
        .map(|&e| immediate_predecessors(e))
        .collect();

    let mut out = Vec::new();
    let mut chosen: Vec<EdgeMask> = Vec::new();
    dfs_downsets(
        r,
        n,
        0,
        &edge_masks,
        &preds,
        predicates,
        no_isolated,
        &mut chosen,
        &mut out,
        opts.limit,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs_downsets(
    r: usize,
    n: usize,
    idx: usize,
    edges: &[EdgeMask],
    preds: &[Vec<EdgeMask>],
    predicates: &[Predicate],
    no_isolated: bool,
    chosen: &mut Vec<EdgeMask>,
    out: &mut Vec<Hypergraph>,
    limit: Option<usize>,
) -> Result<(), ExtremalError> {
    if let Some(l) = limit {
        if out.len() >= l {
            return Ok(());
        }
    }
    if idx == edges.len() {
        let g = Hypergraph::from_masks(r, n, chosen.clone())?;
        if no_isolated && g.has_isolated_vertex() {
            return Ok(());
        }
        out.push(g);
        return Ok(());
    }
    // exclude edges[idx]
    dfs_downsets(
        r, n, idx + 1, edges, preds, predicates, no_isolated, chosen, out, limit,
    )?;
    // include it, if the down-closure and the predicates allow
    if preds[idx].iter().all(|p| chosen.contains(p)) {
        chosen.push(edges[idx]);
        let g = Hypergraph::from_masks(r, n, chosen.clone())?;
        let mut ok = true;
        for p in predicates {
            if !p.hereditary_ok(&g)? {
                ok = false;
                break;
            }
        }
        if ok {
            dfs_downsets(
                r, n, idx + 1, edges, preds, predicates, no_isolated, chosen, out, limit,
            )?;
        }
        chosen.pop();
    }
    Ok(())
}
