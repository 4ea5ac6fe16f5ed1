//! Membership test for the weak-extension family: does G contain a p-vertex
//! core hosting a copy of F, with every core pair not covered by that copy
//! covered by some edge of G (which may leave the core)?

use crate::embed::for_each_embedding_in;
use crate::DetectionError;
use hypergraph_core::{mask_vertices, EdgeMask, Hypergraph};

pub fn contains_weak_extension(
    g: &Hypergraph,
    f: &Hypergraph,
    p: usize,
) -> Result<bool, DetectionError> {
    if g.r() != f.r() {
        return Err(DetectionError::UniformityMismatch {
            pattern: f.r(),
            host: g.r(),
        });
    }
    if p < f.n() {
        return Err(DetectionError::CoreTooSmall { p, base: f.n() });
    }
    if p > g.n() {
        return Ok(false);
    }
    // pair coverage in the full host
    let mut host_cover = vec![0u128; g.n() + 1];
    for &e in g.edge_masks() {
        for v in mask_vertices(e) {
            host_cover[v] |= e & !(1u128 << (v - 1));
        }
    }
    let mut core: Vec<usize> = Vec::with_capacity(p);
    search_cores(g, f, p, 1, &mut core, &host_cover)
}

fn search_cores(
    g: &Hypergraph,
    f: &Hypergraph,
    p: usize,
    from: usize,
    core: &mut Vec<usize>,
    host_cover: &[EdgeMask],
) -> Result<bool, DetectionError> {
    if core.len() == p {
        return core_hosts_copy(g, f, core, host_cover);
    }
    let needed = p - core.len();
    for v in from..=g.n() {
        if g.n() - v + 1 < needed {
            break;
        }
        core.push(v);
        if search_cores(g, f, p, v + 1, core, host_cover)? {
            core.pop();
            return Ok(true);
        }
        core.pop();
    }
    Ok(false)
}

fn core_hosts_copy(
    g: &Hypergraph,
    f: &Hypergraph,
    core: &[usize],
    host_cover: &[EdgeMask],
) -> Result<bool, DetectionError> {
    let core_mask: EdgeMask = core.iter().fold(0, |acc, &v| acc | (1u128 << (v - 1)));
    // the copy of F must live in the subgraph induced by the core
    let g_core = g.induced_keep_labels(core_mask);
    if g_core.edge_count() < f.edge_count() {
        return Ok(false);
    }
    let mut ok = false;
    for_each_embedding_in(&g_core, f, core_mask, &mut |emb| {
        // pairs covered by this copy of F
        let mut copy_cover = vec![0u128; g.n() + 1];
        for &e in f.edge_masks() {
            let img: EdgeMask = mask_vertices(e)
                .iter()
                .fold(0, |acc, &v| acc | (1u128 << (emb.map[v - 1] - 1)));
            for v in mask_vertices(img) {
                copy_cover[v] |= img & !(1u128 << (v - 1));
            }
        }
        let all_covered = core.iter().enumerate().all(|(k, &u)| {
            core[k + 1..].iter().all(|&v| {
                let bit = 1u128 << (v - 1);
                copy_cover[u] & bit != 0 || host_cover[u] & bit != 0
            })
        });
        if all_covered {
            ok = true;
        }
        ok
    })?;
    Ok(ok)
}
