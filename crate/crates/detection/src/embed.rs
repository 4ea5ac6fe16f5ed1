//! Subgraph embedding by backtracking: most-constrained-first vertex order,
//! degree pruning, pair-coverage forward checking, and full-edge checks.

use crate::DetectionError;
use hypergraph_core::{mask_vertices, EdgeMask, Hypergraph};

/// An injective map from V(F) into V(G) sending edges to edges.
/// `map[v-1]` is the image of F-vertex v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image_of(&self, v: usize) -> usize {
        self.map[v - 1]
    }

    /// Checks injectivity and that every F-edge maps to a G-edge.
    pub fn is_valid(&self, pattern: &Hypergraph, host: &Hypergraph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut seen = 0u128;
        for &u in &self.map {
            if u == 0 || u > host.n() {
                return false;
            }
            let bit = 1u128 << (u - 1);
            if seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
        pattern.edge_masks().iter().all(|&e| {
            let img: u128 = mask_vertices(e)
                .iter()
                .fold(0, |acc, &v| acc | (1u128 << (self.map[v - 1] - 1)));
            host.has_edge_mask(img)
        })
    }
}

/// Pairs of vertices covered by a common edge, as per-vertex partner masks.
fn cover_masks(g: &Hypergraph) -> Vec<EdgeMask> {
    let mut cov = vec![0u128; g.n() + 1];
    for &e in g.edge_masks() {
        for v in mask_vertices(e) {
            cov[v] |= e & !(1u128 << (v - 1));
        }
    }
    cov
}

/// Most-constrained-first order: start from a maximum-degree vertex, then
/// repeatedly take the vertex sharing the most edges with placed vertices
/// (ties by degree, then label).
fn pattern_order(f: &Hypergraph) -> Vec<usize> {
    let n = f.n();
    let deg = {
        let mut d = vec![0usize; n + 1];
        for (v, dd) in f.degrees().into_iter().enumerate() {
            d[v + 1] = dd;
        }
        d
    };
    let cov = cover_masks(f);
    let mut order = Vec::with_capacity(n);
    let mut placed: EdgeMask = 0;
    let mut remaining: Vec<usize> = (1..=n).collect();
    while !remaining.is_empty() {
        let next = remaining
            .iter()
            .copied()
            .max_by(|&a, &b| {
                let key = |v: usize| ((cov[v] & placed).count_ones(), deg[v]);
                key(a).cmp(&key(b)).then_with(|| b.cmp(&a))
            })
            .unwrap();
        order.push(next);
        placed |= 1u128 << (next - 1);
        remaining.retain(|&v| v != next);
    }
    order
}

struct Embedder<'a> {
    host: &'a Hypergraph,
    pattern: &'a Hypergraph,
    order: Vec<usize>,
    /// earlier-placed pattern vertices sharing an edge with order[k]
    pair_prev: Vec<Vec<usize>>,
    /// pattern edges that become fully placed at position k
    complete_at: Vec<Vec<EdgeMask>>,
    host_cover: Vec<EdgeMask>,
    host_deg: Vec<usize>,
    pattern_deg: Vec<usize>,
    allowed: EdgeMask,
    map: Vec<usize>,
    used: EdgeMask,
}

impl Embedder<'_> {
    /// Returns true when the callback stopped the enumeration.
    fn dfs(&mut self, k: usize, cb: &mut dyn FnMut(&Embedding) -> bool) -> bool {
        if k == self.order.len() {
            let emb = Embedding {
                map: self.map.clone(),
            };
            return cb(&emb);
        }
        let fv = self.order[k];
        for u in 1..=self.host.n() {
            let bit = 1u128 << (u - 1);
            if self.used & bit != 0 || self.allowed & bit == 0 {
                continue;
            }
            if self.host_deg[u] < self.pattern_deg[fv] {
                continue;
            }
            // every placed neighbour must be coverable with u in the host
            if self.pair_prev[k]
                .iter()
                .any(|&w| self.host_cover[u] & (1u128 << (self.map[w - 1] - 1)) == 0)
            {
                continue;
            }
            self.map[fv - 1] = u;
            self.used |= bit;
            let ok = self.complete_at[k].iter().all(|&e| {
                let img: u128 = mask_vertices(e)
                    .iter()
                    .fold(0, |acc, &v| acc | (1u128 << (self.map[v - 1] - 1)));
                self.host.has_edge_mask(img)
            });
            if ok && self.dfs(k + 1, cb) {
                return true;
            }
            self.used &= !bit;
            self.map[fv - 1] = 0;
        }
        false
    }
}

/// Enumerates embeddings of `pattern` into `host` with all images inside
/// `allowed`; stops (returning true) as soon as the callback returns true.
pub fn for_each_embedding_in(
    host: &Hypergraph,
    pattern: &Hypergraph,
    allowed: EdgeMask,
    cb: &mut dyn FnMut(&Embedding) -> bool,
) -> Result<bool, DetectionError> {
    if host.r() != pattern.r() {
        return Err(DetectionError::UniformityMismatch {
            pattern: pattern.r(),
            host: host.r(),
        });
    }
    if pattern.n() > (allowed.count_ones() as usize)
        || pattern.edge_count() > host.edge_count()
    {
        return Ok(false);
    }
    let order = pattern_order(pattern);
    let pcov = cover_masks(pattern);
    let mut pos = vec![usize::MAX; pattern.n() + 1];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    let pair_prev: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| {
            mask_vertices(pcov[v])
                .into_iter()
                .filter(|&w| pos[w] < pos[v])
                .collect()
        })
        .collect();
    let mut complete_at: Vec<Vec<EdgeMask>> = vec![Vec::new(); order.len()];
    for &e in pattern.edge_masks() {
        let last = mask_vertices(e).into_iter().map(|v| pos[v]).max().unwrap();
        complete_at[last].push(e);
    }
    let pattern_deg = {
        let mut d = vec![0usize; pattern.n() + 1];
        for (v, dd) in pattern.degrees().into_iter().enumerate() {
            d[v + 1] = dd;
        }
        d
    };
    let host_deg = {
        let mut d = vec![0usize; host.n() + 1];
        for (v, dd) in host.degrees().into_iter().enumerate() {
            d[v + 1] = dd;
        }
        d
    };
    let mut emb = Embedder {
        host,
        pattern,
        order,
        pair_prev,
        complete_at,
        host_cover: cover_masks(host),
        host_deg,
        pattern_deg,
        allowed,
        map: vec![0; pattern.n()],
        used: 0,
    };
    Ok(emb.dfs(0, cb))
}

fn full_mask(n: usize) -> EdgeMask {
    if n == 128 {
        !0
    } else {
        (1u128 << n) - 1
    }
}

/// First embedding of `pattern` into `host`, if any.
pub fn find_embedding(
    host: &Hypergraph,
    pattern: &Hypergraph,
) -> Result<Option<Embedding>, DetectionError> {
    let mut found = None;
    for_each_embedding_in(host, pattern, full_mask(host.n()), &mut |e| {
        found = Some(e.clone());
        true
    })?;
    Ok(found)
}

/// True iff `host` contains `pattern` as a subgraph.
pub fn has_subgraph(host: &Hypergraph, pattern: &Hypergraph) -> Result<bool, DetectionError> {
    Ok(find_embedding(host, pattern)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypergraph_core::{complete, matching, turan_blowup};

    #[test]
    fn matching_embeds_only_with_room() {
        let m2 = matching(3, 2).unwrap();
        assert!(!has_subgraph(&complete(3, 5).unwrap(), &m2).unwrap());
        assert!(has_subgraph(&complete(3, 6).unwrap(), &m2).unwrap());
    }

    #[test]
    fn witness_is_valid() {
        let m2 = matching(3, 2).unwrap();
        let k6 = complete(3, 6).unwrap();
        let emb = find_embedding(&k6, &m2).unwrap().unwrap();
        assert!(emb.is_valid(&m2, &k6));
    }

    #[test]
    fn uniformity_mismatch_is_an_error() {
        let k4 = complete(2, 4).unwrap();
        let k5 = complete(3, 5).unwrap();
        assert!(has_subgraph(&k5, &k4).is_err());
    }

    #[test]
    fn edgeless_pattern_needs_only_room() {
        let empty4 = hypergraph_core::Hypergraph::empty(3, 4).unwrap();
        assert!(has_subgraph(&complete(3, 5).unwrap(), &empty4).unwrap());
        let empty7 = hypergraph_core::Hypergraph::empty(3, 7).unwrap();
        assert!(!has_subgraph(&complete(3, 5).unwrap(), &empty7).unwrap());
    }

    #[test]
    fn turan_blowup_15_avoids_matching_extension() {
        let t = turan_blowup(3, 5, 15).unwrap();
        let h = matching(3, 2).unwrap().extension(6).unwrap();
        assert!(!has_subgraph(&t, &h).unwrap());
    }
}
