//! Exact maximum matching (set packing) by branch and bound.

use hypergraph_core::{EdgeMask, Hypergraph};

/// Greedy matching in edge order; a lower-bound seed for the search.
fn greedy(edges: &[EdgeMask]) -> usize {
    let mut used: EdgeMask = 0;
    let mut count = 0;
    for &e in edges {
        if e & used == 0 {
            used |= e;
            count += 1;
        }
    }
    count
}

struct Search<'a> {
    edges: &'a [EdgeMask],
    r: usize,
    best: usize,
    /// stop as soon as a matching of this size is found
    target: Option<usize>,
}

impl Search<'_> {
    fn run(&mut self, idx: usize, used: EdgeMask, count: usize) {
        if count > self.best {
            self.best = count;
        }
        if let Some(t) = self.target {
            if self.best >= t {
                return;
            }
        }
        // first branchable edge
        let mut k = idx;
        while k < self.edges.len() && self.edges[k] & used != 0 {
            k += 1;
        }
        if k == self.edges.len() {
            return;
        }
        // vertex-capacity bound over the remaining support
        let support = self.edges[k..]
            .iter()
            .fold(0u128, |acc, &e| acc | e);
        let free = (support & !used).count_ones() as usize;
        if count + free / self.r <= self.best {
            return;
        }
        // branch: edge k in the matching, then out of it
        self.run(k + 1, used | self.edges[k], count + 1);
        if let Some(t) = self.target {
            if self.best >= t {
                return;
            }
        }
        self.run(k + 1, used, count);
    }
}

/// Exact maximum number of pairwise disjoint edges.
pub fn matching_number(g: &Hypergraph) -> usize {
    let edges = g.edge_masks();
    let mut s = Search {
        edges,
        r: g.r(),
        best: greedy(edges),
        target: None,
    };
    s.run(0, 0, 0);
    s.best
}

/// True iff the graph has t pairwise disjoint edges, i.e. contains `M_t^r`.
pub fn has_matching(g: &Hypergraph, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    if g.edge_count() < t || g.n() < t * g.r() {
        return false;
    }
    let edges = g.edge_masks();
    let seed = greedy(edges);
    if seed >= t {
        return true;
    }
    let mut s = Search {
        edges,
        r: g.r(),
        best: seed,
        target: Some(t),
    };
    s.run(0, 0, 0);
    s.best >= t
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypergraph_core::{complete, family_f, matching, Hypergraph};

    #[test]
    fn matching_examples() {
        assert_eq!(matching_number(&complete(3, 6).unwrap()), 2);
        assert_eq!(matching_number(&family_f(2, 1, 6).unwrap()), 1);
        assert_eq!(matching_number(&Hypergraph::empty(3, 5).unwrap()), 0);
    }

    #[test]
    fn matching_of_matchings() {
        for t in 1..=4 {
            assert_eq!(matching_number(&matching(3, t).unwrap()), t);
        }
    }

    #[test]
    fn has_matching_thresholds() {
        let k6 = complete(3, 6).unwrap();
        assert!(has_matching(&k6, 1));
        assert!(has_matching(&k6, 2));
        assert!(!has_matching(&k6, 3));
        assert!(has_matching(&k6, 0));
    }
}
