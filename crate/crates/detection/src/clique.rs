//! Largest complete subgraph `K_p^r ⊆ G` by backtracking over vertex sets.

use hypergraph_core::{mask_of, Hypergraph};

struct CliqueSearch<'a> {
    g: &'a Hypergraph,
    r: usize,
    best: usize,
    target: Option<usize>,
}

impl CliqueSearch<'_> {
    /// All r-subsets of `set ∪ {v}` containing v must be edges; subsets not
    /// containing v were validated earlier.
    fn compatible(&self, set: &[usize], v: usize) -> bool {
        if set.len() + 1 < self.r {
            return true;
        }
        let mut pick = Vec::with_capacity(self.r - 1);
        self.subsets_ok(set, 0, v, &mut pick)
    }

    fn subsets_ok(&self, set: &[usize], from: usize, v: usize, pick: &mut Vec<usize>) -> bool {
        if pick.len() == self.r - 1 {
            let mut e = pick.clone();
            e.push(v);
            return self.g.has_edge_mask(mask_of(&e));
        }
        // not enough vertices left to complete the subset
        if set.len() - from < self.r - 1 - pick.len() {
            return true;
        }
        for k in from..set.len() {
            pick.push(set[k]);
            if !self.subsets_ok(set, k + 1, v, pick) {
                pick.pop();
                return false;
            }
            pick.pop();
        }
        true
    }

    fn extend(&mut self, set: &mut Vec<usize>, cands: &[usize]) {
        if set.len() > self.best {
            self.best = set.len();
        }
        if let Some(t) = self.target {
            if self.best >= t {
                return;
            }
        }
        if set.len() + cands.len() <= self.best {
            return;
        }
        for (k, &v) in cands.iter().enumerate() {
            if set.len() + (cands.len() - k) <= self.best {
                return;
            }
            set.push(v);
            let rest: Vec<usize> = cands[k + 1..]
                .iter()
                .copied()
                .filter(|&u| self.compatible(set, u))
                .collect();
            self.extend(set, &rest);
            set.pop();
            if let Some(t) = self.target {
                if self.best >= t {
                    return;
                }
            }
        }
    }
}

/// Largest p such that all r-subsets of some p-set are edges. An edgeless
/// graph yields r-1 by convention (the largest trivially complete size).
pub fn clique_number(g: &Hypergraph) -> usize {
    if g.is_empty() {
        return g.r() - 1;
    }
    let mut s = CliqueSearch {
        g,
        r: g.r(),
        best: g.r(),
        target: None,
    };
    let all: Vec<usize> = (1..=g.n()).collect();
    s.extend(&mut Vec::new(), &all);
    s.best
}

/// True iff `K_p^r ⊆ G`.
pub fn has_clique(g: &Hypergraph, p: usize) -> bool {
    if p <= g.r() - 1 {
        return true;
    }
    if g.is_empty() || p > g.n() {
        return false;
    }
    let mut s = CliqueSearch {
        g,
        r: g.r(),
        best: g.r(),
        target: Some(p),
    };
    let all: Vec<usize> = (1..=g.n()).collect();
    s.extend(&mut Vec::new(), &all);
    s.best >= p
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypergraph_core::{complete, turan_blowup, Hypergraph};

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&complete(3, 5).unwrap()), 5);
        let c5 = Hypergraph::build(
            2,
            5,
            &[vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![1, 5]],
        )
        .unwrap();
        assert_eq!(clique_number(&c5), 2);
        assert_eq!(clique_number(&turan_blowup(3, 5, 12).unwrap()), 5);
        assert_eq!(clique_number(&Hypergraph::empty(3, 4).unwrap()), 2);
    }

    #[test]
    fn has_clique_thresholds() {
        let t = turan_blowup(3, 5, 12).unwrap();
        assert!(has_clique(&t, 5));
        assert!(!has_clique(&t, 6));
        assert!(has_clique(&t, 2)); // p <= r-1 is trivially complete
    }
}
