//! Symmetrization and cleaning with an α-density threshold.
//!
//! Repeatedly: find two nonadjacent vertices with different links, replace the
//! link of every vertex in the lighter one's equivalence class by the heavier
//! vertex's link (this never loses edges), then delete minimum-degree vertices
//! until the graph is α-dense or empty. Stops when all remaining vertices are
//! pairwise adjacent or equivalent, which makes the result a blowup of its
//! class-representative subgraph.

use crate::ExtremalError;
use detection::contains_weak_extension;
use hypergraph_core::{mask_vertices, EdgeMask, Hypergraph};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum SymStep {
    Symmetrize {
        /// the class being rewired (original labels)
        class: Vec<usize>,
        target: usize,
        edges_before: usize,
        edges_after: usize,
    },
    Clean {
        /// the minimum-degree vertex that triggered the deletion
        trigger: usize,
        /// the vertex actually deleted (the symmetrization source when the
        /// trigger sits in the target's old class)
        removed: usize,
        min_degree: usize,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SymmetrizationTrace {
    pub steps: Vec<SymStep>,
}

#[derive(Debug)]
pub struct SymmetrizeOutcome {
    /// final graph, relabeled onto 1..k
    pub result: Hypergraph,
    /// original labels of the final vertices
    pub kept_labels: Vec<usize>,
    /// vertices removed by each cleaning round, in deletion order
    pub removed_sets: Vec<Vec<usize>>,
    pub trace: SymmetrizationTrace,
    /// first step index at which the forbidden-family check failed, if any
    pub forbidden_violation: Option<usize>,
}

/// Mutable working state over the original labels.
struct State {
    n: usize,
    active: Vec<bool>,
    edges: Vec<EdgeMask>,
}

impl State {
    fn link_of(&self, v: usize) -> Vec<EdgeMask> {
        let bit = 1u128 << (v - 1);
        let mut l: Vec<EdgeMask> = self
            .edges
            .iter()
            .filter(|&&e| e & bit != 0)
            .map(|&e| e & !bit)
            .collect();
        l.sort_unstable();
        l
    }

    fn degree(&self, v: usize) -> usize {
        let bit = 1u128 << (v - 1);
        self.edges.iter().filter(|&&e| e & bit != 0).count()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        let pair = (1u128 << (u - 1)) | (1u128 << (v - 1));
        self.edges.iter().any(|&e| e & pair == pair)
    }

    fn active_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.active[v]).collect()
    }

    fn delete(&mut self, v: usize) {
        self.active[v] = false;
        let bit = 1u128 << (v - 1);
        self.edges.retain(|&e| e & bit == 0);
    }

    fn to_graph(&self, r: usize) -> (Hypergraph, Vec<usize>) {
        let labels = self.active_vertices();
        let mut new_of = vec![0usize; self.n + 1];
        for (k, &v) in labels.iter().enumerate() {
            new_of[v] = k + 1;
        }
        let masks: Vec<EdgeMask> = self
            .edges
            .iter()
            .map(|&e| {
                let vs: Vec<usize> = mask_vertices(e).iter().map(|&v| new_of[v]).collect();
                hypergraph_core::mask_of(&vs)
            })
            .collect();
        (
            Hypergraph::from_masks(r, labels.len(), masks).expect("relabeling preserves validity"),
            labels,
        )
    }
}

fn binom(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Equivalence classes under exact link equality, recomputed from scratch.
fn classes(state: &State) -> Vec<Vec<usize>> {
    let verts = state.active_vertices();
    let mut out: Vec<(Vec<EdgeMask>, Vec<usize>)> = Vec::new();
    for v in verts {
        let link = state.link_of(v);
        match out.iter_mut().find(|(l, _)| *l == link) {
            Some((_, members)) => members.push(v),
            None => out.push((link, vec![v])),
        }
    }
    out.into_iter().map(|(_, m)| m).collect()
}

pub fn symmetrize_and_clean(
    g: &Hypergraph,
    alpha: f64,
    forbidden: Option<(&Hypergraph, usize)>,
) -> Result<SymmetrizeOutcome, ExtremalError> {
    if !(alpha > 0.0) || alpha > 1.0 {
        return Err(ExtremalError::BadAlpha(alpha));
    }
    let r = g.r();
    let mut state = State {
        n: g.n(),
        active: {
            let mut a = vec![true; g.n() + 1];
            a[0] = false;
            a
        },
        edges: g.edge_masks().to_vec(),
    };
    let input_free = match forbidden {
        Some((f, p)) => Some(!contains_weak_extension(g, f, p)?),
        None => None,
    };
    let mut trace = SymmetrizationTrace::default();
    let mut removed_sets: Vec<Vec<usize>> = Vec::new();
    let mut forbidden_violation: Option<usize> = None;

    let cap = 10 * g.n() * g.n() + 100;
    for _round in 0..cap {
        let verts = state.active_vertices();
        if verts.is_empty() {
            break;
        }
        let class_list = classes(&state);
        let mut class_of = vec![usize::MAX; state.n + 1];
        for (k, members) in class_list.iter().enumerate() {
            for &v in members {
                class_of[v] = k;
            }
        }
        // pick u of maximum degree with at least one nonadjacent nonequivalent
        // partner, then the best such partner v
        let has_partner = |u: usize| -> Option<usize> {
            verts
                .iter()
                .copied()
                .filter(|&v| v != u && class_of[v] != class_of[u] && !state.adjacent(u, v))
                .max_by(|&a, &b| {
                    state
                        .degree(a)
                        .cmp(&state.degree(b))
                        .then_with(|| b.cmp(&a))
                })
        };
        let u = verts
            .iter()
            .copied()
            .filter(|&u| has_partner(u).is_some())
            .max_by(|&a, &b| {
                state
                    .degree(a)
                    .cmp(&state.degree(b))
                    .then_with(|| b.cmp(&a))
            });
        let Some(u) = u else { break };
        let v = has_partner(u).expect("u was chosen to have a partner");
        debug_assert!(state.degree(u) >= state.degree(v));

        // symmetrize every vertex of v's class to u
        let v_class = class_list[class_of[v]].clone();
        let u_class_before = class_list[class_of[u]].clone();
        let u_link = state.link_of(u);
        let edges_before = state.edges.len();
        for &w in &v_class {
            let bit = 1u128 << (w - 1);
            state.edges.retain(|&e| e & bit == 0);
            for &a in &u_link {
                state.edges.push(a | bit);
            }
        }
        state.edges.sort_unstable();
        state.edges.dedup();
        let edges_after = state.edges.len();
        debug_assert!(edges_after >= edges_before);
        trace.steps.push(SymStep::Symmetrize {
            class: v_class.clone(),
            target: u,
            edges_before,
            edges_after,
        });

        if let (Some((f, p)), Some(true)) = (forbidden, input_free) {
            if forbidden_violation.is_none() {
                let (snapshot, _) = state.to_graph(r);
                if contains_weak_extension(&snapshot, f, p)? {
                    forbidden_violation = Some(trace.steps.len() - 1);
                }
            }
        }

        // cleaning: delete minimum-degree vertices until α-dense or empty
        let mut removed_now = Vec::new();
        let mut v_deleted = false;
        loop {
            let verts = state.active_vertices();
            if verts.is_empty() {
                break;
            }
            let threshold = alpha * binom(verts.len() - 1, r - 1);
            let z = verts
                .iter()
                .copied()
                .min_by(|&a, &b| {
                    state
                        .degree(a)
                        .cmp(&state.degree(b))
                        .then_with(|| a.cmp(&b))
                })
                .unwrap();
            let min_deg = state.degree(z);
            if min_deg as f64 >= threshold {
                break;
            }
            // protect the enriched class: if z sits in the old class of the
            // target u, delete the symmetrization source instead
            let removed = if u_class_before.contains(&z) && !v_deleted && state.active[v] {
                v_deleted = true;
                v
            } else {
                z
            };
            trace.steps.push(SymStep::Clean {
                trigger: z,
                removed,
                min_degree: min_deg,
            });
            state.delete(removed);
            removed_now.push(removed);
        }
        if !removed_now.is_empty() {
            removed_sets.push(removed_now);
        }
    }

    let (result, kept_labels) = state.to_graph(r);
    Ok(SymmetrizeOutcome {
        result,
        kept_labels,
        removed_sets,
        trace,
        forbidden_violation,
    })
}

/// Replays a trace against the original input, returning the final graph in
/// original labels (active vertices only, relabeled like the outcome).
pub fn replay_symmetrization(
    g: &Hypergraph,
    trace: &SymmetrizationTrace,
) -> Result<Hypergraph, ExtremalError> {
    let mut state = State {
        n: g.n(),
        active: {
            let mut a = vec![true; g.n() + 1];
            a[0] = false;
            a
        },
        edges: g.edge_masks().to_vec(),
    };
    for step in &trace.steps {
        match step {
            SymStep::Symmetrize { class, target, .. } => {
                let u_link = state.link_of(*target);
                for &w in class {
                    let bit = 1u128 << (w - 1);
                    state.edges.retain(|&e| e & bit == 0);
                    for &a in &u_link {
                        state.edges.push(a | bit);
                    }
                }
                state.edges.sort_unstable();
                state.edges.dedup();
            }
            SymStep::Clean { removed, .. } => state.delete(*removed),
        }
    }
    Ok(state.to_graph(g.r()).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypergraph_core::{complete, is_isomorphic};

    #[test]
    fn complete_graph_has_no_moves() {
        let k5 = complete(3, 5).unwrap();
        let out = symmetrize_and_clean(&k5, 0.5, None).unwrap();
        assert_eq!(out.result, k5);
        assert!(out.trace.steps.is_empty());
        assert!(out.removed_sets.is_empty());
    }

    #[test]
    fn two_disjoint_edges_merge_links() {
        // r = 2: a perfect matching 12, 34; one symmetrization makes links
        // agree and never loses edges
        let g = Hypergraph::build(2, 4, &[vec![1, 2], vec![3, 4]]).unwrap();
        let out = symmetrize_and_clean(&g, 0.1, None).unwrap();
        for step in &out.trace.steps {
            if let SymStep::Symmetrize {
                edges_before,
                edges_after,
                ..
            } = step
            {
                assert!(edges_after >= edges_before);
            }
        }
        // termination: all pairs adjacent or equivalent
        let res = &out.result;
        for i in 1..=res.n() {
            for j in (i + 1)..=res.n() {
                let adjacent = res.covers_pair(i, j).unwrap();
                let (li, _) = (res.link_sets(&[i]).unwrap(), ());
                let lj = res.link_sets(&[j]).unwrap();
                assert!(adjacent || li == lj);
            }
        }
    }

    use hypergraph_core::Hypergraph;

    #[test]
    fn planted_blowup_recovers_base() {
        let base = complete(2, 4).unwrap();
        let blown = base.blowup(&[2, 2, 2, 2]).unwrap();
        let out = symmetrize_and_clean(&blown, 0.4, None).unwrap();
        // classes of the result induce at most 4 classes and the class
        // representatives form K_4^2
        let reps = class_representatives(&out.result);
        assert!(reps.len() <= 4);
        let (core, _) = out.result.induced(&reps).unwrap();
        assert!(is_isomorphic(&core, &base));
    }

    fn class_representatives(g: &Hypergraph) -> Vec<usize> {
        let mut seen: Vec<(Vec<hypergraph_core::EdgeMask>, usize)> = Vec::new();
        for v in 1..=g.n() {
            let link = g.link_sets(&[v]).unwrap();
            if !seen.iter().any(|(l, _)| *l == link) {
                seen.push((link, v));
            }
        }
        seen.into_iter().map(|(_, v)| v).collect()
    }

    #[test]
    fn replay_matches_outcome() {
        let g = Hypergraph::build(
            3,
            6,
            &[vec![1, 2, 3], vec![1, 2, 4], vec![4, 5, 6], vec![2, 5, 6]],
        )
        .unwrap();
        let out = symmetrize_and_clean(&g, 0.3, None).unwrap();
        let replayed = replay_symmetrization(&g, &out.trace).unwrap();
        assert_eq!(replayed, out.result);
    }
}
