//! Weight averaging across structurally symmetric pairs: if
//! `L(i\j) = L(j\i) = ∅`, replacing x_i, x_j by their mean never decreases
//! the Lagrangian, and it preserves b-boundedness.

use crate::eval::evaluate_unchecked;
use hypergraph_core::Hypergraph;

const WEIGHT_EPS: f64 = 1e-12;
const MAX_ROUNDS: usize = 10_000;

/// Pairs whose exclusive links are both empty (swapping i and j maps edges to
/// edges). Precomputed once per call.
fn symmetric_pairs(g: &Hypergraph) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 1..g.n() {
        for j in (i + 1)..=g.n() {
            if g.link_diff(i, j).map(|d| d.is_empty()).unwrap_or(false)
                && g.link_diff(j, i).map(|d| d.is_empty()).unwrap_or(false)
            {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Repeatedly averages the weights of symmetric pairs with unequal weights
/// (lexicographically first applicable pair each round). The sum of squared
/// weights strictly decreases at every step, so the loop terminates; the
/// Lagrangian never decreases and any cap `x ≤ b` is preserved.
pub fn symmetrize_uncovered(g: &Hypergraph, x: &[f64]) -> Vec<f64> {
    let pairs = symmetric_pairs(g);
    let mut x = x.to_vec();
    if pairs.is_empty() {
        return x;
    }
    for _ in 0..MAX_ROUNDS {
        let mut changed = false;
        for &(i, j) in &pairs {
            if (x[i - 1] - x[j - 1]).abs() > WEIGHT_EPS {
                let avg = 0.5 * (x[i - 1] + x[j - 1]);
                x[i - 1] = avg;
                x[j - 1] = avg;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypergraph_core::{complete, matching};

    #[test]
    fn complete_graph_averages_to_uniform() {
        let k5 = complete(3, 5).unwrap();
        let x = [0.4, 0.15, 0.15, 0.15, 0.15];
        let before = evaluate_unchecked(&k5, &x);
        let y = symmetrize_uncovered(&k5, &x);
        let after = evaluate_unchecked(&k5, &y);
        assert!(after >= before);
        for v in &y {
            assert!((v - 0.2).abs() < 1e-9, "{y:?}");
        }
    }

    #[test]
    fn center_weight_stays_fixed() {
        // K_4^3 minus the edge 234: pairs within {2,3,4} are symmetric,
        // pairs through the apex 1 are not
        let g = hypergraph_core::Hypergraph::build(
            3,
            4,
            &[vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4]],
        )
        .unwrap();
        let x = [0.4, 0.3, 0.2, 0.1];
        let before = evaluate_unchecked(&g, &x);
        let y = symmetrize_uncovered(&g, &x);
        assert_eq!(y[0], 0.4);
        for k in 1..4 {
            assert!((y[k] - 0.2).abs() < 1e-9, "{y:?}");
        }
        assert!(evaluate_unchecked(&g, &y) >= before);
    }

    #[test]
    fn no_symmetric_pair_means_no_change() {
        // a path-like 3-graph where every pair of vertices has distinct links
        let g = hypergraph_core::Hypergraph::build(
            3,
            5,
            &[vec![1, 2, 3], vec![2, 3, 4], vec![3, 4, 5]],
        )
        .unwrap();
        let x = [0.3, 0.25, 0.2, 0.15, 0.1];
        let y = symmetrize_uncovered(&g, &x);
        assert_eq!(y, x.to_vec());
    }

    #[test]
    fn matching_averages_within_edges() {
        let m2 = matching(3, 2).unwrap();
        let x = [0.3, 0.2, 0.1, 0.25, 0.1, 0.05];
        let before = evaluate_unchecked(&m2, &x);
        let y = symmetrize_uncovered(&m2, &x);
        let after = evaluate_unchecked(&m2, &y);
        assert!(after >= before - 1e-15);
        // pairs inside an edge are symmetric, cross pairs are not, so the
        // weights equalize within {1,2,3} and within {4,5,6}
        assert!((y[0] - 0.2).abs() < 1e-9);
        assert!((y[1] - 0.2).abs() < 1e-9);
        assert!((y[2] - 0.2).abs() < 1e-9);
        assert!((y[3] - 0.4 / 3.0).abs() < 1e-9);
        let sum: f64 = y.iter().sum();
        assert!((sum - 1.0).abs() < 1e-12);
    }
}
