//! Evaluation and differentiation of the edge polynomial
//! `λ(G, x) = Σ_{e∈E} Π_{i∈e} x_i`, in floats and in exact rationals.

use crate::EngineError;
use hypergraph_core::{mask_vertices, Hypergraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

fn check_len(g: &Hypergraph, len: usize) -> Result<(), EngineError> {
    if len != g.n() {
        return Err(EngineError::LengthMismatch {
            got: len,
            expected: g.n(),
        });
    }
    Ok(())
}

pub(crate) fn evaluate_unchecked(g: &Hypergraph, x: &[f64]) -> f64 {
    let mut total = 0.0;
    for &e in g.edge_masks() {
        let mut prod = 1.0;
        let mut m = e;
        while m != 0 {
            prod *= x[m.trailing_zeros() as usize];
            m &= m - 1;
        }
        total += prod;
    }
    total
}

/// `λ(G, x)`.
pub fn evaluate(g: &Hypergraph, x: &[f64]) -> Result<f64, EngineError> {
    check_len(g, x.len())?;
    Ok(evaluate_unchecked(g, x))
}

pub(crate) fn gradient_unchecked(g: &Hypergraph, x: &[f64]) -> Vec<f64> {
    let mut grad = vec![0.0; g.n()];
    for &e in g.edge_masks() {
        // product over the edge, redistributed to each coordinate
        let vs = mask_vertices(e);
        for &i in &vs {
            let mut prod = 1.0;
            for &j in &vs {
                if j != i {
                    prod *= x[j - 1];
                }
            }
            grad[i - 1] += prod;
        }
    }
    grad
}

/// `∂λ/∂x_i = Σ_{i∈e} Π_{j∈e\{i}} x_j` for each i.
pub fn gradient(g: &Hypergraph, x: &[f64]) -> Result<Vec<f64>, EngineError> {
    check_len(g, x.len())?;
    Ok(gradient_unchecked(g, x))
}

/// Exact evaluation for rational weights.
pub fn evaluate_exact(g: &Hypergraph, x: &[BigRational]) -> Result<BigRational, EngineError> {
    check_len(g, x.len())?;
    let mut total = BigRational::zero();
    for &e in g.edge_masks() {
        let mut prod = BigRational::from_integer(BigInt::from(1));
        for v in mask_vertices(e) {
            prod *= &x[v - 1];
        }
        total += prod;
    }
    Ok(total)
}

/// Exact gradient for rational weights.
pub fn gradient_exact(g: &Hypergraph, x: &[BigRational]) -> Result<Vec<BigRational>, EngineError> {
    check_len(g, x.len())?;
    let mut grad = vec![BigRational::zero(); g.n()];
    for &e in g.edge_masks() {
        let vs = mask_vertices(e);
        for &i in &vs {
            let mut prod = BigRational::from_integer(BigInt::from(1));
            for &j in &vs {
                if j != i {
                    prod *= &x[j - 1];
                }
            }
            grad[i - 1] += prod;
        }
    }
    Ok(grad)
}
