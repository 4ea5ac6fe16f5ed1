//! Evaluate, differentiate, and maximize the Lagrangian polynomial of an
//! r-graph over the simplex and over the b-capped simplex, with KKT
//! stationarity certificates, exact rational arithmetic on rational inputs,
//! exact 2-graph values via the clique closed form, and weight symmetrization.

mod eval;
mod motzkin;
mod optimize;
mod project;
mod symmetry;

use serde::Serialize;
use thiserror::Error;

pub use eval::{evaluate, evaluate_exact, gradient, gradient_exact};
pub use motzkin::motzkin_straus;
pub use optimize::{
    kkt_residual, kkt_residual_bounded, maximize, maximize_bounded, LagrangianResult, Maximizer,
    OptimizerConfig,
};
pub use project::{project_simplex, project_simplex_box};
pub use symmetry::symmetrize_uncovered;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("weight vector has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    #[error("bound must satisfy 0 < b <= 1, got {b}")]
    BadBound { b: f64 },

    #[error("no b-bounded feasible vector on {n} vertices with b = {b} (n*b < 1)")]
    InfeasibleBox { n: usize, b: f64 },

    #[error("operation requires a 2-graph, got uniformity {r}")]
    NotTwoUniform { r: usize },

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),
}

/// A point of the simplex: nonnegative coordinates summing to 1 (within
/// 1e-12 in floats). The empty vector is reserved for results of infeasible
/// bounded problems.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(xs: Vec<f64>) -> Result<Self, EngineError> {
        if xs.is_empty() {
            return Err(EngineError::InvalidWeights("empty vector".into()));
        }
        if xs.iter().any(|&v| v < 0.0 || !v.is_finite()) {
            return Err(EngineError::InvalidWeights(
                "coordinates must be finite and nonnegative".into(),
            ));
        }
        let sum: f64 = xs.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(EngineError::InvalidWeights(format!(
                "coordinates sum to {sum}, expected 1"
            )));
        }
        Ok(WeightVector(xs))
    }

    pub fn uniform(n: usize) -> Self {
        WeightVector(vec![1.0 / n as f64; n])
    }

    /// The infeasible-result placeholder.
    pub fn empty() -> Self {
        WeightVector(Vec::new())
    }

    pub(crate) fn from_raw(xs: Vec<f64>) -> Self {
        WeightVector(xs)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn is_bounded_by(&self, b: f64) -> bool {
        self.0.iter().all(|&v| v <= b + 1e-12)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_vector_validation() {
        assert!(WeightVector::new(vec![0.5, 0.5]).is_ok());
        assert!(WeightVector::new(vec![0.5, 0.4]).is_err());
        assert!(WeightVector::new(vec![-0.5, 1.5]).is_err());
        assert!(WeightVector::new(vec![]).is_err());
        assert!(WeightVector::uniform(4).is_bounded_by(0.25));
        assert!(!WeightVector::uniform(4).is_bounded_by(0.2));
    }

    #[test]
    fn result_serializes_with_pinned_fields() {
        let k5 = hypergraph_core::complete(3, 5).unwrap();
        let res = maximize(&k5, &OptimizerConfig::fast(3));
        let json = serde_json::to_value(&res).unwrap();
        for key in ["value", "witness", "kkt_residual", "restarts", "bounded_by", "seed"] {
            assert!(json.get(key).is_some(), "missing key {key}");
        }
        assert!(json["witness"].is_array());
    }
}
