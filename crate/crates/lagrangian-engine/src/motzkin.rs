//! Exact 2-graph Lagrangians: λ(G) = (1 - 1/ω)/2 for clique number ω.

use crate::EngineError;
use detection::clique_number;
use hypergraph_core::Hypergraph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Exact rational λ(G) for a 2-graph, driven by the exact clique search.
pub fn motzkin_straus(g: &Hypergraph) -> Result<BigRational, EngineError> {
    if g.r() != 2 {
        return Err(EngineError::NotTwoUniform { r: g.r() });
    }
    if g.is_empty() {
        return Ok(BigRational::zero());
    }
    let omega = clique_number(g) as i64;
    Ok(BigRational::new(
        BigInt::from(omega - 1),
        BigInt::from(2 * omega),
    ))
}
