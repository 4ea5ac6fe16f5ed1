//! Euclidean projections onto the simplex and the box-capped simplex.

use crate::EngineError;

/// Projection onto `Δ = {x ≥ 0, Σx = 1}` by the sorted-threshold method.
pub fn project_simplex(v: &[f64]) -> Vec<f64> {
    let n = v.len();
    if n == 0 {
        return Vec::new();
    }
    let mut u = v.to_vec();
    u.sort_by(|a, b| b.partial_cmp(a).expect("weights are finite"));
    let mut cumsum = 0.0;
    let mut rho = 0;
    let mut theta = 0.0;
    for (k, &uk) in u.iter().enumerate() {
        cumsum += uk;
        let t = (cumsum - 1.0) / (k + 1) as f64;
        if uk - t > 0.0 {
            rho = k + 1;
            theta = t;
        }
    }
    if rho == 0 {
        // all mass on the largest coordinate (degenerate input)
        let argmax = v
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .map(|(k, _)| k)
            .unwrap();
        let mut out = vec![0.0; n];
        out[argmax] = 1.0;
        return out;
    }
    v.iter().map(|&vi| (vi - theta).max(0.0)).collect()
}

/// Projection onto `Δ ∩ {x ≤ b}`: coordinates are `clamp(v_i - θ, 0, b)` with
/// the threshold θ found by bisection on the monotone sum.
pub fn project_simplex_box(v: &[f64], b: f64) -> Result<Vec<f64>, EngineError> {
    let n = v.len();
    if !(b > 0.0) {
        return Err(EngineError::BadBound { b });
    }
    if (n as f64) * b < 1.0 - 1e-12 {
        return Err(EngineError::InfeasibleBox { n, b });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let sum_at = |theta: f64| -> f64 { v.iter().map(|&vi| (vi - theta).clamp(0.0, b)).sum() };
    let mut lo = v.iter().cloned().fold(f64::INFINITY, f64::min) - b - 1.0;
    let mut hi = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    // sum_at(lo) = n*b >= 1, sum_at(hi) = 0
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if sum_at(mid) >= 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let theta = 0.5 * (lo + hi);
    let mut out: Vec<f64> = v.iter().map(|&vi| (vi - theta).clamp(0.0, b)).collect();
    // absorb the residual rounding into an uncapped positive coordinate
    let sum: f64 = out.iter().sum();
    let resid = 1.0 - sum;
    if resid != 0.0 {
        if let Some(k) = (0..n).find(|&k| out[k] + resid > 0.0 && out[k] + resid < b) {
            out[k] += resid;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_examples() {
        assert_eq!(project_simplex(&[2.0, 0.0, 0.0]), vec![1.0, 0.0, 0.0]);
        let p = project_simplex(&[0.5, 0.5, 0.5]);
        for v in &p {
            assert!((v - 1.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn box_example() {
        // clip the first coordinate at b, distribute the rest uniformly
        let p = project_simplex_box(&[1.0, 0.0, 0.0, 0.0], 0.5).unwrap();
        assert!((p[0] - 0.5).abs() < 1e-12);
        for k in 1..4 {
            assert!((p[k] - 1.0 / 6.0).abs() < 1e-12, "{p:?}");
        }
    }

    #[test]
    fn infeasible_box() {
        assert!(matches!(
            project_simplex_box(&[0.3, 0.3, 0.2, 0.2], 0.2),
            Err(EngineError::InfeasibleBox { .. })
        ));
    }

    #[test]
    fn box_inactive_matches_plain_projection() {
        let v = [0.9, -0.3, 0.25, 0.4];
        let a = project_simplex(&v);
        let c = project_simplex_box(&v, 1.0).unwrap();
        for (x, y) in a.iter().zip(&c) {
            assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn exact_capacity_forces_uniform_cap() {
        let p = project_simplex_box(&[0.9, 0.1, 0.0, 0.0], 0.25).unwrap();
        for v in &p {
            assert!((v - 0.25).abs() < 1e-9, "{p:?}");
        }
    }
}
