use super::{chord_extents, hilbert_ball, require_interior};
use crate::body::ConvexBody;
use crate::config::R_PLUS;
use crate::error::{GeomError, Result};
use crate::Pt;
use serde::{Deserialize, Serialize};

/// Per-direction ratios between a Hilbert ball and Macbeath regions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SandwichEstimate {
    /// Largest s with `M(x, s r)` inside the ball (on the fan).
    pub sigma_hat: f64,
    /// Smallest s with the ball inside `M(x, s r)` (on the fan).
    pub tau_hat: f64,
}

/// Radial comparison of `B_H(x, r)` against `M_K(x, s r)`. The Macbeath
/// region `M_K(x, 1) - x` has radial value `min(t+, t-)`.
pub fn sandwich_estimate(k: &ConvexBody, x: &Pt, r: f64, n_dir: usize) -> Result<SandwichEstimate> {
    require_interior(k, x)?;
    if !(r > 0.0) || r > R_PLUS {
        return Err(GeomError::RadiusOutOfRange { radius: r, max: R_PLUS });
    }
    let ball = hilbert_ball(k, x, r, n_dir)?;
    let mut sigma = f64::INFINITY;
    let mut tau: f64 = 0.0;
    for (u, rho) in ball.directions.iter().zip(&ball.radii) {
        let (tp, tm) = chord_extents(k, x, u);
        let ratio = rho / (r * tp.min(tm));
        sigma = sigma.min(ratio);
        tau = tau.max(ratio);
    }
    Ok(SandwichEstimate {
        sigma_hat: sigma,
        tau_hat: tau,
    })
}

/// (min, max) over the fan of `r_H(u) / r_A(u)`, where `r_H` is the Hilbert
/// Finsler radius and `r_A = min(t+, t-)` the Macbeath radius. The inclusion
/// `A(x) ⊆ B_H(x) ⊆ 2A(x)` holds iff both lie in [1, 2].
pub fn finsler_sandwich_ratios(k: &ConvexBody, x: &Pt, n_dir: usize) -> Result<(f64, f64)> {
    let ball = super::hilbert_finsler_ball(k, x, n_dir)?;
    let mut lo = f64::INFINITY;
    let mut hi: f64 = 0.0;
    for (u, rho) in ball.directions.iter().zip(&ball.radii) {
        let (tp, tm) = chord_extents(k, x, u);
        let q = rho / tp.min(tm);
        lo = lo.min(q);
        hi = hi.max(q);
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::generate;

    #[test]
    fn interval_ratio_is_tanh_over_r() {
        let k = ConvexBody::interval(-1.0, 1.0).unwrap();
        for &r in &[0.1, 1.0, 3.0] {
            let s = sandwich_estimate(&k, &Pt::zeros(), r, 2).unwrap();
            assert!((s.sigma_hat - r.tanh() / r).abs() < 1e-11);
            assert!((s.tau_hat - r.tanh() / r).abs() < 1e-11);
        }
    }

    #[test]
    fn small_radius_limit() {
        let k = generate("cube", 2).unwrap();
        let s = sandwich_estimate(&k, &Pt::zeros(), 1e-3, 64).unwrap();
        assert!((s.sigma_hat - 1.0).abs() < 1e-3 && (s.tau_hat - 1.0).abs() < 1e-3);
    }

    #[test]
    fn random_bodies_ordered() {
        for seed in 0..5 {
            let k = generate(&format!("random_hull:10,{seed}"), 2).unwrap();
            for &r in &[0.2, 1.0, 8.0] {
                let s = sandwich_estimate(&k, &Pt::zeros(), r, 128).unwrap();
                assert!(s.sigma_hat > 0.0);
                assert!(s.sigma_hat <= s.tau_hat);
                // t+ = t- somewhere, where the ratio is tanh(r)/r; the fan
                // only samples near that direction
                assert!(s.sigma_hat <= r.tanh() / r * 1.05);
            }
            let (lo, hi) = finsler_sandwich_ratios(&k, &Pt::zeros(), 128).unwrap();
            assert!(lo >= 1.0 - 1e-12 && hi <= 2.0 + 1e-12);
        }
    }

    #[test]
    fn radius_range() {
        let k = generate("cube", 2).unwrap();
        assert!(sandwich_estimate(&k, &Pt::zeros(), 0.0, 8).is_err());
        assert!(sandwich_estimate(&k, &Pt::zeros(), 8.5, 8).is_err());
    }
}
