//! Lebesgue, Holmes-Thompson and Busemann measures in Minkowski, Funk and
//! Hilbert geometries.
//!
//! Minkowski and Busemann measures are exact closed forms. Funk and Hilbert
//! volumes are Monte Carlo (or quadrature) integrals of the exact local
//! density; boundary areas use Gauss-Legendre quadrature per edge in 2D and a
//! triangle rule per facet in 3D.

mod finsler;
mod growth;
mod minkowski;
pub mod quadrature;
pub mod sampling;

pub use finsler::{
    area_density, ht_area_finsler, ht_volume_finsler, ht_volume_finsler_quadrature, polygon_area_finsler,
    segment_area_finsler, volume_density, Finsler,
};
pub use growth::{ball_growth_profile, loglog_slope, GrowthGeometry, GrowthProfile, GrowthRow};
pub use minkowski::{
    area_density_minkowski, busemann_area, busemann_volume, ht_area_minkowski, ht_area_minkowski_cauchy,
    ht_volume_minkowski, volume_product,
};

use crate::metrics::GeometryTag;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Volume of the Euclidean unit ball in dimension `d` (d <= 3).
pub fn omega(d: usize) -> f64 {
    match d {
        0 => 1.0,
        1 => 2.0,
        2 => PI,
        3 => 4.0 * PI / 3.0,
        _ => PI.powf(d as f64 / 2.0) / gamma_half(d + 2),
    }
}

// Gamma(k / 2)
fn gamma_half(k: usize) -> f64 {
    match k {
        1 => PI.sqrt(),
        2 => 1.0,
        _ => (k as f64 / 2.0 - 1.0) * gamma_half(k - 2),
    }
}

/// `binom(2k, k) / 2^k`.
pub fn beta(k: usize) -> f64 {
    let mut c = 1.0;
    for i in 0..k {
        c = c * (2 * k - i) as f64 / (i + 1) as f64;
    }
    c / 2f64.powi(k as i32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Quadrature,
    MonteCarlo,
}

/// Normalization of Finsler measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    HolmesThompson,
    Busemann,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureEstimate {
    pub value: f64,
    /// 0 for exact and quadrature results.
    pub std_error: f64,
    pub n_samples: usize,
    pub method: Method,
    pub geometry: GeometryTag,
    pub seed: Option<u64>,
}

impl MeasureEstimate {
    pub fn exact(value: f64, geometry: GeometryTag) -> Self {
        MeasureEstimate {
            value,
            std_error: 0.0,
            n_samples: 0,
            method: Method::Exact,
            geometry,
            seed: None,
        }
    }

    pub fn quadrature(value: f64, n_nodes: usize, geometry: GeometryTag) -> Self {
        MeasureEstimate {
            value,
            std_error: 0.0,
            n_samples: n_nodes,
            method: Method::Quadrature,
            geometry,
            seed: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_ball_volumes_and_beta() {
        assert_eq!(omega(1), 2.0);
        assert!((omega(3) - 4.0 * PI / 3.0).abs() < 1e-15);
        assert!((omega(4) - PI * PI / 2.0).abs() < 1e-14);
        assert_eq!(beta(1), 1.0);
        assert_eq!(beta(2), 1.5);
        assert_eq!(beta(3), 2.5);
    }

    #[test]
    fn estimate_serializes_with_method() {
        let m = MeasureEstimate::exact(1.5, GeometryTag::Minkowski);
        let s = serde_json::to_string(&m).unwrap();
        assert!(s.contains("\"method\":\"exact\"") && s.contains("\"std_error\":0.0"));
    }
}
