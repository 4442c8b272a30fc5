//! Funk, Hilbert and Minkowski distances.

mod ball;
mod projective;
mod sandwich;
mod set_distance;

pub use ball::{
    direction_fan, funk_finsler_ball, hilbert_ball, hilbert_ball_closed_form, hilbert_finsler_ball, minkowski_ball,
    BallKind, FinslerBall, GeometryTag,
};
pub use projective::{projective_polar_map, ProjectiveMap};
pub use sandwich::{finsler_sandwich_ratios, sandwich_estimate, SandwichEstimate};
pub use set_distance::distance_to_set;
pub(crate) use set_distance::distance_to_set_unchecked;

use crate::body::ConvexBody;
use crate::config::EPS_INTERIOR;
use crate::error::{GeomError, Result};
use crate::Pt;

/// Metric choice for set distances, nets and coverings.
#[derive(Debug, Clone, Copy)]
pub enum Metric<'a> {
    /// Hilbert metric of the ambient body.
    Hilbert(&'a ConvexBody),
    /// Gauge distance `d(x, y) = ||y - x||_D`; `D` must contain the origin in its interior.
    Minkowski(&'a ConvexBody),
}

impl<'a> Metric<'a> {
    pub fn body(&self) -> &'a ConvexBody {
        match self {
            Metric::Hilbert(k) | Metric::Minkowski(k) => k,
        }
    }

    pub fn dim(&self) -> usize {
        self.body().dim()
    }

    pub fn tag(&self) -> GeometryTag {
        match self {
            Metric::Hilbert(_) => GeometryTag::Hilbert,
            Metric::Minkowski(_) => GeometryTag::Minkowski,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Metric::Minkowski(d) = self {
            if !d.contains_origin_interior() {
                return Err(GeomError::OriginNotInterior);
            }
        }
        Ok(())
    }

    /// Distance without interiority checks.
    #[inline]
    pub fn dist(&self, x: &Pt, y: &Pt) -> f64 {
        match self {
            Metric::Hilbert(k) => hilbert_unchecked(k, x, y),
            Metric::Minkowski(d) => d.gauge_unchecked(&(y - x)),
        }
    }

    /// Checked distance.
    pub fn distance(&self, x: &Pt, y: &Pt) -> Result<f64> {
        match self {
            Metric::Hilbert(k) => hilbert_distance(k, x, y),
            Metric::Minkowski(d) => minkowski_distance(d, x, y),
        }
    }

    /// Euclidean radius `rho` such that `|x - y| >= rho` implies `dist(x, y) >= alpha`.
    pub fn euclid_radius_for(&self, alpha: f64) -> f64 {
        match self {
            // d_H(x, y) >= ln(1 + 2|x - y| / diam K)
            Metric::Hilbert(k) => 0.5 * k.diameter() * (alpha.exp() - 1.0),
            Metric::Minkowski(d) => alpha * d.circumradius(),
        }
    }
}

pub(crate) fn check_point(k: &ConvexBody, x: &Pt) -> Result<()> {
    if (k.dim()..3).any(|i| x[i] != 0.0) {
        return Err(GeomError::DimensionMismatch {
            expected: k.dim(),
            got: 3,
        });
    }
    Ok(())
}

/// Interior test used by every metric: clearance above `EPS_INTERIOR`.
pub(crate) fn require_interior(k: &ConvexBody, x: &Pt) -> Result<()> {
    check_point(k, x)?;
    if k.max_excess(x) >= -EPS_INTERIOR {
        return Err(GeomError::PointNotInterior);
    }
    Ok(())
}

#[inline]
pub(crate) fn funk_unchecked(k: &ConvexBody, x: &Pt, y: &Pt) -> f64 {
    let d = y - x;
    if d.norm_squared() == 0.0 {
        return 0.0;
    }
    let t = k.ray_exit(x, &d);
    // ln(t / (t - 1)) computed stably for large t
    (1.0 / (t - 1.0)).ln_1p()
}

#[inline]
pub(crate) fn hilbert_unchecked(k: &ConvexBody, x: &Pt, y: &Pt) -> f64 {
    0.5 * (funk_unchecked(k, x, y) + funk_unchecked(k, y, x))
}

/// Forward Funk distance `ln(|x - y'| / |y - y'|)`, `y'` the exit of the ray from x through y.
pub fn funk_distance(k: &ConvexBody, x: &Pt, y: &Pt) -> Result<f64> {
    require_interior(k, x)?;
    require_interior(k, y)?;
    Ok(funk_unchecked(k, x, y))
}

/// Funk distance via `sup_{z in K°} (1 - <z, x>) / (1 - <z, y>)`, the sup taken
/// over the vertices of the polar. Bodies without the origin inside are
/// shifted to their centroid first (the Funk distance is translation invariant).
pub fn funk_distance_variational(k: &ConvexBody, x: &Pt, y: &Pt) -> Result<f64> {
    require_interior(k, x)?;
    require_interior(k, y)?;
    let shift = if k.contains_origin_interior() {
        Pt::zeros()
    } else {
        k.centroid()
    };
    // vertices of (K - shift)°, one per facet
    let polar = k.polar_vertices_at(&shift);
    let (u, v) = (x - shift, y - shift);
    let best = polar
        .iter()
        .map(|z| (1.0 - z.dot(&u)) / (1.0 - z.dot(&v)))
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(best.ln())
}

/// Hilbert distance, the mean of forward and reverse Funk distances.
pub fn hilbert_distance(k: &ConvexBody, x: &Pt, y: &Pt) -> Result<f64> {
    require_interior(k, x)?;
    require_interior(k, y)?;
    Ok(hilbert_unchecked(k, x, y))
}

/// Gauge distance `||y - x||_D`.
pub fn minkowski_distance(d: &ConvexBody, x: &Pt, y: &Pt) -> Result<f64> {
    check_point(d, x)?;
    check_point(d, y)?;
    d.gauge(&(y - x))
}

/// Distances from `x` to the boundary along `u` and `-u`.
#[inline]
pub(crate) fn chord_extents(k: &ConvexBody, x: &Pt, u: &Pt) -> (f64, f64) {
    (k.ray_exit(x, u), k.ray_exit(x, &(-u)))
}
