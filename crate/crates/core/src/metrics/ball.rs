use super::{chord_extents, hilbert_unchecked, require_interior};
use crate::body::ConvexBody;
use crate::config::R_PLUS;
use crate::error::{GeomError, Result};
use crate::Pt;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeometryTag {
    Funk,
    Hilbert,
    Minkowski,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum BallKind {
    /// Unit ball of the local norm (tangent vectors of length <= 1).
    Finsler,
    /// Metric ball of the given radius.
    Metric(f64),
}

/// Star-shaped ball given by radial values over a direction fan. Directions
/// come in antipodal pairs: `directions[i + n/2] = -directions[i]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FinslerBall {
    pub dim: usize,
    pub center: Pt,
    pub directions: Vec<Pt>,
    pub radii: Vec<f64>,
    pub geometry: GeometryTag,
    pub kind: BallKind,
}

impl FinslerBall {
    /// Boundary points `center + r(u) u`.
    pub fn points(&self) -> Vec<Pt> {
        self.directions
            .iter()
            .zip(&self.radii)
            .map(|(u, r)| self.center + u * *r)
            .collect()
    }

    /// Polytope through the radial points.
    pub fn to_body(&self) -> Result<ConvexBody> {
        ConvexBody::from_points(self.dim, &self.points())
    }

    /// Index of the direction opposite to `i`.
    pub fn opposite(&self, i: usize) -> usize {
        let h = self.directions.len() / 2;
        (i + h) % self.directions.len()
    }

    /// Largest |r(u) - r(-u)| over antipodal pairs.
    pub fn symmetry_defect(&self) -> f64 {
        (0..self.radii.len() / 2)
            .map(|i| (self.radii[i] - self.radii[self.opposite(i)]).abs())
            .fold(0.0, f64::max)
    }

    /// Largest distance from a radial point to the hull's boundary when the
    /// point lies strictly inside the hull (0 means every point is extreme or
    /// on the boundary).
    pub fn convexity_defect(&self) -> f64 {
        let Ok(hull) = self.to_body() else {
            return f64::INFINITY;
        };
        self.points()
            .iter()
            .map(|p| (-hull.max_excess(p)).max(0.0))
            .fold(0.0, f64::max)
    }
}

/// Direction fan: 1D `{+1, -1}`; 2D `n` equally spaced angles (n rounded up to
/// even); 3D `n/2` Fibonacci-sphere points and their negatives.
pub fn direction_fan(dim: usize, n_dir: usize) -> Vec<Pt> {
    match dim {
        1 => vec![Pt::new(1.0, 0.0, 0.0), Pt::new(-1.0, 0.0, 0.0)],
        2 => {
            let n = (n_dir.max(4) + 1) / 2 * 2;
            (0..n)
                .map(|k| {
                    let t = 2.0 * PI * k as f64 / n as f64;
                    Pt::new(t.cos(), t.sin(), 0.0)
                })
                .collect()
        }
        _ => {
            let h = (n_dir.max(8) + 1) / 2;
            let golden = PI * (3.0 - 5f64.sqrt());
            let half: Vec<Pt> = (0..h)
                .map(|k| {
                    let z = 1.0 - (2.0 * k as f64 + 1.0) / (2.0 * h as f64) * 2.0;
                    let r = (1.0 - z * z).sqrt();
                    let t = golden * k as f64;
                    Pt::new(r * t.cos(), r * t.sin(), z)
                })
                .collect();
            let mut all = half.clone();
            all.extend(half.iter().map(|u| -u));
            all
        }
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(r >= 0.0) || r > R_PLUS {
        return Err(GeomError::RadiusOutOfRange { radius: r, max: R_PLUS });
    }
    Ok(())
}

/// Hilbert metric ball of radius `r`; per direction the radius solves
/// `d_H(x, x + t u) = r` by bisection.
pub fn hilbert_ball(k: &ConvexBody, x: &Pt, r: f64, n_dir: usize) -> Result<FinslerBall> {
    require_interior(k, x)?;
    check_radius(r)?;
    let directions = direction_fan(k.dim(), n_dir);
    let radii = directions
        .iter()
        .map(|u| {
            if r == 0.0 {
                return 0.0;
            }
            let chord = k.ray_exit(x, u);
            let (mut lo, mut hi) = (0.0, chord);
            let stop = 1e-12 * (chord + k.ray_exit(x, &(-u)));
            for _ in 0..60 {
                if hi - lo < stop {
                    break;
                }
                let mid = 0.5 * (lo + hi);
                if hilbert_unchecked(k, x, &(x + u * mid)) < r {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect();
    Ok(FinslerBall {
        dim: k.dim(),
        center: *x,
        directions,
        radii,
        geometry: GeometryTag::Hilbert,
        kind: BallKind::Metric(r),
    })
}

/// Closed-form radial value of a Hilbert ball: with boundary distances `tp`
/// along `u` and `tm` along `-u`, `t = tp tm (e^{2r} - 1) / (tp + tm e^{2r})`.
pub fn hilbert_ball_closed_form(tp: f64, tm: f64, r: f64) -> f64 {
    let e = (2.0 * r).exp();
    tp * tm * (e - 1.0) / (tp + tm * e)
}

/// Unit ball of the Hilbert Finsler norm at `x`: radial value is the harmonic
/// mean of the boundary distances along `u` and `-u`.
pub fn hilbert_finsler_ball(k: &ConvexBody, x: &Pt, n_dir: usize) -> Result<FinslerBall> {
    require_interior(k, x)?;
    let directions = direction_fan(k.dim(), n_dir);
    let radii = directions
        .iter()
        .map(|u| {
            let (tp, tm) = chord_extents(k, x, u);
            2.0 * tp * tm / (tp + tm)
        })
        .collect();
    Ok(FinslerBall {
        dim: k.dim(),
        center: *x,
        directions,
        radii,
        geometry: GeometryTag::Hilbert,
        kind: BallKind::Finsler,
    })
}

/// Unit ball of the Funk Finsler norm at `x`, which is `K - x`.
pub fn funk_finsler_ball(k: &ConvexBody, x: &Pt, n_dir: usize) -> Result<FinslerBall> {
    require_interior(k, x)?;
    let directions = direction_fan(k.dim(), n_dir);
    let radii = directions.iter().map(|u| k.ray_exit(x, u)).collect();
    Ok(FinslerBall {
        dim: k.dim(),
        center: *x,
        directions,
        radii,
        geometry: GeometryTag::Funk,
        kind: BallKind::Finsler,
    })
}

/// Minkowski ball `z + r D` sampled radially.
pub fn minkowski_ball(d: &ConvexBody, z: &Pt, r: f64, n_dir: usize) -> Result<FinslerBall> {
    if !d.contains_origin_interior() {
        return Err(GeomError::OriginNotInterior);
    }
    if !(r >= 0.0) {
        return Err(GeomError::RadiusOutOfRange {
            radius: r,
            max: f64::INFINITY,
        });
    }
    let directions = direction_fan(d.dim(), n_dir);
    let radii = directions.iter().map(|u| r / d.gauge_unchecked(u)).collect();
    Ok(FinslerBall {
        dim: d.dim(),
        center: *z,
        directions,
        radii,
        geometry: GeometryTag::Minkowski,
        kind: BallKind::Metric(r),
    })
}
