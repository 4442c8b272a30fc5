use crate::body::ConvexBody;
use crate::config::EPS_INTERIOR;
use crate::error::{GeomError, Result};
use crate::metrics::{direction_fan, distance_to_set_unchecked, hilbert_unchecked as hilbert_dist, Metric};
use crate::Pt;
use rayon::prelude::*;

/// `C + αD`.
pub fn expand_minkowski(c: &ConvexBody, d: &ConvexBody, alpha: f64) -> Result<ConvexBody> {
    if !d.contains_origin_interior() {
        return Err(GeomError::OriginNotInterior);
    }
    if !d.centrally_symmetric() {
        return Err(GeomError::NotCentrallySymmetric);
    }
    if !(alpha >= 0.0) {
        return Err(GeomError::RadiusOutOfRange {
            radius: alpha,
            max: f64::INFINITY,
        });
    }
    if alpha == 0.0 {
        return Ok(c.clone());
    }
    c.minkowski_sum(&d.scale_by(alpha)?)
}

pub(crate) fn require_inside(k: &ConvexBody, g: &ConvexBody) -> Result<()> {
    if g.dim() != k.dim() {
        return Err(GeomError::DimensionMismatch {
            expected: k.dim(),
            got: g.dim(),
        });
    }
    if g.vertices().iter().any(|v| k.max_excess(v) >= -EPS_INTERIOR) {
        return Err(GeomError::BodyNotInterior);
    }
    Ok(())
}

pub(crate) fn require_hilbert_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(GeomError::RadiusOutOfRange {
            radius: alpha,
            max: 1.0,
        });
    }
    Ok(())
}

/// Largest `t` in `[lo, hi]` with `f(t) <= level`, for increasing `f`.
fn bisect_level(f: impl Fn(f64) -> f64, level: f64, mut lo: f64, mut hi: f64, rel_tol: f64) -> f64 {
    let scale = hi.abs().max(1e-300);
    for _ in 0..200 {
        if hi - lo <= rel_tol * scale {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f(mid) <= level {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Hilbert α-expansion `{x : d_H(x, G) <= α}`, built radially from the
/// centroid of `G`: along each fan direction the level `d_H(·, G) = α` is
/// bracketed between `∂G` and `∂K` and bisected.
pub fn expand_hilbert(k: &ConvexBody, g: &ConvexBody, alpha: f64, n_dir: usize, tol: f64) -> Result<ConvexBody> {
    require_inside(k, g)?;
    require_hilbert_alpha(alpha)?;
    let metric = Metric::Hilbert(k);
    if k.dim() == 1 {
        let (g0, g1) = (g.vertices()[0], g.vertices()[1]);
        let (k0, k1) = (k.vertices()[0].x, k.vertices()[1].x);
        let right = bisect_level(|t| hilbert_dist(k, &g1, &Pt::new(t, 0.0, 0.0)), alpha, g1.x, k1, 1e-16);
        let left = -bisect_level(
            |t| hilbert_dist(k, &g0, &Pt::new(-t, 0.0, 0.0)),
            alpha,
            -g0.x,
            -k0,
            1e-16,
        );
        return ConvexBody::interval(left, right);
    }
    let anchor = g.centroid();
    // directions through the vertices of G keep G inside the radial polygon
    let mut dirs = direction_fan(k.dim(), n_dir);
    dirs.extend(g.vertices().iter().map(|v| (v - anchor).normalize()));
    let pts: Vec<Pt> = dirs
        .par_iter()
        .map(|u| {
            let tg = g.ray_exit(&anchor, u);
            let tk = k.ray_exit(&anchor, u);
            let f = |t: f64| distance_to_set_unchecked(metric, &(anchor + u * t), g, tol);
            anchor + u * bisect_level(f, alpha, tg, tk, tol.max(1e-15))
        })
        .collect();
    ConvexBody::from_points(k.dim(), &pts)
}
