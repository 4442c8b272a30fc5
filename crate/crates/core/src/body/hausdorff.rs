use super::ConvexBody;
use crate::error::{GeomError, Result};
use crate::Pt;

fn point_segment(p: &Pt, a: &Pt, b: &Pt) -> f64 {
    let ab = b - a;
    let l2 = ab.norm_squared();
    let t = if l2 > 0.0 {
        ((p - a).dot(&ab) / l2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    (p - (a + ab * t)).norm()
}

/// Euclidean distance from `p` to the body (0 inside).
pub fn point_body_distance(p: &Pt, k: &ConvexBody) -> f64 {
    if k.max_excess(p) <= 0.0 {
        return 0.0;
    }
    match k.dim() {
        1 => {
            let (lo, hi) = (k.vertices()[0].x, k.vertices()[1].x);
            (lo - p.x).max(p.x - hi).max(0.0)
        }
        2 => k
            .edges()
            .iter()
            .map(|(a, b)| point_segment(p, a, b))
            .fold(f64::INFINITY, f64::min),
        _ => {
            let mut best = f64::INFINITY;
            for (i, h) in k.facets().iter().enumerate() {
                let poly = k.facet_polygon(i);
                let q = p - h.normal * h.excess(p);
                // inside the facet polygon iff left of every loop edge
                let inside = (0..poly.len()).all(|j| {
                    let a = poly[j];
                    let b = poly[(j + 1) % poly.len()];
                    (b - a).cross(&(q - a)).dot(&h.normal) >= -1e-15
                });
                let d = if inside {
                    h.excess(p).abs()
                } else {
                    (0..poly.len())
                        .map(|j| point_segment(p, &poly[j], &poly[(j + 1) % poly.len()]))
                        .fold(f64::INFINITY, f64::min)
                };
                best = best.min(d);
            }
            best
        }
    }
}

/// Exact Hausdorff distance between two polytopes of equal dimension.
/// The distance to a convex set is convex, so the maximum over a polytope is
/// attained at a vertex.
pub fn hausdorff_distance(a: &ConvexBody, b: &ConvexBody) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(GeomError::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    let ab = a
        .vertices()
        .iter()
        .map(|v| point_body_distance(v, b))
        .fold(0.0, f64::max);
    let ba = b
        .vertices()
        .iter()
        .map(|v| point_body_distance(v, a))
        .fold(0.0, f64::max);
    Ok(ab.max(ba))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::generate;

    #[test]
    fn distance_to_square_and_cube() {
        let sq = generate("cube", 2).unwrap();
        assert_eq!(point_body_distance(&Pt::new(3.0, 0.0, 0.0), &sq), 2.0);
        assert!((point_body_distance(&Pt::new(2.0, 2.0, 0.0), &sq) - 2f64.sqrt()).abs() < 1e-15);
        let cube = generate("cube", 3).unwrap();
        assert!((point_body_distance(&Pt::new(0.5, 0.2, 3.0), &cube) - 2.0).abs() < 1e-15);
        assert!((point_body_distance(&Pt::new(2.0, 2.0, 2.0), &cube) - 3f64.sqrt()).abs() < 1e-14);
        let big = sq.scale_by(1.5).unwrap();
        assert!((hausdorff_distance(&sq, &big).unwrap() - 0.5 * 2f64.sqrt()).abs() < 1e-14);
    }
}
