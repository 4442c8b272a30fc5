use super::{require_interior, Metric};
use crate::body::ConvexBody;
use crate::error::{GeomError, Result};
use crate::Pt;

const INV_PHI: f64 = 0.618_033_988_749_894_9;
// boundary samples for the coarse scan
const SEEDS: usize = 64;
// edges (or triangles) refined after the scan
const REFINE: usize = 4;

/// Minimize a unimodal function on [0, 1]; returns (argmin, min).
pub(crate) fn golden_min(f: impl Fn(f64) -> f64, tol: f64) -> (f64, f64) {
    let (mut a, mut b) = (0.0, 1.0);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let (f0, f1) = (f(0.0), f(1.0));
    let mut best = if fc <= fd { (c, fc) } else { (d, fd) };
    if f0 < best.1 {
        best = (0.0, f0);
    }
    if f1 < best.1 {
        best = (1.0, f1);
    }
    best
}

/// `inf_{g in G} dist(z, g)`, 0 when `z` is in `G`.
///
/// The function `g -> dist(z, g)` has convex sublevel sets, so it is unimodal
/// along each boundary edge. 2D: coarse scan over boundary seeds, then
/// golden-section on the best edges. 3D: same over boundary triangles with a
/// nested golden-section. `tol` bounds the parameter bracket relative to the
/// piece size.
pub fn distance_to_set(metric: Metric, z: &Pt, g: &ConvexBody, tol: f64) -> Result<f64> {
    metric.validate()?;
    let amb = metric.body();
    if g.dim() != amb.dim() {
        return Err(GeomError::DimensionMismatch {
            expected: amb.dim(),
            got: g.dim(),
        });
    }
    if let Metric::Hilbert(k) = metric {
        require_interior(k, z)?;
        if g.vertices().iter().any(|v| k.max_excess(v) >= 0.0) {
            return Err(GeomError::BodyNotInterior);
        }
    } else {
        super::check_point(amb, z)?;
    }
    Ok(distance_to_set_unchecked(metric, z, g, tol))
}

pub(crate) fn distance_to_set_unchecked(metric: Metric, z: &Pt, g: &ConvexBody, tol: f64) -> f64 {
    if g.contains(z) {
        return 0.0;
    }
    let f = |p: &Pt| metric.dist(z, p);
    let ptol = (tol * 1e-3).clamp(1e-14, 1e-6);
    match g.dim() {
        1 => g.vertices().iter().map(f).fold(f64::INFINITY, f64::min),
        2 => {
            let edges = g.edges();
            let per_edge = (SEEDS / edges.len()).max(1);
            let mut scores: Vec<(f64, usize)> = edges
                .iter()
                .enumerate()
                .map(|(i, (a, b))| {
                    let m = (0..=per_edge)
                        .map(|k| f(&(a + (b - a) * (k as f64 / per_edge as f64))))
                        .fold(f64::INFINITY, f64::min);
                    (m, i)
                })
                .collect();
            scores.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
            scores
                .iter()
                .take(REFINE)
                .map(|&(m, i)| {
                    let (a, b) = edges[i];
                    golden_min(|s| f(&(a + (b - a) * s)), ptol).1.min(m)
                })
                .fold(f64::INFINITY, f64::min)
        }
        _ => {
            let tris = g.boundary_triangles();
            let mut scores: Vec<(f64, usize)> = tris
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let c = (t[0] + t[1] + t[2]) / 3.0;
                    let m = [
                        t[0],
                        t[1],
                        t[2],
                        c,
                        (t[0] + t[1]) / 2.0,
                        (t[1] + t[2]) / 2.0,
                        (t[2] + t[0]) / 2.0,
                    ]
                    .iter()
                    .map(f)
                    .fold(f64::INFINITY, f64::min);
                    (m, i)
                })
                .collect();
            scores.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
            let ptol3 = ptol.max(1e-9);
            scores
                .iter()
                .take(REFINE)
                .map(|&(m, i)| {
                    let [v0, v1, v2] = tris[i];
                    // segment from v0 to a point on the opposite edge
                    let outer = |w: f64| {
                        let q = v1 + (v2 - v1) * w;
                        golden_min(|s| f(&(v0 + (q - v0) * s)), ptol3).1
                    };
                    golden_min(outer, ptol3).1.min(m)
                })
                .fold(f64::INFINITY, f64::min)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::generate;

    fn p1(t: f64) -> Pt {
        Pt::new(t, 0.0, 0.0)
    }

    #[test]
    fn inside_is_zero() {
        let k = generate("cube", 2).unwrap();
        let g = k.scale_by(0.5).unwrap();
        assert_eq!(
            distance_to_set(Metric::Hilbert(&k), &Pt::zeros(), &g, 1e-6).unwrap(),
            0.0
        );
    }

    #[test]
    fn one_dimensional_expansion_value() {
        let k = ConvexBody::interval(-1.0, 1.0).unwrap();
        let a = 0.4f64;
        let g = ConvexBody::interval(-(a / 2.0).tanh(), (a / 2.0).tanh()).unwrap();
        let z = p1((1.5 * a).tanh());
        let d = distance_to_set(Metric::Hilbert(&k), &z, &g, 1e-6).unwrap();
        assert!((d - a).abs() < 1e-12);
    }

    #[test]
    fn not_below_sampled_boundary() {
        let k = generate("random_hull:12,seed=21", 2).unwrap();
        let g = generate("random_hull:7,seed=22", 2).unwrap().scale_by(0.3).unwrap();
        let z = Pt::new(0.35, -0.1, 0.0);
        let m = Metric::Hilbert(&k);
        if !k.contains_interior(&z, 1e-6) {
            return;
        }
        let d = distance_to_set(m, &z, &g, 1e-6).unwrap();
        for (a, b) in g.edges() {
            for i in 0..=200 {
                let p = a + (b - a) * (i as f64 / 200.0);
                assert!(d <= m.dist(&z, &p) + 1e-12);
            }
        }
    }

    #[test]
    fn minkowski_square_distance() {
        let d = generate("cube", 2).unwrap();
        let g = generate("cube", 2).unwrap();
        let z = Pt::new(3.0, 2.5, 0.0);
        // max-norm distance to [-1,1]^2
        let v = distance_to_set(Metric::Minkowski(&d), &z, &g, 1e-9).unwrap();
        assert!((v - 2.0).abs() < 1e-9);
    }

    #[test]
    fn three_dimensional_cube() {
        let d = generate("cube", 3).unwrap();
        let g = generate("cube", 3).unwrap();
        let z = Pt::new(0.2, 2.5, -1.5);
        let v = distance_to_set(Metric::Minkowski(&d), &z, &g, 1e-9).unwrap();
        assert!((v - 1.5).abs() < 1e-6);
    }

    #[test]
    fn golden_on_parabola() {
        let (x, fx) = golden_min(|s| (s - 0.3) * (s - 0.3), 1e-10);
        assert!((x - 0.3).abs() < 1e-9 && fx < 1e-18);
    }
}
