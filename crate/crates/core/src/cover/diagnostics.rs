use super::chord::complementary_chord_2d;
use super::expand::{require_hilbert_alpha, require_inside};
use super::{boundary_inside, halfspaces};
use crate::body::{polygon_area_3d, ConvexBody, Halfspace};
use crate::config::Tolerances;
use crate::error::{GeomError, Result};
use crate::harness::CheckReport;
use crate::measures::{
    area_density_minkowski, busemann_area, ht_area_finsler, ht_area_minkowski, ht_volume_finsler_quadrature,
    polygon_area_finsler, segment_area_finsler, Finsler, Normalization,
};
use crate::metrics::{distance_to_set, hilbert_ball, Metric};
use crate::Pt;
use serde::{Deserialize, Serialize};
use serde_json::json;

// fan size for Hilbert balls in the diagnostics
const BALL_DIRS: usize = 96;

/// `n` points on `∂E` spaced by arc length, offset half a step from vertex 0.
fn boundary_probes(e: &ConvexBody, n: usize) -> Vec<(Pt, usize)> {
    match e.dim() {
        1 => vec![(e.vertices()[0], 0), (e.vertices()[1], 1)],
        2 => {
            let edges = e.edges();
            let lens: Vec<f64> = edges.iter().map(|(a, b)| (b - a).norm()).collect();
            let total: f64 = lens.iter().sum();
            let mut out = Vec::with_capacity(n);
            let (mut k, mut start) = (0, 0.0);
            for j in 0..n {
                let s = (j as f64 + 0.5) / n as f64 * total;
                while k + 1 < edges.len() && s > start + lens[k] {
                    start += lens[k];
                    k += 1;
                }
                let (a, b) = edges[k];
                out.push((a + (b - a) * ((s - start) / lens[k]).clamp(0.0, 1.0), k));
            }
            out
        }
        _ => (0..e.facets().len())
            .map(|i| {
                let p = e.facet_polygon(i);
                (p.iter().fold(Pt::zeros(), |a, q| a + q) / p.len() as f64, i)
            })
            .take(n.max(1))
            .collect(),
    }
}

/// For probes `x` on `∂G`, find `p` with `d(x, p) = alpha` and check that
/// `d(p, G) = alpha`, so `p` lies on `∂G₊`. Hilbert: `p` is on the
/// complementary chord through `x` for the edge line at `x`, on the side away
/// from `G`. Minkowski: `p = x + alpha w`, `w` the point of `∂D` with outward
/// normal matching `G`'s at `x`.
pub fn boundary_transfer_check(metric: Metric, g: &ConvexBody, alpha: f64, n_probes: usize) -> Result<CheckReport> {
    metric.validate()?;
    let tol = Tolerances::default().transfer;
    let dim = g.dim();
    if let Metric::Hilbert(k) = metric {
        require_inside(k, g)?;
        require_hilbert_alpha(alpha)?;
        if dim == 3 {
            return Err(GeomError::NotTwoDimensional);
        }
    } else if !metric.body().centrally_symmetric() {
        return Err(GeomError::NotCentrallySymmetric);
    }
    let mut worst: f64 = 0.0;
    let mut worst_chord: f64 = 0.0;
    let mut hits = 0usize;
    let probes = boundary_probes(g, n_probes);
    for &(x, i) in &probes {
        let n = g.facets()[i].normal;
        let p = match metric {
            Metric::Minkowski(d) => x + d.support_point(&n) * alpha,
            Metric::Hilbert(k) => {
                let far = if dim == 1 {
                    x + n * k.ray_exit(&x, &n)
                } else {
                    let h = Halfspace::new(n, n.dot(&x))?;
                    let ch = complementary_chord_2d(k, &x, &h)?;
                    worst_chord = worst_chord.max(ch.residual);
                    if n.dot(&(ch.a - x)) > 0.0 {
                        ch.a
                    } else {
                        ch.b
                    }
                };
                // d_H(x, ·) increases along [x, far)
                let (mut lo, mut hi) = (0.0, 1.0);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if metric.dist(&x, &(x + (far - x) * mid)) <= alpha {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                x + (far - x) * lo
            }
        };
        let dp = distance_to_set(metric, &p, g, 1e-10)?;
        let err = (dp - alpha).abs().max((metric.dist(&x, &p) - alpha).abs());
        worst = worst.max(err);
        if err <= tol {
            hits += 1;
        }
    }
    let pass = hits == probes.len() && worst_chord <= Tolerances::default().chord;
    Ok(CheckReport::new(
        "boundary_transfer",
        json!({"dim": dim, "alpha": alpha, "n_probes": probes.len(), "geometry": metric.tag()}),
        worst,
        tol,
        tol,
        pass,
    )
    .with_detail("hit_rate", hits as f64 / probes.len() as f64)
    .with_detail("max_chord_residual", worst_chord))
}

/// Local ball around `x` in the metric.
fn metric_ball(metric: Metric, x: &Pt, r: f64) -> Result<ConvexBody> {
    match metric {
        Metric::Hilbert(k) => hilbert_ball(k, x, r, BALL_DIRS)?.to_body(),
        Metric::Minkowski(d) => d.scale_by(r)?.translate(x),
    }
}

fn volume_in(metric: Metric, u: &ConvexBody) -> Result<f64> {
    Ok(match metric {
        Metric::Hilbert(k) => ht_volume_finsler_quadrature(Finsler::Hilbert(k), u, 1)?.value,
        // HT and Busemann volumes are multiples of Lebesgue measure
        Metric::Minkowski(_) => u.volume(),
    })
}

/// Relative fatness of `E`: for boundary probes `x` and radii `r <= alpha`,
/// the fraction of `vol(B(x, r))` inside `E`. Passes iff the minimum over
/// probes is at least `gamma`. The area of `∂E` inside the open ball, as a
/// fraction of the area of `∂B`, is reported alongside.
pub fn fatness_check(metric: Metric, e: &ConvexBody, alpha: f64, gamma: f64, n_probes: usize) -> Result<CheckReport> {
    metric.validate()?;
    if let Metric::Hilbert(k) = metric {
        require_inside(k, e)?;
    } else if !metric.body().centrally_symmetric() {
        return Err(GeomError::NotCentrallySymmetric);
    }
    if !(alpha > 0.0) {
        return Err(GeomError::RadiusOutOfRange {
            radius: alpha,
            max: f64::INFINITY,
        });
    }
    let mut probes: Vec<Pt> = e.vertices().to_vec();
    probes.extend(boundary_probes(e, n_probes).into_iter().map(|(p, _)| p));
    let (mut min_vol, mut min_area) = (f64::INFINITY, f64::INFINITY);
    for x in &probes {
        for r in [0.25 * alpha, 0.5 * alpha, alpha] {
            let ball = metric_ball(metric, x, r)?;
            let vb = volume_in(metric, &ball)?;
            let vi = match ball.intersect(e)? {
                Some(c) => volume_in(metric, &c)?,
                None => 0.0,
            };
            min_vol = min_vol.min(vi / vb);
            let open_ball = halfspaces(&ball, 1e-12);
            let (inner, whole) = match metric {
                Metric::Hilbert(k) => {
                    let geom = Finsler::Hilbert(k);
                    (
                        boundary_inside(
                            e,
                            &open_ball,
                            |a, b| segment_area_finsler(geom, a, b, 8),
                            |p, n| polygon_area_finsler(geom, p, n, 1),
                        ),
                        ht_area_finsler(geom, &ball, 8)?.value,
                    )
                }
                Metric::Minkowski(d) => {
                    let dens = |n: &Pt| area_density_minkowski(d, n, Normalization::HolmesThompson).unwrap_or(f64::NAN);
                    (
                        boundary_inside(
                            e,
                            &open_ball,
                            |a, b| {
                                let t = (b - a).normalize();
                                (b - a).norm() * dens(&Pt::new(t.y, -t.x, 0.0))
                            },
                            |p, n| polygon_area_3d(p, n) * dens(n),
                        ),
                        ht_area_minkowski(d, &ball)?.value,
                    )
                }
            };
            min_area = min_area.min(inner / whole);
        }
    }
    Ok(CheckReport::new(
        "expansion_fatness",
        json!({"dim": e.dim(), "alpha": alpha, "gamma": gamma, "n_probes": probes.len(), "geometry": metric.tag()}),
        min_vol,
        gamma,
        0.0,
        min_vol >= gamma,
    )
    .with_detail("min_area_fraction", min_area))
}

/// Ball for the relative isoperimetric sample.
#[derive(Debug, Clone, Copy)]
pub enum IsoBall<'a> {
    /// `center + r D`, `D` symmetric.
    Minkowski { d: &'a ConvexBody, center: Pt, r: f64 },
    /// Hilbert ball of `K`; the center must lie on `∂E`.
    Hilbert {
        k: &'a ConvexBody,
        center: Pt,
        r: f64,
        n_dir: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsoSample {
    /// Volume fraction of the ball inside `E`.
    pub mu: f64,
    /// Area of `∂E` inside the open ball over the area of `∂B`.
    pub beta: f64,
}

/// Volume fraction and relative boundary area of the cut `E` in a ball.
/// Minkowski balls use the chosen normalization; Hilbert balls use
/// Holmes-Thompson measures.
pub fn relative_isoperimetry_sample(ball: IsoBall, e: &ConvexBody, norm: Normalization) -> Result<IsoSample> {
    let (mu, beta) = match ball {
        IsoBall::Minkowski { d, center, r } => {
            if !d.centrally_symmetric() {
                return Err(GeomError::NotCentrallySymmetric);
            }
            let b = d.scale_by(r)?.translate(&center)?;
            let vi = b.intersect(e)?.map_or(0.0, |c| c.volume());
            let mu = vi / b.volume();
            let dens = |n: &Pt| area_density_minkowski(d, n, norm).unwrap_or(f64::NAN);
            let cut = boundary_inside(
                e,
                &halfspaces(&b, 1e-12),
                |a, q| {
                    let t = (q - a).normalize();
                    (q - a).norm() * dens(&Pt::new(t.y, -t.x, 0.0))
                },
                |p, n| polygon_area_3d(p, n) * dens(n),
            );
            let whole = match norm {
                Normalization::HolmesThompson => ht_area_minkowski(d, &b)?.value,
                Normalization::Busemann => busemann_area(d, &b)?.value,
            };
            (mu, cut / whole)
        }
        IsoBall::Hilbert { k, center, r, n_dir } => {
            require_hilbert_alpha(r)?;
            if e.max_excess(&center).abs() > 1e-9 {
                return Err(GeomError::ValidationError(
                    "ball center is not on the boundary of E".into(),
                ));
            }
            let geom = Finsler::Hilbert(k);
            let b = hilbert_ball(k, &center, r, n_dir)?.to_body()?;
            let vi = match b.intersect(e)? {
                Some(c) => ht_volume_finsler_quadrature(geom, &c, 1)?.value,
                None => 0.0,
            };
            let mu = vi / ht_volume_finsler_quadrature(geom, &b, 1)?.value;
            let cut = boundary_inside(
                e,
                &halfspaces(&b, 1e-12),
                |a, q| segment_area_finsler(geom, a, q, 8),
                |p, n| polygon_area_finsler(geom, p, n, 1),
            );
            (mu, cut / ht_area_finsler(geom, &b, 8)?.value)
        }
    };
    if !(mu > 1e-12 && mu < 1.0 - 1e-12) {
        return Err(GeomError::DegenerateCut(mu));
    }
    Ok(IsoSample { mu, beta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::generate;
    use crate::cover::{expand_hilbert, expand_minkowski};

    #[test]
    fn cube_halfspace_busemann() {
        for dim in [2usize, 3] {
            let d = generate("cube", dim).unwrap();
            let mut pts = Vec::new();
            for mask in 0..(1 << dim) {
                let mut p = Pt::zeros();
                p[0] = if mask & 1 == 0 { -3.0 } else { 0.0 };
                for j in 1..dim {
                    p[j] = if mask >> j & 1 == 0 { -3.0 } else { 3.0 };
                }
                pts.push(p);
            }
            let e = ConvexBody::from_points(dim, &pts).unwrap();
            let s = relative_isoperimetry_sample(
                IsoBall::Minkowski {
                    d: &d,
                    center: Pt::zeros(),
                    r: 1.0,
                },
                &e,
                Normalization::Busemann,
            )
            .unwrap();
            assert!((s.mu - 0.5).abs() < 1e-12);
            assert!((s.beta - 1.0 / (2.0 * dim as f64)).abs() < 1e-12, "{s:?}");
        }
    }

    #[test]
    fn containing_cut_is_degenerate() {
        let d = generate("cube", 2).unwrap();
        let e = d.scale_by(3.0).unwrap();
        let err = relative_isoperimetry_sample(
            IsoBall::Minkowski {
                d: &d,
                center: Pt::zeros(),
                r: 1.0,
            },
            &e,
            Normalization::HolmesThompson,
        )
        .unwrap_err();
        assert!(matches!(err, GeomError::DegenerateCut(_)));
    }

    #[test]
    fn minkowski_expansion_is_fat() {
        let d = generate("ngon:64", 2).unwrap();
        let c = generate("random_hull:8,seed=2", 2).unwrap();
        let e = expand_minkowski(&c, &d, 0.3).unwrap();
        let rep = fatness_check(Metric::Minkowski(&d), &e, 0.3, 0.25 - 0.02, 40).unwrap();
        assert!(rep.pass, "{rep:?}");
    }

    #[test]
    fn needle_is_not_fat() {
        let d = generate("ngon:64", 2).unwrap();
        let e = ConvexBody::from_coords(
            2,
            &[vec![-1.0, -0.01], vec![1.0, -0.01], vec![1.0, 0.01], vec![-1.0, 0.01]],
        )
        .unwrap();
        let rep = fatness_check(Metric::Minkowski(&d), &e, 0.2, 0.2, 40).unwrap();
        assert!(!rep.pass && rep.lhs < 0.2);
    }

    #[test]
    fn hilbert_expansion_fat_and_transfer() {
        let k = generate("random_hull:10,seed=6", 2).unwrap();
        let g = k.scale_by(0.5).unwrap();
        let e = expand_hilbert(&k, &g, 0.3, 128, 1e-10).unwrap();
        let rep = fatness_check(Metric::Hilbert(&k), &e, 0.3, 0.1, 12).unwrap();
        assert!(rep.pass, "{rep:?}");
        let t = boundary_transfer_check(Metric::Hilbert(&k), &g, 0.3, 20).unwrap();
        assert!(t.pass, "{t:?}");
    }

    #[test]
    fn interval_transfer() {
        let k = ConvexBody::interval(-1.0, 1.0).unwrap();
        let a = 0.4f64;
        let g = ConvexBody::interval(-(a / 2.0).tanh(), (a / 2.0).tanh()).unwrap();
        let t = boundary_transfer_check(Metric::Hilbert(&k), &g, a, 2).unwrap();
        assert!(t.pass && t.lhs < 1e-12);
    }

    #[test]
    fn minkowski_transfer_square() {
        let d = generate("cube", 2).unwrap();
        let c = generate("random_hull:7,seed=1", 2).unwrap();
        let t = boundary_transfer_check(Metric::Minkowski(&d), &c, 0.25, 30).unwrap();
        assert!(t.pass, "{t:?}");
    }
}
