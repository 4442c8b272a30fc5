use super::expand::{require_hilbert_alpha, require_inside};
use super::net::{ground_set, maximal_separated_net};
use super::{boundary_inside, halfspaces, TargetKind};
use crate::body::{polygon_area_3d, ConvexBody, SymMode};
use crate::error::{GeomError, Result};
use crate::measures::{
    area_density_minkowski, ht_area_finsler, ht_area_minkowski, ht_volume_finsler_quadrature, ht_volume_minkowski,
    polygon_area_finsler, segment_area_finsler, Finsler, Normalization,
};
use crate::metrics::{hilbert_ball, Metric};
use crate::Pt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Bracket `lower <= N(target, alpha) <= upper` (at sample resolution).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverEstimate {
    pub upper: usize,
    pub lower: usize,
    pub alpha: f64,
    pub target: TargetKind,
    /// The measure bound exceeded the net size and was clamped.
    pub clamped: bool,
    /// Target measure and largest ball measure behind `lower`.
    pub measure: f64,
    pub ball_measure: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct CoverOptions {
    /// Fan size for Hilbert balls in the lower bound.
    pub n_dir: usize,
    pub quad_order: usize,
}

impl Default for CoverOptions {
    fn default() -> Self {
        CoverOptions {
            n_dir: 64,
            quad_order: 8,
        }
    }
}

/// Upper bound from a greedy net on the target; lower bound
/// `ceil(measure(target) / max_c measure(ball(c, alpha) ∩ target))` over the
/// net centers. Hilbert uses HT measures of `K`; the Minkowski metric (also
/// directed, for translative coverings) uses HT measures of `D ∩ -D`.
pub fn covering_estimate(
    metric: Metric,
    g: &ConvexBody,
    target: TargetKind,
    alpha: f64,
    seed: u64,
    opts: CoverOptions,
) -> Result<CoverEstimate> {
    metric.validate()?;
    match metric {
        Metric::Hilbert(k) => {
            require_inside(k, g)?;
            require_hilbert_alpha(alpha)?;
        }
        Metric::Minkowski(d) => {
            if d.dim() != g.dim() {
                return Err(GeomError::DimensionMismatch {
                    expected: d.dim(),
                    got: g.dim(),
                });
            }
        }
    }
    let ground = ground_set(metric, g, target, alpha);
    let net = maximal_separated_net(metric, &ground, alpha, seed)?;
    let (measure, ball_measure) = match metric {
        Metric::Hilbert(k) => {
            let geom = Finsler::Hilbert(k);
            let balls: Vec<f64> = net
                .centers
                .par_iter()
                .map(|c| -> Result<f64> {
                    let ball = hilbert_ball(k, c, alpha, opts.n_dir)?.to_body()?;
                    Ok(match target {
                        TargetKind::Body => {
                            ht_volume_finsler_quadrature(geom, &ball, if g.dim() == 1 { 8 } else { 0 })?.value
                        }
                        TargetKind::Boundary => boundary_inside(
                            g,
                            &halfspaces(&ball, 0.0),
                            |a, b| segment_area_finsler(geom, a, b, opts.quad_order),
                            |p, n| polygon_area_finsler(geom, p, n, 1),
                        ),
                    })
                })
                .collect::<Result<_>>()?;
            let m = match target {
                TargetKind::Body => ht_volume_finsler_quadrature(geom, g, 2)?.value,
                TargetKind::Boundary => ht_area_finsler(geom, g, opts.quad_order)?.value,
            };
            (m, balls.into_iter().fold(0.0, f64::max))
        }
        Metric::Minkowski(d) => {
            let sym = if d.centrally_symmetric() {
                d.clone()
            } else {
                d.symmetrize(SymMode::Core)?
            };
            match target {
                TargetKind::Body => (
                    ht_volume_minkowski(&sym, g)?.value,
                    ht_volume_minkowski(&sym, &d.scale_by(alpha)?)?.value,
                ),
                TargetKind::Boundary => {
                    let mut best: f64 = 0.0;
                    for c in &net.centers {
                        let ball = d.scale_by(alpha)?.translate(c)?;
                        let v = boundary_inside(
                            g,
                            &halfspaces(&ball, 0.0),
                            |a, b| {
                                let n = (b - a).normalize();
                                (b - a).norm()
                                    * area_density_minkowski(
                                        &sym,
                                        &Pt::new(n.y, -n.x, 0.0),
                                        Normalization::HolmesThompson,
                                    )
                                    .unwrap_or(f64::NAN)
                            },
                            |p, n| {
                                polygon_area_3d(p, n)
                                    * area_density_minkowski(&sym, n, Normalization::HolmesThompson).unwrap_or(f64::NAN)
                            },
                        );
                        best = best.max(v);
                    }
                    (ht_area_minkowski(&sym, g)?.value, best)
                }
            }
        }
    };
    let upper = net.len();
    let raw = if ball_measure > 0.0 {
        (measure / ball_measure * (1.0 - 1e-12)).ceil().max(1.0) as usize
    } else {
        upper
    };
    let clamped = raw > upper;
    if clamped {
        log::warn!("covering lower bound {raw} exceeds net size {upper} at alpha {alpha}; clamped");
    }
    Ok(CoverEstimate {
        upper,
        lower: raw.min(upper),
        alpha,
        target,
        clamped,
        measure,
        ball_measure,
    })
}

/// Translative covering of `C` by translates of `alpha D` (directed gauge of
/// `D`); both bodies must contain the origin in their interior.
pub fn translative_cover_estimate(
    c: &ConvexBody,
    d: &ConvexBody,
    target: TargetKind,
    alpha: f64,
    seed: u64,
    opts: CoverOptions,
) -> Result<CoverEstimate> {
    if !c.contains_origin_interior() || !d.contains_origin_interior() {
        return Err(GeomError::OriginNotInterior);
    }
    covering_estimate(Metric::Minkowski(d), c, target, alpha, seed, opts)
}

/// Exact covering number of an interval by metric balls of radius `alpha`
/// (1D), by a left-to-right greedy sweep. Boundary target: two points, one
/// ball suffices iff their distance is at most `2 alpha`.
pub fn exact_cover_1d(metric: Metric, g: &ConvexBody, target: TargetKind, alpha: f64) -> Result<usize> {
    metric.validate()?;
    if metric.dim() != 1 || g.dim() != 1 {
        return Err(GeomError::DimensionMismatch {
            expected: 1,
            got: g.dim(),
        });
    }
    if !(alpha > 0.0) {
        return Err(GeomError::RadiusOutOfRange {
            radius: alpha,
            max: f64::INFINITY,
        });
    }
    if let Metric::Hilbert(k) = metric {
        require_inside(k, g)?;
    }
    let (lo, hi) = (g.vertices()[0].x, g.vertices()[1].x);
    let x = |t: f64| Pt::new(t, 0.0, 0.0);
    let cap = match metric {
        Metric::Hilbert(k) => k.vertices()[1].x,
        Metric::Minkowski(d) => hi + 2.0 * alpha * d.circumradius() + 1.0,
    };
    // largest t in [from, cap] with within(t) (monotone, true at from)
    let reach = |from: f64, within: &dyn Fn(f64) -> bool| -> f64 {
        if within(cap) {
            return cap;
        }
        let (mut a, mut b) = (from, cap);
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if within(m) {
                a = m;
            } else {
                b = m;
            }
        }
        a
    };
    let slack = 1e-9 * (1.0 + hi.abs());
    // furthest center covering `p`, and the furthest point that center covers
    let center_for = |p: f64| reach(p, &|c| metric.dist(&x(c), &x(p)) <= alpha);
    let covers_to = |c: f64| reach(c, &|t| metric.dist(&x(c), &x(t)) <= alpha);
    if target == TargetKind::Boundary {
        let c = center_for(lo).min(hi);
        return Ok(if metric.dist(&x(c), &x(hi)) <= alpha + slack {
            1
        } else {
            2
        });
    }
    let mut covered = lo;
    let mut count = 0;
    loop {
        count += 1;
        let next = covers_to(center_for(covered));
        if next >= hi - slack || count >= 10_000_000 {
            break;
        }
        covered = next;
    }
    Ok(count)
}
