use super::{ht_area_finsler, ht_area_minkowski, ht_volume_finsler_quadrature, ht_volume_minkowski, Finsler};
use crate::body::ConvexBody;
use crate::config::{QUAD_ORDER, R_PLUS};
use crate::error::{GeomError, Result};
use crate::metrics::hilbert_ball;
use crate::Pt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy)]
pub enum GrowthGeometry<'a> {
    Hilbert(&'a ConvexBody),
    /// Normed space with symmetric unit ball `D`.
    Minkowski(&'a ConvexBody),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrowthRow {
    pub r: f64,
    pub vol: f64,
    pub area: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthProfile {
    pub rows: Vec<GrowthRow>,
    pub slope_vol: f64,
    pub slope_area: f64,
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// HT volume and boundary area of metric balls `B(center, r)` over `radii`.
/// Hilbert balls are polygons through `n_dir` radial points; their measures
/// come from quadrature. Minkowski balls are `center + rD`, measured exactly.
pub fn ball_growth_profile(geom: GrowthGeometry, center: &Pt, radii: &[f64], n_dir: usize) -> Result<GrowthProfile> {
    if radii.len() < 2 {
        return Err(GeomError::ValidationError("need at least two radii".into()));
    }
    let mut rows = Vec::with_capacity(radii.len());
    for &r in radii {
        if !(r > 0.0) || (matches!(geom, GrowthGeometry::Hilbert(_)) && r > R_PLUS) {
            return Err(GeomError::RadiusOutOfRange { radius: r, max: R_PLUS });
        }
        let (vol, area) = match geom {
            GrowthGeometry::Hilbert(k) => {
                let ball = hilbert_ball(k, center, r, n_dir)?.to_body()?;
                (
                    ht_volume_finsler_quadrature(Finsler::Hilbert(k), &ball, 1)?.value,
                    ht_area_finsler(Finsler::Hilbert(k), &ball, QUAD_ORDER)?.value,
                )
            }
            GrowthGeometry::Minkowski(d) => {
                let ball = d.scale_by(r)?.translate(center)?;
                (ht_volume_minkowski(d, &ball)?.value, ht_area_minkowski(d, &ball)?.value)
            }
        };
        rows.push(GrowthRow { r, vol, area });
    }
    let rs: Vec<f64> = rows.iter().map(|w| w.r).collect();
    let vs: Vec<f64> = rows.iter().map(|w| w.vol).collect();
    let areas: Vec<f64> = rows.iter().map(|w| w.area).collect();
    let slope_vol = loglog_slope(&rs, &vs);
    // 1D boundary measure is the constant count 2
    let slope_area = loglog_slope(&rs, &areas);
    Ok(GrowthProfile {
        rows,
        slope_vol,
        slope_area,
    })
}
