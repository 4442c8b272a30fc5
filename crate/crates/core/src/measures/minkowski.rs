use super::{omega, MeasureEstimate, Normalization};
use crate::body::{hull, ConvexBody, Subspace};
use crate::error::{GeomError, Result};
use crate::metrics::GeometryTag;
use crate::Pt;

fn require_symmetric(d: &ConvexBody) -> Result<()> {
    if !d.contains_origin_interior() {
        return Err(GeomError::OriginNotInterior);
    }
    if !d.centrally_symmetric() {
        return Err(GeomError::NotCentrallySymmetric);
    }
    Ok(())
}

fn same_dim(a: &ConvexBody, b: &ConvexBody) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(GeomError::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    Ok(())
}

/// Area of the polar of `(K - y) ∩ n^⊥` inside the plane (3D bodies).
pub(crate) fn section_polar_area(k: &ConvexBody, y: &Pt, n: &Pt) -> f64 {
    let (u, v) = hull::plane_basis(n);
    let pts: Vec<Pt> = k
        .facets()
        .iter()
        .map(|h| {
            let c = h.offset - h.normal.dot(y);
            Pt::new(h.normal.dot(&u) / c, h.normal.dot(&v) / c, 0.0)
        })
        .collect();
    let scale = pts.iter().map(|p| p.norm()).fold(0.0, f64::max);
    hull::shoelace(&hull::hull_2d(&pts, 1e-12 * scale)).abs()
}

/// Minkowski area density for a boundary piece with unit normal `n`.
/// 1D: counting measure. 2D: both normalizations give the gauge of the
/// tangent. 3D: HT uses the polar of the slice, Busemann its area.
pub fn area_density_minkowski(d: &ConvexBody, n: &Pt, norm: Normalization) -> Result<f64> {
    require_symmetric(d)?;
    Ok(match d.dim() {
        1 => 1.0,
        2 => d.gauge_unchecked(&Pt::new(-n.y, n.x, 0.0)),
        _ => match norm {
            Normalization::HolmesThompson => section_polar_area(d, &Pt::zeros(), n) / omega(2),
            Normalization::Busemann => omega(2) / d.section(&Subspace::plane(*n)?)?.volume(),
        },
    })
}

/// `vol_D(U) = λ(D°) λ(U) / ω_d`.
pub fn ht_volume_minkowski(d: &ConvexBody, u: &ConvexBody) -> Result<MeasureEstimate> {
    require_symmetric(d)?;
    same_dim(d, u)?;
    let value = d.polar()?.volume() * u.volume() / omega(d.dim());
    Ok(MeasureEstimate::exact(value, GeometryTag::Minkowski))
}

fn facet_sum(d: &ConvexBody, c: &ConvexBody, norm: Normalization) -> Result<f64> {
    require_symmetric(d)?;
    same_dim(d, c)?;
    if c.dim() == 1 {
        return Ok(2.0);
    }
    let mut s = 0.0;
    for (i, h) in c.facets().iter().enumerate() {
        let area = match c.dim() {
            2 => {
                let e = c.facet_polygon(i);
                (e[1] - e[0]).norm()
            }
            _ => crate::body::polygon_area_3d(&c.facet_polygon(i), &h.normal),
        };
        s += area * area_density_minkowski(d, &h.normal, norm)?;
    }
    Ok(s)
}

/// Holmes-Thompson boundary area of `C` in the normed space with unit ball `D`.
pub fn ht_area_minkowski(d: &ConvexBody, c: &ConvexBody) -> Result<MeasureEstimate> {
    let v = facet_sum(d, c, Normalization::HolmesThompson)?;
    Ok(MeasureEstimate::exact(v, GeometryTag::Minkowski))
}

/// Same area through projections: `(1/ω_{d-1}) Σ_f A_f λ_{d-1}(C | n_f^⊥)`
/// over the facets `f` of `D°`.
pub fn ht_area_minkowski_cauchy(d: &ConvexBody, c: &ConvexBody) -> Result<MeasureEstimate> {
    require_symmetric(d)?;
    same_dim(d, c)?;
    let dp = d.polar()?;
    let dim = d.dim();
    let mut s = 0.0;
    for (i, h) in dp.facets().iter().enumerate() {
        let (area, proj) = match dim {
            1 => (1.0, 1.0),
            2 => {
                let e = dp.facet_polygon(i);
                let t = Pt::new(-h.normal.y, h.normal.x, 0.0);
                ((e[1] - e[0]).norm(), c.support(&t) + c.support(&(-t)))
            }
            _ => (
                crate::body::polygon_area_3d(&dp.facet_polygon(i), &h.normal),
                c.projection(&Subspace::plane(h.normal)?)?.volume(),
            ),
        };
        s += area * proj;
    }
    Ok(MeasureEstimate::exact(s / omega(dim - 1), GeometryTag::Minkowski))
}

/// `vol_Bus,D(U) = ω_d λ(U) / λ(D)`.
pub fn busemann_volume(d: &ConvexBody, u: &ConvexBody) -> Result<MeasureEstimate> {
    require_symmetric(d)?;
    same_dim(d, u)?;
    Ok(MeasureEstimate::exact(
        omega(d.dim()) * u.volume() / d.volume(),
        GeometryTag::Minkowski,
    ))
}

/// Busemann boundary area of `C`.
pub fn busemann_area(d: &ConvexBody, c: &ConvexBody) -> Result<MeasureEstimate> {
    let v = facet_sum(d, c, Normalization::Busemann)?;
    Ok(MeasureEstimate::exact(v, GeometryTag::Minkowski))
}

/// Normalized volume product `λ(D) λ(D°) / ω_d²`.
pub fn volume_product(d: &ConvexBody) -> Result<f64> {
    let w = omega(d.dim());
    Ok(d.volume() * d.polar()?.volume() / (w * w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::generate;
    use nalgebra::Matrix3;
    use std::f64::consts::PI;

    fn sym_random(seed: u64, dim: usize) -> ConvexBody {
        generate(&format!("random_hull:8,seed={seed}"), dim)
            .unwrap()
            .symmetrize(crate::body::SymMode::Difference)
            .unwrap()
    }

    #[test]
    fn square_values() {
        let sq = generate("cube", 2).unwrap();
        let v = ht_volume_minkowski(&sq, &sq).unwrap().value;
        assert!((v - 8.0 / PI).abs() < 1e-12);
        // per-edge gauge of the edge vector: 4 edges of gauge 2
        assert!((ht_area_minkowski(&sq, &sq).unwrap().value - 8.0).abs() < 1e-12);
        assert!((ht_area_minkowski_cauchy(&sq, &sq).unwrap().value - 8.0).abs() < 1e-12);
        assert!((volume_product(&sq).unwrap() - 8.0 / (PI * PI)).abs() < 1e-12);
        let v3 = ht_volume_minkowski(&sq, &sq.scale_by(3.0).unwrap()).unwrap().value;
        assert!((v3 - 9.0 * v).abs() < 1e-12);
    }

    #[test]
    fn disk_values() {
        let disk = generate("ngon:512", 2).unwrap();
        assert!((ht_volume_minkowski(&disk, &disk).unwrap().value - PI).abs() < 1e-3);
        assert!((ht_area_minkowski(&disk, &disk).unwrap().value - 2.0 * PI).abs() < 1e-3);
        assert!((ht_area_minkowski_cauchy(&disk, &disk).unwrap().value - 2.0 * PI).abs() < 1e-3);
        assert!((volume_product(&disk).unwrap() - 1.0).abs() < 1e-3);
    }

    #[test]
    fn cauchy_matches_direct_and_polarity() {
        for dim in [2, 3] {
            for seed in 0..4 {
                let d = sym_random(seed, dim);
                let c = sym_random(seed + 100, dim);
                let a = ht_area_minkowski(&d, &c).unwrap().value;
                let b = ht_area_minkowski_cauchy(&d, &c).unwrap().value;
                assert!((a - b).abs() / a < 1e-9, "dim {dim}: {a} vs {b}");
                let pc = ht_area_minkowski(&c.polar().unwrap(), &d.polar().unwrap())
                    .unwrap()
                    .value;
                assert!((a - pc).abs() / a < 1e-9);
            }
        }
    }

    #[test]
    fn cube_3d() {
        let c = generate("cube", 3).unwrap();
        // slice of the cube is a square, polar area 2, density 2/π; 6 faces of area 4
        let a = ht_area_minkowski(&c, &c).unwrap().value;
        assert!((a - 48.0 / PI).abs() < 1e-10);
        let b = busemann_area(&c, &c).unwrap().value;
        assert!((b - 6.0 * PI).abs() < 1e-10);
        assert!((busemann_volume(&c, &c).unwrap().value - omega(3)).abs() < 1e-12);
    }

    #[test]
    fn busemann_normalization_and_invariance() {
        let d = sym_random(3, 2);
        assert!((busemann_volume(&d, &d).unwrap().value - PI).abs() < 1e-12);
        let u = generate("random_hull:6,seed=9", 2).unwrap();
        let l = Matrix3::new(1.3, 0.4, 0.0, -0.2, 0.8, 0.0, 0.0, 0.0, 1.0);
        let a = busemann_volume(&d, &u).unwrap().value;
        let b = busemann_volume(
            &d.linear_image(&l, &Pt::zeros()).unwrap(),
            &u.linear_image(&l, &Pt::zeros()).unwrap(),
        )
        .unwrap()
        .value;
        assert!((a - b).abs() < 1e-9);
        let ratio = ht_volume_minkowski(&d, &u).unwrap().value / a;
        assert!((ratio - volume_product(&d).unwrap()).abs() < 1e-12);
        let vp = volume_product(&d.linear_image(&l, &Pt::zeros()).unwrap()).unwrap();
        assert!((vp - volume_product(&d).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn rejects_asymmetric() {
        let t = generate("simplex", 2).unwrap();
        assert_eq!(
            ht_volume_minkowski(&t, &t).unwrap_err(),
            GeomError::NotCentrallySymmetric
        );
    }
}
