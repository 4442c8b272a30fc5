use super::minkowski::section_polar_area;
use super::quadrature::{gauss_legendre, segment_rule, tetra_rule, triangle_rule};
use super::sampling::UniformSampler;
use super::{omega, MeasureEstimate, Method};
use crate::body::{hull, polygon_area_3d, ConvexBody};
use crate::config::EPS_INTERIOR;
use crate::error::{GeomError, Result};
use crate::metrics::GeometryTag;
use crate::Pt;
use rayon::prelude::*;

/// Funk or Hilbert geometry of a body `K`.
#[derive(Debug, Clone, Copy)]
pub enum Finsler<'a> {
    Funk(&'a ConvexBody),
    Hilbert(&'a ConvexBody),
}

impl<'a> Finsler<'a> {
    pub fn body(&self) -> &'a ConvexBody {
        match self {
            Finsler::Funk(k) | Finsler::Hilbert(k) => k,
        }
    }

    pub fn tag(&self) -> GeometryTag {
        match self {
            Finsler::Funk(_) => GeometryTag::Funk,
            Finsler::Hilbert(_) => GeometryTag::Hilbert,
        }
    }

    fn check_region(&self, g: &ConvexBody) -> Result<()> {
        let k = self.body();
        if g.dim() != k.dim() {
            return Err(GeomError::DimensionMismatch {
                expected: k.dim(),
                got: g.dim(),
            });
        }
        if g.vertices().iter().any(|v| k.max_excess(v) >= -EPS_INTERIOR) {
            return Err(GeomError::RegionNotInterior);
        }
        Ok(())
    }
}

/// `λ(Q - Q)` for a CCW convex polygon, as `2λ(Q) + Σ_e |e| h_Q(-n_e)`; the
/// antipodal vertices are tracked with a rotating pointer.
fn difference_area_2d(q: &[Pt]) -> f64 {
    let m = q.len();
    if m < 3 {
        return 0.0;
    }
    let dot = |j: usize, w: &Pt| q[j % m].x * w.x + q[j % m].y * w.y;
    let mut s = 0.0;
    let mut j = 0;
    for i in 0..m {
        let e = q[(i + 1) % m] - q[i];
        // -|e| n_e for the outward normal n_e = (e.y, -e.x) / |e|
        let w = Pt::new(-e.y, e.x, 0.0);
        if i == 0 {
            j = (0..m).max_by(|&a, &b| dot(a, &w).total_cmp(&dot(b, &w))).unwrap();
        } else {
            let mut steps = 0;
            while steps < m && dot(j + 1, &w) >= dot(j, &w) {
                j += 1;
                steps += 1;
            }
        }
        s += dot(j, &w);
    }
    2.0 * hull::shoelace(q).abs() + s
}

/// `λ(P - P)` for a 3D polytope.
fn difference_volume_3d(p: &ConvexBody) -> f64 {
    let mut s = 0.0;
    for (i, h) in p.facets().iter().enumerate() {
        let a = polygon_area_3d(&p.facet_polygon(i), &h.normal);
        s += a * p.support(&(-h.normal));
    }
    2.0 * p.volume() + 2.0 * s
}

fn hull_2d_scaled(pts: &[Pt]) -> Vec<Pt> {
    let scale = pts.iter().map(|p| p.norm()).fold(0.0, f64::max);
    hull::hull_2d(pts, 1e-12 * scale)
}

/// Holmes-Thompson volume density at interior `x`: `λ(B_x°) / ω_d`, with
/// `B_x° = (K - x)°` (Funk) or `½((K - x)° - (K - x)°)` (Hilbert).
pub fn volume_density(geom: Finsler, x: &Pt) -> f64 {
    let k = geom.body();
    let dim = k.dim();
    if dim == 1 {
        // both geometries: half the length of the polar interval
        let (lo, hi) = (k.vertices()[0].x, k.vertices()[1].x);
        return 0.5 * (1.0 / (hi - x.x) + 1.0 / (x.x - lo));
    }
    let pv = k.polar_vertices_at(x);
    match (dim, geom) {
        (2, Finsler::Funk(_)) => hull::shoelace(&pv).abs() / omega(2),
        (2, Finsler::Hilbert(_)) => difference_area_2d(&pv) / 4.0 / omega(2),
        (_, Finsler::Funk(_)) => ConvexBody::from_points(3, &pv).map_or(f64::NAN, |p| p.volume()) / omega(3),
        (_, Finsler::Hilbert(_)) => {
            ConvexBody::from_points(3, &pv).map_or(f64::NAN, |p| difference_volume_3d(&p)) / 8.0 / omega(3)
        }
    }
}

/// Holmes-Thompson area density at boundary point `y` with unit normal `n`.
/// In 2D both geometries give `½(1/s⁺ + 1/s⁻)`, `s±` the distances to `∂K`
/// along the tangent.
pub fn area_density(geom: Finsler, y: &Pt, n: &Pt) -> f64 {
    let k = geom.body();
    match k.dim() {
        1 => 1.0,
        2 => {
            let u = Pt::new(-n.y, n.x, 0.0);
            0.5 * (1.0 / k.ray_exit(y, &u) + 1.0 / k.ray_exit(y, &(-u)))
        }
        _ => match geom {
            Finsler::Funk(_) => section_polar_area(k, y, n) / omega(2),
            Finsler::Hilbert(_) => {
                let (u, v) = hull::plane_basis(n);
                let proj: Vec<Pt> = k
                    .polar_vertices_at(y)
                    .iter()
                    .map(|p| Pt::new(p.dot(&u), p.dot(&v), 0.0))
                    .collect();
                difference_area_2d(&hull_2d_scaled(&proj)) / 4.0 / omega(2)
            }
        },
    }
}

/// Monte Carlo HT volume of `U ⊂ int K`: mean density over uniform samples
/// times `λ(U)`; `std_error = λ(U) sd / √n`.
pub fn ht_volume_finsler(geom: Finsler, u: &ConvexBody, n_samples: usize, seed: u64) -> Result<MeasureEstimate> {
    geom.check_region(u)?;
    if n_samples < 2 {
        return Err(GeomError::ValidationError("n_samples must be at least 2".into()));
    }
    let sampler = UniformSampler::new(u);
    let vals: Vec<f64> = (0..n_samples as u64)
        .into_par_iter()
        .map(|i| volume_density(geom, &sampler.sample_indexed(seed, i)))
        .collect();
    // sequential sums keep the result independent of the thread count
    let n = n_samples as f64;
    let mean = vals.iter().sum::<f64>() / n;
    let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    let vol = u.volume();
    Ok(MeasureEstimate {
        value: vol * mean,
        std_error: vol * (var / n).sqrt(),
        n_samples,
        method: Method::MonteCarlo,
        geometry: geom.tag(),
        seed: Some(seed),
    })
}

/// Deterministic HT volume: simplex decomposition of `U`, each simplex refined
/// `level` times.
pub fn ht_volume_finsler_quadrature(geom: Finsler, u: &ConvexBody, level: u32) -> Result<MeasureEstimate> {
    geom.check_region(u)?;
    let simplices = u.simplices();
    let parts: Vec<f64> = simplices
        .par_iter()
        .map(|s| {
            let mut f = |p: &Pt| volume_density(geom, p);
            match s.len() {
                2 => {
                    let nodes = gauss_legendre(8);
                    let panels = 1usize << level;
                    (0..panels)
                        .map(|i| {
                            let a = s[0] + (s[1] - s[0]) * (i as f64 / panels as f64);
                            let b = s[0] + (s[1] - s[0]) * ((i + 1) as f64 / panels as f64);
                            segment_rule(&a, &b, &nodes, &mut f)
                        })
                        .sum()
                }
                3 => triangle_rule(&[s[0], s[1], s[2]], level, &mut f),
                _ => tetra_rule(&[s[0], s[1], s[2], s[3]], level, &mut f),
            }
        })
        .collect();
    let per = [0, 8, 7, 4][u.dim()] * (1usize << (u.dim() * level as usize));
    Ok(MeasureEstimate::quadrature(
        parts.iter().sum(),
        per * simplices.len(),
        geom.tag(),
    ))
}

/// HT length of the segment `[a, b]` (2D). Panels are graded toward the
/// points where the segment's line leaves `K`.
pub fn segment_area_finsler(geom: Finsler, a: &Pt, b: &Pt, quad_order: usize) -> f64 {
    let k = geom.body();
    let len = (b - a).norm();
    if len == 0.0 {
        return 0.0;
    }
    let u = (b - a) / len;
    let n = Pt::new(u.y, -u.x, 0.0);
    let (cp, cm) = (k.ray_exit(a, &u), k.ray_exit(a, &(-u)));
    let nodes = gauss_legendre(quad_order);
    let mut panels = Vec::new();
    let mut stack = vec![(0.0, len, 0u32)];
    while let Some((t0, t1, depth)) = stack.pop() {
        let gap = (cp - t1).min(cm + t0);
        if t1 - t0 <= 0.5 * gap || depth >= 60 {
            panels.push((t0, t1));
        } else {
            let mid = 0.5 * (t0 + t1);
            stack.push((mid, t1, depth + 1));
            stack.push((t0, mid, depth + 1));
        }
    }
    let mut f = |p: &Pt| area_density(geom, p, &n);
    panels
        .iter()
        .map(|&(t0, t1)| segment_rule(&(a + u * t0), &(a + u * t1), &nodes, &mut f))
        .sum()
}

/// HT area of a planar polygon piece (3D) with unit normal `n`.
pub fn polygon_area_finsler(geom: Finsler, poly: &[Pt], n: &Pt, level: u32) -> f64 {
    let mut f = |p: &Pt| area_density(geom, p, n);
    (1..poly.len().saturating_sub(1))
        .map(|k| triangle_rule(&[poly[0], poly[k], poly[k + 1]], level, &mut f))
        .sum()
}

/// HT boundary area of `G ⊂ int K`. 1D: counting measure.
pub fn ht_area_finsler(geom: Finsler, g: &ConvexBody, quad_order: usize) -> Result<MeasureEstimate> {
    geom.check_region(g)?;
    let (value, nodes) = match g.dim() {
        1 => (2.0, 2),
        2 => {
            let parts: Vec<f64> = g
                .edges()
                .par_iter()
                .map(|(a, b)| segment_area_finsler(geom, a, b, quad_order))
                .collect();
            (parts.iter().sum(), parts.len() * quad_order)
        }
        _ => {
            let level = ((quad_order.max(1) as f64).log2() as u32).min(4);
            let parts: Vec<f64> = (0..g.facets().len())
                .into_par_iter()
                .map(|i| polygon_area_finsler(geom, &g.facet_polygon(i), &g.facets()[i].normal, level))
                .collect();
            (parts.iter().sum(), (parts.len() * 7) << (2 * level))
        }
    };
    Ok(MeasureEstimate::quadrature(value, nodes, geom.tag()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::generate;
    use crate::metrics::hilbert_ball;
    use std::f64::consts::PI;

    fn disk(n: usize) -> ConvexBody {
        generate(&format!("ngon:{n}"), 2).unwrap()
    }

    #[test]
    fn densities_at_disk_center() {
        let k = disk(720);
        // Klein model: density 1/π·π = 1 at the center
        let f = volume_density(Finsler::Hilbert(&k), &Pt::zeros());
        assert!((f - 1.0).abs() < 1e-4);
        let g = volume_density(Finsler::Funk(&k), &Pt::zeros());
        assert!((g - 1.0).abs() < 1e-4);
        // Klein model at radius ρ: (1 - ρ²)^{-3/2}
        let x = Pt::new(0.6, 0.0, 0.0);
        let h = volume_density(Finsler::Hilbert(&k), &x);
        assert!((h - 0.64f64.powf(-1.5)).abs() / h < 1e-4);
    }

    #[test]
    fn difference_area_square() {
        let sq = generate("cube", 2).unwrap();
        assert!((difference_area_2d(sq.vertices()) - 16.0).abs() < 1e-12);
        let tri = generate("simplex", 2).unwrap();
        // λ(T - T) = 6 λ(T) for a triangle
        assert!((difference_area_2d(tri.vertices()) - 6.0 * tri.volume()).abs() < 1e-12);
        let t3 = generate("simplex", 3).unwrap();
        // λ(T - T) = binom(6,3) λ(T) for a tetrahedron
        assert!((difference_volume_3d(&t3) - 20.0 * t3.volume()).abs() < 1e-10);
    }

    #[test]
    fn hyperbolic_ball_volume() {
        let k = disk(512);
        let r = 0.8;
        let ball = hilbert_ball(&k, &Pt::zeros(), r, 720).unwrap().to_body().unwrap();
        let oracle = 2.0 * PI * (r.cosh() - 1.0);
        let mc = ht_volume_finsler(Finsler::Hilbert(&k), &ball, 20000, 5).unwrap();
        assert!(
            (mc.value - oracle).abs() < 3.0 * mc.std_error + 2e-3 * oracle,
            "{mc:?} vs {oracle}"
        );
        let q = ht_volume_finsler_quadrature(Finsler::Hilbert(&k), &ball, 1).unwrap();
        assert!((q.value - oracle).abs() / oracle < 2e-3, "{} vs {oracle}", q.value);
    }

    #[test]
    fn hyperbolic_circumference() {
        let k = disk(512);
        for &rho in &[0.3f64, 0.7] {
            let g = disk(512).scale_by(rho).unwrap();
            let r = rho.atanh();
            let a = ht_area_finsler(Finsler::Hilbert(&k), &g, 8).unwrap().value;
            assert!((a - 2.0 * PI * r.sinh()).abs() / a < 1e-2);
        }
    }

    #[test]
    fn edge_integral_matches_log_formula() {
        let k = generate("random_hull:9,seed=3", 2).unwrap();
        let g = k.scale_by(0.98).unwrap();
        for (a, b) in g.edges() {
            let len = (b - a).norm();
            let u = (b - a) / len;
            let (cp, cm) = (k.ray_exit(&a, &u), k.ray_exit(&a, &(-u)));
            // ∫_0^L ½(1/(c⁺ - τ) + 1/(c⁻ + τ)) dτ
            let exact = 0.5 * ((cp / (cp - len)).ln() + ((cm + len) / cm).ln());
            let q = segment_area_finsler(Finsler::Funk(&k), &a, &b, 8);
            assert!((q - exact).abs() / exact < 1e-10, "{q} vs {exact}");
        }
    }

    #[test]
    fn funk_duality_pairs() {
        for seed in 0..3u64 {
            let k = generate(&format!("random_hull:9,seed={seed}"), 2).unwrap();
            let g = generate(&format!("random_hull:6,seed={}", seed + 50), 2)
                .unwrap()
                .scale_by(0.25)
                .unwrap();
            let (kp, gp) = (k.polar().unwrap(), g.polar().unwrap());
            let a = ht_area_finsler(Finsler::Funk(&k), &g, 8).unwrap().value;
            let b = ht_area_finsler(Finsler::Funk(&gp), &kp, 8).unwrap().value;
            assert!((a - b).abs() / a < 1e-6, "area {a} vs {b}");
            let va = ht_volume_finsler_quadrature(Finsler::Funk(&k), &g, 3).unwrap().value;
            let vb = ht_volume_finsler_quadrature(Finsler::Funk(&gp), &kp, 3).unwrap().value;
            assert!((va - vb).abs() / va < 1e-3, "vol {va} vs {vb}");
            // Hilbert bands: area within beta_1 = 1 and volume within beta_2 = 3/2
            let ha = ht_area_finsler(Finsler::Hilbert(&k), &g, 8).unwrap().value;
            let hb = ht_area_finsler(Finsler::Hilbert(&gp), &kp, 8).unwrap().value;
            assert!((ha - hb).abs() / ha < 1e-6);
            let hva = ht_volume_finsler_quadrature(Finsler::Hilbert(&k), &g, 3).unwrap().value;
            let hvb = ht_volume_finsler_quadrature(Finsler::Hilbert(&gp), &kp, 3)
                .unwrap()
                .value;
            assert!(hva / hvb <= 1.5 && hvb / hva <= 1.5);
        }
    }

    #[test]
    fn mc_is_deterministic() {
        let k = generate("random_hull:8,seed=1", 2).unwrap();
        let u = k.scale_by(0.5).unwrap();
        let a = ht_volume_finsler(Finsler::Funk(&k), &u, 500, 9).unwrap();
        let b = ht_volume_finsler(Finsler::Funk(&k), &u, 500, 9).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert!(a.std_error > 0.0 && a.n_samples == 500);
    }

    #[test]
    fn region_must_be_interior() {
        let k = generate("cube", 2).unwrap();
        assert_eq!(
            ht_volume_finsler(Finsler::Hilbert(&k), &k, 100, 1).unwrap_err(),
            GeomError::RegionNotInterior
        );
        assert_eq!(
            ht_area_finsler(Finsler::Funk(&k), &k, 8).unwrap_err(),
            GeomError::RegionNotInterior
        );
    }

    #[test]
    fn three_dimensional_center_density() {
        let k = generate("cube", 3).unwrap();
        // (K)° is the cross-polytope of volume 4/3
        let f = volume_density(Finsler::Funk(&k), &Pt::zeros());
        assert!((f - (4.0 / 3.0) / omega(3)).abs() < 1e-12);
        // symmetric at the center: Hilbert equals Funk
        let h = volume_density(Finsler::Hilbert(&k), &Pt::zeros());
        assert!((h - f).abs() < 1e-12);
        let a = area_density(Finsler::Hilbert(&k), &Pt::zeros(), &Pt::new(0.0, 0.0, 1.0));
        assert!((a - 2.0 / PI).abs() < 1e-12);
    }
}
