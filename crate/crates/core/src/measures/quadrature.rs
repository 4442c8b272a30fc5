//! Quadrature rules on segments, triangles and tetrahedra.

use crate::Pt;

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let n = n.max(1);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { z } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (z * pn - pm) / (z * z - 1.0);
            let dz = pn / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Integral over segment [a, b] of `f(point)`, scaled by the segment length.
pub fn segment_rule(a: &Pt, b: &Pt, nodes: &(Vec<f64>, Vec<f64>), f: &mut impl FnMut(&Pt) -> f64) -> f64 {
    let half = 0.5 * (b - a).norm();
    let mid = (a + b) * 0.5;
    let dir = (b - a) * 0.5;
    let mut s = 0.0;
    for (x, w) in nodes.0.iter().zip(&nodes.1) {
        s += w * f(&(mid + dir * *x));
    }
    s * half
}

// 7-point degree-5 rule (barycentric orbits and weights)
const TRI7: [(f64, f64, f64, f64); 3] = [
    (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.225),
    (
        0.059_715_871_789_770,
        0.470_142_064_105_115,
        0.470_142_064_105_115,
        0.132_394_152_788_506,
    ),
    (
        0.797_426_985_353_087,
        0.101_286_507_323_456,
        0.101_286_507_323_456,
        0.125_939_180_544_827,
    ),
];

/// Degree-5 rule on a triangle, refined `level` times by midpoint subdivision.
pub fn triangle_rule(t: &[Pt; 3], level: u32, f: &mut impl FnMut(&Pt) -> f64) -> f64 {
    if level > 0 {
        let m01 = (t[0] + t[1]) * 0.5;
        let m12 = (t[1] + t[2]) * 0.5;
        let m20 = (t[2] + t[0]) * 0.5;
        return triangle_rule(&[t[0], m01, m20], level - 1, f)
            + triangle_rule(&[m01, t[1], m12], level - 1, f)
            + triangle_rule(&[m20, m12, t[2]], level - 1, f)
            + triangle_rule(&[m01, m12, m20], level - 1, f);
    }
    let area = 0.5 * (t[1] - t[0]).cross(&(t[2] - t[0])).norm();
    let mut s = 0.0;
    for (k, &(a, b, c, w)) in TRI7.iter().enumerate() {
        if k == 0 {
            s += w * f(&(t[0] * a + t[1] * b + t[2] * c));
        } else {
            s += w * f(&(t[0] * a + t[1] * b + t[2] * c));
            s += w * f(&(t[0] * b + t[1] * c + t[2] * a));
            s += w * f(&(t[0] * c + t[1] * a + t[2] * b));
        }
    }
    s * area
}

/// Degree-2 rule on a tetrahedron, refined `level` times (8-way subdivision).
pub fn tetra_rule(t: &[Pt; 4], level: u32, f: &mut impl FnMut(&Pt) -> f64) -> f64 {
    if level > 0 {
        let m = |i: usize, j: usize| (t[i] + t[j]) * 0.5;
        let (m01, m02, m03, m12, m13, m23) = (m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3));
        let kids = [
            [t[0], m01, m02, m03],
            [m01, t[1], m12, m13],
            [m02, m12, t[2], m23],
            [m03, m13, m23, t[3]],
            [m01, m02, m03, m13],
            [m01, m02, m12, m13],
            [m02, m03, m13, m23],
            [m02, m12, m13, m23],
        ];
        return kids.iter().map(|k| tetra_rule(k, level - 1, f)).sum();
    }
    let vol = (t[1] - t[0]).dot(&(t[2] - t[0]).cross(&(t[3] - t[0]))).abs() / 6.0;
    let (a, b) = (0.585_410_196_624_968_5, 0.138_196_601_125_010_5);
    let mut s = 0.0;
    for k in 0..4 {
        let mut p = Pt::zeros();
        for (j, v) in t.iter().enumerate() {
            p += v * if j == k { a } else { b };
        }
        s += f(&p);
    }
    s * vol / 4.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        for n in 1..=10 {
            let (x, w) = gauss_legendre(n);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
            // exact up to degree 2n - 1
            let deg = 2 * n - 1;
            let q: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32 - 1)).sum();
            let exact = if (deg - 1) % 2 == 0 { 2.0 / deg as f64 } else { 0.0 };
            assert!((q - exact).abs() < 1e-13, "n={n}");
        }
    }

    #[test]
    fn triangle_rule_degree_five() {
        let t = [Pt::new(0.0, 0.0, 0.0), Pt::new(1.0, 0.0, 0.0), Pt::new(0.0, 1.0, 0.0)];
        // ∫ x^2 y^3 over the unit triangle = 2! 3! / 7! = 1/420
        let v = triangle_rule(&t, 0, &mut |p| p.x * p.x * p.y.powi(3));
        assert!((v - 1.0 / 420.0).abs() < 1e-14);
        let v1 = triangle_rule(&t, 2, &mut |_| 1.0);
        assert!((v1 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn tetra_rule_volume_and_linear() {
        let t = [
            Pt::new(0.0, 0.0, 0.0),
            Pt::new(1.0, 0.0, 0.0),
            Pt::new(0.0, 1.0, 0.0),
            Pt::new(0.0, 0.0, 1.0),
        ];
        assert!((tetra_rule(&t, 1, &mut |_| 1.0) - 1.0 / 6.0).abs() < 1e-15);
        // ∫ x y = 1/120
        assert!((tetra_rule(&t, 0, &mut |p| p.x * p.y) - 1.0 / 120.0).abs() < 1e-15);
    }
}
