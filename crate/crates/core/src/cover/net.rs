use super::TargetKind;
use crate::body::ConvexBody;
use crate::error::{GeomError, Result};
use crate::metrics::{GeometryTag, Metric};
use crate::Pt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Greedy α-net drawn from a ground set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Net {
    pub centers: Vec<Pt>,
    pub alpha: f64,
    pub metric: GeometryTag,
    /// Pairwise distances (both directions) are at least `alpha - 1e-9`.
    pub separated: bool,
}

impl Net {
    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }
}

/// Length of a segment in the metric (max over both directions).
fn seg_len(metric: &Metric, a: &Pt, b: &Pt) -> f64 {
    metric.dist(a, b).max(metric.dist(b, a))
}

/// Centroids of a longest-edge bisection of `G` whose cells have metric edge
/// length at most `alpha / 10`.
pub fn interior_ground_set(metric: Metric, g: &ConvexBody, alpha: f64) -> Vec<Pt> {
    let h = alpha / 10.0;
    let mut out = Vec::new();
    let mut stack: Vec<Vec<Pt>> = g.simplices();
    while let Some(s) = stack.pop() {
        let mut best = (0.0, 0, 0);
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                let l = seg_len(&metric, &s[i], &s[j]);
                if l > best.0 {
                    best = (l, i, j);
                }
            }
        }
        if best.0 <= h {
            out.push(s.iter().fold(Pt::zeros(), |a, p| a + p) / s.len() as f64);
            continue;
        }
        let (_, i, j) = best;
        let m = (s[i] + s[j]) * 0.5;
        let mut a = s.clone();
        a[i] = m;
        let mut b = s;
        b[j] = m;
        stack.push(b);
        stack.push(a);
    }
    out
}

/// Points along one boundary edge at metric spacing at most `step`.
fn edge_chain(metric: &Metric, a: &Pt, b: &Pt, step: f64, out: &mut Vec<Pt>) {
    let len = (b - a).norm();
    let u = (b - a) / len;
    match metric {
        Metric::Hilbert(k) => {
            // d_H is |φ(τ) - φ(τ')| along the chord (-c⁻, c⁺)
            let (cp, cm) = (k.ray_exit(a, &u), k.ray_exit(a, &(-u)));
            let phi = |t: f64| 0.5 * ((t + cm) / (cp - t)).ln();
            let (p0, p1) = (phi(0.0), phi(len));
            let n = ((p1 - p0) / step).ceil().max(1.0) as usize;
            for i in 0..n {
                let e = (2.0 * (p0 + (p1 - p0) * i as f64 / n as f64)).exp();
                let t = (cp * e - cm) / (1.0 + e);
                out.push(a + u * t);
            }
        }
        Metric::Minkowski(_) => {
            let n = (seg_len(metric, a, b) / step).ceil().max(1.0) as usize;
            for i in 0..n {
                out.push(a + (b - a) * (i as f64 / n as f64));
            }
        }
    }
}

/// Sample chain on `∂G` with metric spacing `alpha / 20`: endpoints in 1D,
/// edge chains in 2D, centroids of a bisected boundary triangulation in 3D.
pub fn boundary_ground_set(metric: Metric, g: &ConvexBody, alpha: f64) -> Vec<Pt> {
    let step = alpha / 20.0;
    match g.dim() {
        1 => g.vertices().to_vec(),
        2 => {
            let mut out = Vec::new();
            for (a, b) in g.edges() {
                edge_chain(&metric, &a, &b, step, &mut out);
            }
            out
        }
        _ => {
            let mut out: Vec<Pt> = g.vertices().to_vec();
            let mut stack: Vec<[Pt; 3]> = g.boundary_triangles();
            while let Some(t) = stack.pop() {
                let l = [(0, 1), (1, 2), (2, 0)].map(|(i, j)| seg_len(&metric, &t[i], &t[j]));
                let k = (0..3).max_by(|&x, &y| l[x].total_cmp(&l[y])).unwrap();
                if l[k] <= step {
                    out.push((t[0] + t[1] + t[2]) / 3.0);
                    continue;
                }
                let (i, j) = [(0, 1), (1, 2), (2, 0)][k];
                let m = (t[i] + t[j]) * 0.5;
                let mut a = t;
                a[i] = m;
                let mut b = t;
                b[j] = m;
                stack.push(b);
                stack.push(a);
            }
            out
        }
    }
}

pub fn ground_set(metric: Metric, g: &ConvexBody, target: TargetKind, alpha: f64) -> Vec<Pt> {
    match target {
        TargetKind::Body => interior_ground_set(metric, g, alpha),
        TargetKind::Boundary => boundary_ground_set(metric, g, alpha),
    }
}

type Cell = (i64, i64, i64);

struct Grid {
    size: f64,
    cells: HashMap<Cell, Vec<usize>>,
}

impl Grid {
    fn new(size: f64) -> Self {
        Grid {
            size,
            cells: HashMap::new(),
        }
    }

    fn cell(&self, p: &Pt) -> Cell {
        let f = |x: f64| (x / self.size).floor() as i64;
        (f(p.x), f(p.y), f(p.z))
    }

    fn insert(&mut self, p: &Pt, idx: usize) {
        self.cells.entry(self.cell(p)).or_default().push(idx);
    }

    fn near(&self, p: &Pt) -> impl Iterator<Item = usize> + '_ {
        let (cx, cy, cz) = self.cell(p);
        (-1..=1)
            .flat_map(move |dx| (-1..=1).flat_map(move |dy| (-1..=1).map(move |dz| (cx + dx, cy + dy, cz + dz))))
            .filter_map(|c| self.cells.get(&c))
            .flatten()
            .copied()
    }
}

/// Greedy net over the ground set in seed-shuffled order: a sample becomes a
/// center unless some existing center `c` has `dist(c, p) < alpha`. Every
/// ground sample therefore lies within `alpha` of a center.
pub fn maximal_separated_net(metric: Metric, ground: &[Pt], alpha: f64, seed: u64) -> Result<Net> {
    metric.validate()?;
    if ground.is_empty() {
        return Err(GeomError::EmptyGroundSet);
    }
    if !(alpha > 0.0) {
        return Err(GeomError::RadiusOutOfRange {
            radius: alpha,
            max: f64::INFINITY,
        });
    }
    let mut order: Vec<usize> = (0..ground.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    // dist < alpha implies Euclidean distance < rho
    let rho = metric.euclid_radius_for(alpha).max(1e-12);
    let mut grid = Grid::new(rho);
    let mut centers: Vec<Pt> = Vec::new();
    for &i in &order {
        let p = ground[i];
        if grid.near(&p).any(|c| metric.dist(&centers[c], &p) < alpha) {
            continue;
        }
        grid.insert(&p, centers.len());
        centers.push(p);
    }
    let mut min_sep = f64::INFINITY;
    for (i, c) in centers.iter().enumerate() {
        for j in grid.near(c) {
            if j != i {
                min_sep = min_sep.min(metric.dist(&centers[j], c));
            }
        }
    }
    Ok(Net {
        centers,
        alpha,
        metric: metric.tag(),
        separated: min_sep >= alpha - 1e-9,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::generate;

    #[test]
    fn interval_packing() {
        let d = ConvexBody::interval(-1.0, 1.0).unwrap();
        let c = ConvexBody::interval(0.0, 1.0).unwrap();
        let m = Metric::Minkowski(&d);
        for seed in 0..10 {
            let ground = interior_ground_set(m, &c, 0.1);
            let net = maximal_separated_net(m, &ground, 0.1, seed).unwrap();
            assert!((6..=11).contains(&net.len()), "{}", net.len());
            assert!(net.separated);
            let mut xs: Vec<f64> = net.centers.iter().map(|p| p.x).collect();
            xs.sort_by(f64::total_cmp);
            assert!(xs.windows(2).all(|w| w[1] - w[0] >= 0.1 - 1e-12));
        }
    }

    #[test]
    fn big_alpha_single_center() {
        let d = generate("cube", 2).unwrap();
        let c = generate("random_hull:8,seed=1", 2).unwrap();
        let m = Metric::Minkowski(&d);
        let ground = interior_ground_set(m, &c, 3.0);
        assert_eq!(maximal_separated_net(m, &ground, 3.0, 0).unwrap().len(), 1);
    }

    #[test]
    fn hilbert_nets_cover_and_separate() {
        let k = generate("random_hull:10,seed=3", 2).unwrap();
        let g = k.scale_by(0.6).unwrap();
        let m = Metric::Hilbert(&k);
        for target in [TargetKind::Body, TargetKind::Boundary] {
            let ground = ground_set(m, &g, target, 0.3);
            let net = maximal_separated_net(m, &ground, 0.3, 7).unwrap();
            assert!(net.separated);
            for p in ground.iter().step_by(17) {
                let best = net.centers.iter().map(|c| m.dist(c, p)).fold(f64::INFINITY, f64::min);
                assert!(best < 0.3);
            }
        }
    }

    #[test]
    fn boundary_chain_spacing() {
        let k = generate("cube", 2).unwrap();
        let g = k.scale_by(0.9).unwrap();
        let m = Metric::Hilbert(&k);
        let pts = boundary_ground_set(m, &g, 0.2);
        for w in pts.windows(2) {
            let d = m.dist(&w[0], &w[1]);
            assert!(d <= 0.01 + 1e-9);
        }
    }

    #[test]
    fn empty_ground_set() {
        let d = generate("cube", 2).unwrap();
        assert_eq!(
            maximal_separated_net(Metric::Minkowski(&d), &[], 0.1, 0).unwrap_err(),
            GeomError::EmptyGroundSet
        );
    }

    #[test]
    fn three_dimensional_sets() {
        let d = generate("cube", 3).unwrap();
        let c = generate("cross", 3).unwrap();
        let m = Metric::Minkowski(&d);
        let bd = boundary_ground_set(m, &c, 0.5);
        assert!(bd.iter().all(|p| c.max_excess(p).abs() < 1e-9));
        let net = maximal_separated_net(m, &interior_ground_set(m, &c, 0.5), 0.5, 1).unwrap();
        assert!(net.separated && net.len() > 1);
    }
}
