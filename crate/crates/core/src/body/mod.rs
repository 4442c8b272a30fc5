//! Convex polytopes in dimensions 1 to 3.

mod generators;
mod hausdorff;
pub(crate) mod hull;
mod ops;

pub use generators::{generate, random_hull};
pub use hausdorff::{hausdorff_distance, point_body_distance};
pub(crate) use ops::clip_polygon;
pub use ops::{slice_project_dual_residual, Subspace, SymMode};

use crate::config::EPS_GEOM;
use crate::error::{GeomError, Result};
use crate::Pt;
use serde::{Deserialize, Serialize};

/// Closed halfspace `{x : <normal, x> <= offset}` with a unit normal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Pt,
    pub offset: f64,
}

impl Halfspace {
    pub fn new(normal: Pt, offset: f64) -> Result<Self> {
        let n = normal.norm();
        if n <= EPS_GEOM {
            return Err(GeomError::ZeroDirection);
        }
        Ok(Halfspace {
            normal: normal / n,
            offset: offset / n,
        })
    }

    /// Signed distance, positive outside.
    #[inline]
    pub fn excess(&self, p: &Pt) -> f64 {
        self.normal.dot(p) - self.offset
    }
}

/// Full-dimensional convex polytope with vertex and facet representations.
///
/// Points are stored as 3-vectors; coordinates past `dim` are zero. In 2D the
/// vertices are counter-clockwise and facet `i` is the edge from vertex `i` to
/// vertex `i+1`. In 1D the vertices are `[lo, hi]` and the facets are the two
/// endpoints.
#[derive(Debug, Clone)]
pub struct ConvexBody {
    dim: usize,
    vertices: Vec<Pt>,
    facets: Vec<Halfspace>,
    // vertex loops per facet (3D only; CCW seen from outside)
    loops: Vec<Vec<usize>>,
    volume: f64,
    boundary_area: f64,
    eps: f64,
    contains_origin_interior: bool,
    centrally_symmetric: bool,
    name: Option<String>,
    scale: f64,
}

fn check_dim(dim: usize) -> Result<()> {
    if !(1..=3).contains(&dim) {
        return Err(GeomError::ValidationError(format!(
            "dimension must be 1, 2 or 3 (got {dim})"
        )));
    }
    Ok(())
}

impl ConvexBody {
    /// Convex hull of `points`. Fails if the hull is not full-dimensional.
    pub fn from_points(dim: usize, points: &[Pt]) -> Result<Self> {
        check_dim(dim)?;
        for p in points {
            if !(p.iter().all(|c| c.is_finite())) {
                return Err(GeomError::ValidationError("non-finite coordinate".into()));
            }
            if (dim..3).any(|k| p[k].abs() > EPS_GEOM) {
                return Err(GeomError::DimensionMismatch { expected: dim, got: 3 });
            }
        }
        if points.is_empty() {
            return Err(GeomError::DegenerateBody("no points".into()));
        }
        let radius = points.iter().map(|p| p.norm()).fold(0.0, f64::max);
        let eps = EPS_GEOM * radius.max(1.0);
        let mut body = match dim {
            1 => Self::build_1d(points, eps)?,
            2 => Self::build_2d(points, eps)?,
            _ => Self::build_3d(points, eps)?,
        };
        body.eps = eps;
        body.finish_flags();
        Ok(body)
    }

    /// Same as [`from_points`](Self::from_points) from plain coordinate rows.
    pub fn from_coords(dim: usize, rows: &[Vec<f64>]) -> Result<Self> {
        let mut pts = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != dim {
                return Err(GeomError::DimensionMismatch {
                    expected: dim,
                    got: r.len(),
                });
            }
            let mut p = Pt::zeros();
            for (k, c) in r.iter().enumerate() {
                p[k] = *c;
            }
            pts.push(p);
        }
        Self::from_points(dim, &pts)
    }

    pub fn interval(lo: f64, hi: f64) -> Result<Self> {
        Self::from_points(1, &[Pt::new(lo, 0.0, 0.0), Pt::new(hi, 0.0, 0.0)])
    }

    fn empty(dim: usize) -> Self {
        ConvexBody {
            dim,
            vertices: Vec::new(),
            facets: Vec::new(),
            loops: Vec::new(),
            volume: 0.0,
            boundary_area: 0.0,
            eps: EPS_GEOM,
            contains_origin_interior: false,
            centrally_symmetric: false,
            name: None,
            scale: 1.0,
        }
    }

    fn build_1d(points: &[Pt], eps: f64) -> Result<Self> {
        let lo = points.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
        let hi = points.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max);
        if hi - lo <= eps {
            return Err(GeomError::DegenerateBody(format!("interval of length {}", hi - lo)));
        }
        let mut b = Self::empty(1);
        b.vertices = vec![Pt::new(lo, 0.0, 0.0), Pt::new(hi, 0.0, 0.0)];
        b.facets = vec![
            Halfspace {
                normal: Pt::new(-1.0, 0.0, 0.0),
                offset: -lo,
            },
            Halfspace {
                normal: Pt::new(1.0, 0.0, 0.0),
                offset: hi,
            },
        ];
        b.volume = hi - lo;
        b.boundary_area = 2.0;
        Ok(b)
    }

    fn build_2d(points: &[Pt], eps: f64) -> Result<Self> {
        let v = hull::hull_2d(points, eps);
        if v.len() < 3 {
            return Err(GeomError::DegenerateBody("points are collinear".into()));
        }
        let area = hull::shoelace(&v);
        if area <= eps {
            return Err(GeomError::DegenerateBody(format!("polygon area {area}")));
        }
        let n = v.len();
        let mut facets = Vec::with_capacity(n);
        let mut perim = 0.0;
        for i in 0..n {
            let a = v[i];
            let b = v[(i + 1) % n];
            let e = b - a;
            let len = e.norm();
            perim += len;
            let normal = Pt::new(e.y / len, -e.x / len, 0.0);
            facets.push(Halfspace {
                normal,
                offset: normal.dot(&a),
            });
        }
        let mut b = Self::empty(2);
        b.vertices = v;
        b.facets = facets;
        b.volume = area;
        b.boundary_area = perim;
        Ok(b)
    }

    fn build_3d(points: &[Pt], eps: f64) -> Result<Self> {
        let (verts, faces) = hull::hull_3d(points, eps)?;
        let mut b = Self::empty(3);
        let mut vol = 0.0;
        let mut area = 0.0;
        for f in &faces {
            let a = polygon_area_3d(&f.loop_idx.iter().map(|&i| verts[i]).collect::<Vec<_>>(), &f.normal);
            area += a;
            vol += f.offset * a / 3.0;
        }
        if vol <= eps {
            return Err(GeomError::DegenerateBody(format!("polytope volume {vol}")));
        }
        b.facets = faces
            .iter()
            .map(|f| Halfspace {
                normal: f.normal,
                offset: f.offset,
            })
            .collect();
        b.loops = faces.into_iter().map(|f| f.loop_idx).collect();
        b.vertices = verts;
        b.volume = vol;
        b.boundary_area = area;
        Ok(b)
    }

    fn finish_flags(&mut self) {
        let eps = self.eps;
        self.contains_origin_interior = self.facets.iter().all(|h| h.offset > eps);
        self.centrally_symmetric = self
            .vertices
            .iter()
            .all(|v| self.vertices.iter().any(|w| (v + w).norm() <= eps * 10.0));
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub(crate) fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn vertices(&self) -> &[Pt] {
        &self.vertices
    }
    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }
    /// Lebesgue volume (length in 1D, area in 2D).
    pub fn volume(&self) -> f64 {
        self.volume
    }
    /// Boundary measure; counting measure (always 2) in 1D.
    pub fn boundary_area(&self) -> f64 {
        self.boundary_area
    }
    pub fn eps(&self) -> f64 {
        self.eps
    }
    pub fn contains_origin_interior(&self) -> bool {
        self.contains_origin_interior
    }
    pub fn centrally_symmetric(&self) -> bool {
        self.centrally_symmetric
    }
    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }
    /// Factor applied by [`crate::harness::parse_body_spec`] when normalizing input.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// (volume, boundary area).
    pub fn lebesgue(&self) -> (f64, f64) {
        (self.volume, self.boundary_area)
    }

    pub fn circumradius(&self) -> f64 {
        self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                d = d.max((a - b).norm());
            }
        }
        d
    }

    /// Vertex loop of facet `i` as points. 1D: the endpoint; 2D: the edge.
    pub fn facet_polygon(&self, i: usize) -> Vec<Pt> {
        match self.dim {
            1 => vec![self.vertices[i]],
            2 => vec![self.vertices[i], self.vertices[(i + 1) % self.vertices.len()]],
            _ => self.loops[i].iter().map(|&k| self.vertices[k]).collect(),
        }
    }

    /// Edges as vertex pairs (2D: the boundary edges; 3D: polytope edges).
    pub fn edges(&self) -> Vec<(Pt, Pt)> {
        match self.dim {
            1 => Vec::new(),
            2 => (0..self.vertices.len())
                .map(|i| (self.vertices[i], self.vertices[(i + 1) % self.vertices.len()]))
                .collect(),
            _ => {
                let mut out = Vec::new();
                for lp in &self.loops {
                    for k in 0..lp.len() {
                        let (a, b) = (lp[k], lp[(k + 1) % lp.len()]);
                        if a < b {
                            out.push((self.vertices[a], self.vertices[b]));
                        }
                    }
                }
                out
            }
        }
    }

    /// Fan triangulation of the boundary (3D): triangles with outward orientation.
    pub fn boundary_triangles(&self) -> Vec<[Pt; 3]> {
        let mut out = Vec::new();
        for lp in &self.loops {
            for k in 1..lp.len() - 1 {
                out.push([self.vertices[lp[0]], self.vertices[lp[k]], self.vertices[lp[k + 1]]]);
            }
        }
        out
    }

    /// Decomposition into simplices covering the body (segments, triangles or
    /// tetrahedra, as vertex lists of length dim+1).
    pub fn simplices(&self) -> Vec<Vec<Pt>> {
        match self.dim {
            1 => vec![vec![self.vertices[0], self.vertices[1]]],
            2 => {
                let v = &self.vertices;
                (1..v.len() - 1).map(|k| vec![v[0], v[k], v[k + 1]]).collect()
            }
            _ => {
                let apex = self.vertices[0];
                let mut out = Vec::new();
                for lp in &self.loops {
                    if lp.contains(&0) {
                        continue;
                    }
                    for k in 1..lp.len() - 1 {
                        out.push(vec![
                            apex,
                            self.vertices[lp[0]],
                            self.vertices[lp[k]],
                            self.vertices[lp[k + 1]],
                        ]);
                    }
                }
                out
            }
        }
    }

    pub fn centroid(&self) -> Pt {
        match self.dim {
            1 => (self.vertices[0] + self.vertices[1]) / 2.0,
            _ => {
                let mut c = Pt::zeros();
                let mut w = 0.0;
                for s in self.simplices() {
                    let vol = simplex_volume(&s);
                    let mean = s.iter().fold(Pt::zeros(), |a, p| a + p) / s.len() as f64;
                    c += mean * vol;
                    w += vol;
                }
                c / w
            }
        }
    }

    /// max over vertices of <u, v>.
    pub fn support(&self, u: &Pt) -> f64 {
        self.vertices.iter().map(|v| v.dot(u)).fold(f64::NEG_INFINITY, f64::max)
    }

    /// A vertex attaining the support value in direction `u`.
    pub fn support_point(&self, u: &Pt) -> Pt {
        *self
            .vertices
            .iter()
            .max_by(|a, b| a.dot(u).total_cmp(&b.dot(u)))
            .unwrap()
    }

    /// Largest facet excess; negative inside, zero on the boundary.
    pub fn max_excess(&self, p: &Pt) -> f64 {
        self.facets
            .iter()
            .map(|h| h.excess(p))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn contains(&self, p: &Pt) -> bool {
        self.max_excess(p) <= self.eps
    }

    /// Strict interior test with clearance `margin` from every facet.
    pub fn contains_interior(&self, p: &Pt, margin: f64) -> bool {
        self.max_excess(p) < -margin
    }

    /// Minkowski gauge `inf{l > 0 : u in l K}`; requires the origin in the interior.
    pub fn gauge(&self, u: &Pt) -> Result<f64> {
        if !self.contains_origin_interior {
            return Err(GeomError::OriginNotInterior);
        }
        Ok(self.gauge_unchecked(u))
    }

    #[inline]
    pub(crate) fn gauge_unchecked(&self, u: &Pt) -> f64 {
        self.facets
            .iter()
            .map(|h| h.normal.dot(u) / h.offset)
            .fold(0.0, f64::max)
    }

    /// First exit of the ray `origin + t*direction`, `t > 0`.
    pub fn ray_boundary_intersection(&self, origin: &Pt, direction: &Pt) -> Result<(Pt, f64)> {
        if direction.norm() <= f64::MIN_POSITIVE {
            return Err(GeomError::ZeroDirection);
        }
        if self.max_excess(origin) >= -crate::config::EPS_INTERIOR {
            return Err(GeomError::OriginNotInterior);
        }
        let t = self.ray_exit(origin, direction);
        Ok((origin + direction * t, t))
    }

    /// Exit parameter without validation; `origin` must be interior.
    #[inline]
    pub(crate) fn ray_exit(&self, origin: &Pt, direction: &Pt) -> f64 {
        let mut t = f64::INFINITY;
        for h in &self.facets {
            let nd = h.normal.dot(direction);
            if nd > 0.0 {
                let s = (h.offset - h.normal.dot(origin)) / nd;
                if s < t {
                    t = s;
                }
            }
        }
        t
    }

    pub fn translate(&self, v: &Pt) -> Result<Self> {
        let pts: Vec<Pt> = self.vertices.iter().map(|p| p + v).collect();
        Self::from_points(self.dim, &pts)
    }

    pub fn scale_by(&self, s: f64) -> Result<Self> {
        let pts: Vec<Pt> = self.vertices.iter().map(|p| p * s).collect();
        Self::from_points(self.dim, &pts)
    }

    /// Image under `x -> m x + t` (only the leading dim x dim block of `m` is used).
    pub fn linear_image(&self, m: &nalgebra::Matrix3<f64>, t: &Pt) -> Result<Self> {
        let pts: Vec<Pt> = self.vertices.iter().map(|p| self.clip(m * p + t)).collect();
        Self::from_points(self.dim, &pts)
    }

    pub fn negate(&self) -> Result<Self> {
        self.scale_by(-1.0)
    }

    /// Zero the coordinates past `dim`.
    pub(crate) fn clip(&self, mut p: Pt) -> Pt {
        for k in self.dim..3 {
            p[k] = 0.0;
        }
        p
    }
}

/// Lebesgue measure of a simplex given as dim+1 points.
pub fn simplex_volume(s: &[Pt]) -> f64 {
    match s.len() {
        2 => (s[1] - s[0]).norm(),
        3 => 0.5 * (s[1] - s[0]).cross(&(s[2] - s[0])).norm(),
        _ => (s[1] - s[0]).dot(&(s[2] - s[0]).cross(&(s[3] - s[0]))).abs() / 6.0,
    }
}

/// Area of a planar polygon in 3D with the given unit normal (vertices ordered).
pub(crate) fn polygon_area_3d(poly: &[Pt], normal: &Pt) -> f64 {
    let mut s = Pt::zeros();
    for i in 0..poly.len() {
        s += poly[i].cross(&poly[(i + 1) % poly.len()]);
    }
    0.5 * s.dot(normal).abs()
}
