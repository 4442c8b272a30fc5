//! Polarity, sums, intersections, Macbeath regions, symmetrizations,
//! sections and projections.

use super::{hausdorff_distance, hull, ConvexBody, Halfspace};
use crate::error::{GeomError, Result};
use crate::Pt;
use serde::{Deserialize, Serialize};

/// Symmetrization modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymMode {
    /// C ∩ (−C)
    Core,
    /// conv(C ∪ −C)
    Union,
    /// C + (−C)
    Difference,
}

/// Linear subspace given by an orthonormal basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    pub dim_ambient: usize,
    pub basis: Vec<Pt>,
}

impl Subspace {
    pub fn new(dim_ambient: usize, basis: Vec<Pt>) -> Result<Self> {
        for (i, a) in basis.iter().enumerate() {
            if (a.norm() - 1.0).abs() > 1e-9 {
                return Err(GeomError::ValidationError("basis vector is not unit".into()));
            }
            for b in &basis[i + 1..] {
                if a.dot(b).abs() > 1e-9 {
                    return Err(GeomError::ValidationError("basis is not orthogonal".into()));
                }
            }
            if (dim_ambient..3).any(|k| a[k].abs() > 1e-12) {
                return Err(GeomError::DimensionMismatch {
                    expected: dim_ambient,
                    got: 3,
                });
            }
        }
        if basis.is_empty() || basis.len() >= dim_ambient {
            return Err(GeomError::ValidationError(
                "subspace must be proper and nontrivial".into(),
            ));
        }
        Ok(Subspace { dim_ambient, basis })
    }

    /// Line spanned by a nonzero vector.
    pub fn line(dim_ambient: usize, dir: Pt) -> Result<Self> {
        if dir.norm() == 0.0 {
            return Err(GeomError::ZeroDirection);
        }
        Self::new(dim_ambient, vec![dir.normalize()])
    }

    /// Hyperplane with unit normal `n` (3D only).
    pub fn plane(n: Pt) -> Result<Self> {
        if n.norm() == 0.0 {
            return Err(GeomError::ZeroDirection);
        }
        let (u, v) = hull::plane_basis(&n.normalize());
        Self::new(3, vec![u, v])
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `p` in the basis.
    pub fn coords(&self, p: &Pt) -> Pt {
        let mut c = Pt::zeros();
        for (k, e) in self.basis.iter().enumerate() {
            c[k] = e.dot(p);
        }
        c
    }

    /// Ambient point from subspace coordinates.
    pub fn lift(&self, c: &Pt) -> Pt {
        self.basis
            .iter()
            .enumerate()
            .fold(Pt::zeros(), |acc, (k, e)| acc + e * c[k])
    }
}

/// Convex polygon (xy-plane, CCW) clipped by `{<n, p> <= b}` (n in the xy-plane).
pub(crate) fn clip_polygon(poly: &[Pt], n: &Pt, b: f64) -> Vec<Pt> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    let m = poly.len();
    for i in 0..m {
        let p = poly[i];
        let q = poly[(i + 1) % m];
        let fp = n.dot(&p) - b;
        let fq = n.dot(&q) - b;
        if fp <= 0.0 {
            out.push(p);
        }
        if (fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0) {
            let t = fp / (fp - fq);
            out.push(p + (q - p) * t);
        }
    }
    out
}

impl ConvexBody {
    /// Polar body `{y : <x, y> <= 1 for all x in K}`.
    pub fn polar(&self) -> Result<ConvexBody> {
        if !self.contains_origin_interior() {
            return Err(GeomError::OriginNotInterior);
        }
        let pts: Vec<Pt> = self.facets().iter().map(|h| h.normal / h.offset).collect();
        ConvexBody::from_points(self.dim(), &pts)
    }

    /// Vertices of `(K - x)°` in facet order, without a hull pass. In 2D the
    /// result is the CCW polygon of the polar.
    pub(crate) fn polar_vertices_at(&self, x: &Pt) -> Vec<Pt> {
        self.facets()
            .iter()
            .map(|h| h.normal / (h.offset - h.normal.dot(x)))
            .collect()
    }

    pub fn minkowski_sum(&self, other: &ConvexBody) -> Result<ConvexBody> {
        if self.dim() != other.dim() {
            return Err(GeomError::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        if self.dim() == 2 {
            return ConvexBody::from_points(2, &merge_polygon_sum(self.vertices(), other.vertices()));
        }
        let mut pts = Vec::with_capacity(self.vertices().len() * other.vertices().len());
        for a in self.vertices() {
            for b in other.vertices() {
                pts.push(a + b);
            }
        }
        ConvexBody::from_points(self.dim(), &pts)
    }

    /// Intersection with a halfspace, `None` if the result has no interior.
    pub fn clip_halfspace(&self, h: &Halfspace) -> Result<Option<ConvexBody>> {
        let eps = self.eps();
        if self.vertices().iter().all(|v| h.excess(v) <= eps) {
            return Ok(Some(self.clone()));
        }
        if self.vertices().iter().all(|v| h.excess(v) >= -eps) {
            return Ok(None);
        }
        let pts: Vec<Pt> = match self.dim() {
            1 | 2 => {
                if self.dim() == 1 {
                    let mut pts: Vec<Pt> = self.vertices().iter().filter(|v| h.excess(v) <= 0.0).copied().collect();
                    let (a, b) = (self.vertices()[0], self.vertices()[1]);
                    let (fa, fb) = (h.excess(&a), h.excess(&b));
                    pts.push(a + (b - a) * (fa / (fa - fb)));
                    pts
                } else {
                    clip_polygon(self.vertices(), &h.normal, h.offset)
                }
            }
            _ => {
                let mut pts: Vec<Pt> = self.vertices().iter().filter(|v| h.excess(v) <= 0.0).copied().collect();
                for (a, b) in self.edges() {
                    let (fa, fb) = (h.excess(&a), h.excess(&b));
                    if (fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0) {
                        pts.push(a + (b - a) * (fa / (fa - fb)));
                    }
                }
                pts
            }
        };
        match ConvexBody::from_points(self.dim(), &pts) {
            Ok(b) => Ok(Some(b)),
            Err(GeomError::DegenerateBody(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// `self ∩ other`, `None` if the intersection has empty interior.
    pub fn intersect(&self, other: &ConvexBody) -> Result<Option<ConvexBody>> {
        if self.dim() != other.dim() {
            return Err(GeomError::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        let mut cur = self.clone();
        for h in other.facets() {
            match cur.clip_halfspace(h)? {
                Some(b) => cur = b,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    /// Macbeath region `x + λ((K − x) ∩ (x − K))`.
    pub fn macbeath(&self, x: &Pt, lambda: f64) -> Result<ConvexBody> {
        if !self.contains_interior(x, crate::config::EPS_INTERIOR) {
            return Err(GeomError::PointNotInterior);
        }
        if !(lambda > 0.0) {
            return Err(GeomError::DegenerateBody(format!("Macbeath scale {lambda}")));
        }
        let shifted = self.translate(&(-x))?;
        let core = shifted
            .intersect(&shifted.negate()?)?
            .ok_or_else(|| GeomError::DegenerateBody("empty Macbeath core".into()))?;
        let pts: Vec<Pt> = core.vertices().iter().map(|v| x + v * lambda).collect();
        ConvexBody::from_points(self.dim(), &pts)
    }

    pub fn symmetrize(&self, mode: SymMode) -> Result<ConvexBody> {
        if self.max_excess(&Pt::zeros()) > self.eps() {
            return Err(GeomError::OriginNotMember);
        }
        let neg = self.negate()?;
        match mode {
            SymMode::Core => self
                .intersect(&neg)?
                .ok_or_else(|| GeomError::DegenerateBody("symmetric core has empty interior".into())),
            SymMode::Union => {
                let mut pts = self.vertices().to_vec();
                pts.extend(neg.vertices());
                ConvexBody::from_points(self.dim(), &pts)
            }
            SymMode::Difference => self.minkowski_sum(&neg),
        }
    }

    /// `K ∩ E` in subspace coordinates.
    pub fn section(&self, e: &Subspace) -> Result<ConvexBody> {
        self.check_subspace(e)?;
        let k = e.dim();
        // each facet restricts the subspace coordinates linearly
        let cons: Vec<(Pt, f64)> = self.facets().iter().map(|h| (e.coords(&h.normal), h.offset)).collect();
        if k == 1 {
            let mut lo = f64::NEG_INFINITY;
            let mut hi = f64::INFINITY;
            for (a, b) in &cons {
                if a.x > 1e-15 {
                    hi = hi.min(b / a.x);
                } else if a.x < -1e-15 {
                    lo = lo.max(b / a.x);
                } else if *b < 0.0 {
                    return Err(GeomError::DegenerateBody("empty section".into()));
                }
            }
            return ConvexBody::interval(lo, hi);
        }
        let r = 2.0 * self.circumradius() + 1.0;
        let mut poly = vec![
            Pt::new(-r, -r, 0.0),
            Pt::new(r, -r, 0.0),
            Pt::new(r, r, 0.0),
            Pt::new(-r, r, 0.0),
        ];
        for (a, b) in &cons {
            let n = a.norm();
            if n < 1e-15 {
                if *b < 0.0 {
                    return Err(GeomError::DegenerateBody("empty section".into()));
                }
                continue;
            }
            poly = clip_polygon(&poly, a, *b);
            if poly.len() < 3 {
                return Err(GeomError::DegenerateBody("section has empty interior".into()));
            }
        }
        ConvexBody::from_points(2, &poly)
    }

    /// Orthogonal projection onto `E` in subspace coordinates.
    pub fn projection(&self, e: &Subspace) -> Result<ConvexBody> {
        self.check_subspace(e)?;
        let pts: Vec<Pt> = self.vertices().iter().map(|v| e.coords(v)).collect();
        ConvexBody::from_points(e.dim(), &pts)
    }

    fn check_subspace(&self, e: &Subspace) -> Result<()> {
        if e.dim_ambient != self.dim() {
            return Err(GeomError::DimensionMismatch {
                expected: self.dim(),
                got: e.dim_ambient,
            });
        }
        Ok(())
    }
}

/// Sum of two CCW convex polygons by merging edge sequences.
fn merge_polygon_sum(a: &[Pt], b: &[Pt]) -> Vec<Pt> {
    let start = |p: &[Pt]| {
        (0..p.len())
            .min_by(|&i, &j| p[i].y.total_cmp(&p[j].y).then(p[i].x.total_cmp(&p[j].x)))
            .unwrap()
    };
    let (sa, sb) = (start(a), start(b));
    let (na, nb) = (a.len(), b.len());
    let edge = |p: &[Pt], s: usize, i: usize| p[(s + i + 1) % p.len()] - p[(s + i) % p.len()];
    // polar angle in [0, 2π) measured from the +x axis
    let ang = |e: Pt| {
        let t = e.y.atan2(e.x);
        if t < 0.0 {
            t + 2.0 * std::f64::consts::PI
        } else {
            t
        }
    };
    let mut out = Vec::with_capacity(na + nb);
    let (mut i, mut j) = (0, 0);
    let mut cur = a[sa] + b[sb];
    while i < na || j < nb {
        out.push(cur);
        let step = if i >= na {
            1
        } else if j >= nb {
            0
        } else {
            let (ea, eb) = (ang(edge(a, sa, i)), ang(edge(b, sb, j)));
            if ea < eb {
                0
            } else if eb < ea {
                1
            } else {
                2
            }
        };
        match step {
            0 => {
                cur += edge(a, sa, i);
                i += 1;
            }
            1 => {
                cur += edge(b, sb, j);
                j += 1;
            }
            _ => {
                cur += edge(a, sa, i) + edge(b, sb, j);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Hausdorff distance between `polar_E(K ∩ E)` and `proj_E(K°)`, both in
/// subspace coordinates.
pub fn slice_project_dual_residual(k: &ConvexBody, e: &Subspace) -> Result<f64> {
    let lhs = k.section(e)?.polar()?;
    let rhs = k.polar()?.projection(e)?;
    hausdorff_distance(&lhs, &rhs)
}
