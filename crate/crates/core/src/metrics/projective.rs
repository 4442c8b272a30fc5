use crate::body::ConvexBody;
use crate::error::{GeomError, Result};
use crate::Pt;
use nalgebra::DMatrix;

/// The map `P_x(y) = y / (1 - <x, y>)`, defined where `<x, y> < 1`.
/// `P_x` sends `K°` to `(K - x)°`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectiveMap {
    pub anchor: Pt,
    pub dim: usize,
}

impl ProjectiveMap {
    pub fn new(anchor: Pt, dim: usize) -> Self {
        ProjectiveMap { anchor, dim }
    }

    fn denom(&self, y: &Pt) -> Result<f64> {
        let s = self.anchor.dot(y);
        if s >= 1.0 {
            return Err(GeomError::DomainViolation(s));
        }
        Ok(1.0 - s)
    }

    pub fn apply(&self, y: &Pt) -> Result<Pt> {
        Ok(y / self.denom(y)?)
    }

    /// `J = (1 - s)^{-2} ((1 - s) I + y x^T)`, `s = <x, y>`, as a d x d matrix.
    pub fn jacobian(&self, y: &Pt) -> Result<DMatrix<f64>> {
        let w = self.denom(y)?;
        let d = self.dim;
        Ok(DMatrix::from_fn(d, d, |i, j| {
            let id = if i == j { w } else { 0.0 };
            (id + y[i] * self.anchor[j]) / (w * w)
        }))
    }

    /// Image of a body (vertices mapped, hull rebuilt). Every vertex must lie in
    /// the domain.
    pub fn apply_body(&self, k: &ConvexBody) -> Result<ConvexBody> {
        let pts = k.vertices().iter().map(|v| self.apply(v)).collect::<Result<Vec<_>>>()?;
        ConvexBody::from_points(k.dim(), &pts)
    }
}

/// `(P_x(y), J_{x,y}, det J_{x,y})`.
pub fn projective_polar_map(x: &Pt, y: &Pt, dim: usize) -> Result<(Pt, DMatrix<f64>, f64)> {
    let p = ProjectiveMap::new(*x, dim);
    let img = p.apply(y)?;
    let j = p.jacobian(y)?;
    let det = j.determinant();
    Ok((img, j, det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::{generate, hausdorff_distance};

    #[test]
    fn identity_at_origin() {
        let y = Pt::new(0.3, -0.2, 0.0);
        let (img, j, det) = projective_polar_map(&Pt::zeros(), &y, 2).unwrap();
        assert_eq!(img, y);
        assert_eq!(j, DMatrix::identity(2, 2));
        assert_eq!(det, 1.0);
    }

    #[test]
    fn interval_image_is_shifted_polar() {
        let k = ConvexBody::interval(-1.0, 1.0).unwrap();
        let x = Pt::new(0.5, 0.0, 0.0);
        let img = ProjectiveMap::new(x, 1).apply_body(&k.polar().unwrap()).unwrap();
        let direct = k.translate(&(-x)).unwrap().polar().unwrap();
        assert!((img.vertices()[0].x + 2.0 / 3.0).abs() < 1e-15);
        assert!((img.vertices()[1].x - 2.0).abs() < 1e-15);
        assert!(hausdorff_distance(&img, &direct).unwrap() < 1e-14);
    }

    #[test]
    fn shifted_polar_in_plane() {
        let k = generate("random_hull:10,seed=9", 2).unwrap();
        let x = Pt::new(0.04, -0.03, 0.0);
        let img = ProjectiveMap::new(x, 2).apply_body(&k.polar().unwrap()).unwrap();
        let direct = k.translate(&(-x)).unwrap().polar().unwrap();
        assert!(hausdorff_distance(&img, &direct).unwrap() < 1e-10);
    }

    #[test]
    fn determinant_closed_form() {
        let x = Pt::new(0.2, 0.1, -0.3);
        let y = Pt::new(-0.4, 0.25, 0.1);
        let (_, _, det) = projective_polar_map(&x, &y, 3).unwrap();
        let s = x.dot(&y);
        assert!((det - (1.0 - s).powi(-4)).abs() < 1e-13);
        let (_, _, det2) = projective_polar_map(&y, &x, 3).unwrap();
        assert!((det - det2).abs() < 1e-13);
    }

    #[test]
    fn domain_violation() {
        let x = Pt::new(1.0, 1.0, 0.0);
        let y = Pt::new(0.5, 0.5, 0.0);
        assert_eq!(
            projective_polar_map(&x, &y, 2).unwrap_err(),
            GeomError::DomainViolation(1.0)
        );
    }
}
