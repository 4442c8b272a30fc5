//! Named body constructors: `cube`, `cross`, `simplex`, `ngon:k`,
//! `interval:a,b`, `random_hull:n,seed` (also `random_hull:n,seed=7`).

use super::ConvexBody;
use crate::error::{GeomError, Result};
use crate::Pt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn parse_err(spec: &str, what: &str) -> GeomError {
    GeomError::ParseError(format!("generator `{spec}`: {what}"))
}

/// Build a body from a generator string. `dim` is ignored by `ngon` (always 2D)
/// and `interval` (always 1D).
pub fn generate(spec: &str, dim: usize) -> Result<ConvexBody> {
    let spec = spec.trim();
    let (name, args) = match spec.split_once(':') {
        Some((n, a)) => (n.trim(), Some(a.trim())),
        None => (spec, None),
    };
    let body = match name {
        "cube" => cube(dim)?,
        "cross" => cross(dim)?,
        "simplex" => simplex(dim)?,
        "ngon" => {
            let k: usize = args
                .ok_or_else(|| parse_err(spec, "missing vertex count"))?
                .parse()
                .map_err(|_| parse_err(spec, "vertex count is not an integer"))?;
            ngon(k)?
        }
        "interval" => {
            let a = args.ok_or_else(|| parse_err(spec, "missing endpoints"))?;
            let (lo, hi) = a
                .split_once(',')
                .ok_or_else(|| parse_err(spec, "expected `interval:a,b`"))?;
            let lo: f64 = lo.trim().parse().map_err(|_| parse_err(spec, "bad endpoint"))?;
            let hi: f64 = hi.trim().parse().map_err(|_| parse_err(spec, "bad endpoint"))?;
            if lo >= hi {
                return Err(GeomError::ValidationError(format!(
                    "interval endpoints must satisfy a < b (got {lo}, {hi})"
                )));
            }
            ConvexBody::interval(lo, hi)?
        }
        "random_hull" => {
            let a = args.ok_or_else(|| parse_err(spec, "missing `n,seed`"))?;
            let (n, seed) = a
                .split_once(',')
                .ok_or_else(|| parse_err(spec, "expected `random_hull:n,seed`"))?;
            let n: usize = n.trim().parse().map_err(|_| parse_err(spec, "bad point count"))?;
            let seed = seed.trim();
            let seed = seed.strip_prefix("seed=").unwrap_or(seed);
            let seed: u64 = seed.parse().map_err(|_| parse_err(spec, "bad seed"))?;
            random_hull(dim, n, seed)?
        }
        _ => return Err(parse_err(spec, "unknown generator")),
    };
    Ok(body.with_name(spec))
}

fn unit(k: usize) -> Pt {
    let mut p = Pt::zeros();
    p[k] = 1.0;
    p
}

pub(crate) fn cube(dim: usize) -> Result<ConvexBody> {
    let pts: Vec<Pt> = (0..1usize << dim)
        .map(|mask| {
            let mut p = Pt::zeros();
            for k in 0..dim {
                p[k] = if mask >> k & 1 == 1 { 1.0 } else { -1.0 };
            }
            p
        })
        .collect();
    ConvexBody::from_points(dim, &pts)
}

pub(crate) fn cross(dim: usize) -> Result<ConvexBody> {
    let mut pts = Vec::new();
    for k in 0..dim {
        pts.push(unit(k));
        pts.push(-unit(k));
    }
    ConvexBody::from_points(dim, &pts)
}

/// Regular simplex inscribed in the unit sphere, centered at the origin.
pub(crate) fn simplex(dim: usize) -> Result<ConvexBody> {
    let pts: Vec<Pt> = match dim {
        1 => vec![Pt::new(-1.0, 0.0, 0.0), Pt::new(1.0, 0.0, 0.0)],
        2 => (0..3)
            .map(|k| {
                let t = PI / 2.0 + 2.0 * PI * k as f64 / 3.0;
                Pt::new(t.cos(), t.sin(), 0.0)
            })
            .collect(),
        3 => {
            let s = 1.0 / 3f64.sqrt();
            vec![
                Pt::new(s, s, s),
                Pt::new(s, -s, -s),
                Pt::new(-s, s, -s),
                Pt::new(-s, -s, s),
            ]
        }
        _ => return Err(GeomError::ValidationError(format!("unsupported dimension {dim}"))),
    };
    ConvexBody::from_points(dim, &pts)
}

/// Regular k-gon inscribed in the unit circle with a vertex at angle 0.
pub fn ngon(k: usize) -> Result<ConvexBody> {
    if k < 3 {
        return Err(GeomError::ValidationError(format!("ngon needs k >= 3 (got {k})")));
    }
    let pts: Vec<Pt> = (0..k)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / k as f64;
            Pt::new(t.cos(), t.sin(), 0.0)
        })
        .collect();
    ConvexBody::from_points(2, &pts)
}

/// Hull of `n` uniform points in the unit ball, translated to put its centroid
/// at the origin. Deterministic in `seed`.
pub fn random_hull(dim: usize, n: usize, seed: u64) -> Result<ConvexBody> {
    if n < dim + 1 {
        return Err(GeomError::ValidationError(format!(
            "random_hull needs at least {} points in dimension {dim}",
            dim + 1
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let mut p = Pt::zeros();
        for k in 0..dim {
            p[k] = rng.random_range(-1.0..1.0);
        }
        if p.norm_squared() <= 1.0 {
            pts.push(p);
        }
    }
    let body = ConvexBody::from_points(dim, &pts)?;
    let c = body.centroid();
    body.translate(&(-c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_generators() {
        let c = generate("cube", 2).unwrap();
        assert_eq!(c.vertices().len(), 4);
        assert_eq!(c.volume(), 4.0);
        assert_eq!(generate("cross", 3).unwrap().vertices().len(), 6);
        let s = generate("simplex", 3).unwrap();
        assert!(s.centroid().norm() < 1e-15);
        assert!(s.vertices().iter().all(|v| (v.norm() - 1.0).abs() < 1e-15));
        let g = generate("ngon:5", 3).unwrap();
        assert_eq!((g.dim(), g.vertices().len()), (2, 5));
        let i = generate("interval:-1,2.5", 2).unwrap();
        assert_eq!((i.vertices()[0].x, i.vertices()[1].x), (-1.0, 2.5));
    }

    #[test]
    fn random_hull_is_deterministic_and_centered() {
        let a = generate("random_hull:12,seed=7", 2).unwrap();
        let b = generate("random_hull:12,7", 2).unwrap();
        assert_eq!(a.vertices(), b.vertices());
        assert!(a.centroid().norm() < 1e-14);
        let c = generate("random_hull:12,seed=8", 2).unwrap();
        assert_ne!(a.vertices(), c.vertices());
        assert!(generate("random_hull:30,1", 3).unwrap().volume() > 0.0);
    }

    #[test]
    fn bad_specs() {
        assert!(matches!(generate("blob", 2), Err(GeomError::ParseError(_))));
        assert!(matches!(generate("ngon:x", 2), Err(GeomError::ParseError(_))));
        assert!(matches!(
            generate("interval:2,1", 1),
            Err(GeomError::ValidationError(_))
        ));
    }
}
