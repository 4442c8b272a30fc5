use crate::body::{ConvexBody, Halfspace};
use crate::error::{GeomError, Result};
use crate::metrics::require_interior;
use crate::Pt;
use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

/// Chord `[a, b]` through `x` with supporting lines at both ends whose common
/// point lies on the line of `h` (possibly at infinity).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplementaryChord {
    pub a: Pt,
    pub b: Pt,
    pub line_a: Halfspace,
    pub line_b: Halfspace,
    /// `|det[L_a, L_b, L_h]|` with unit homogeneous line vectors.
    pub residual: f64,
}

// homogeneous line (n, -c) for {n · p = c}, unit length
fn homog(n: &Pt, c: f64) -> Vector3<f64> {
    Vector3::new(n.x, n.y, -c).normalize()
}

fn incidence(la: &Vector3<f64>, lb: &Vector3<f64>, lh: &Vector3<f64>) -> f64 {
    Matrix3::from_columns(&[*la, *lb, *lh]).determinant()
}

/// Supporting line at a vertex, interpolated across its normal cone.
fn cone_line(n0: &Pt, n1: &Pt, v: &Pt, s: f64) -> (Pt, f64) {
    let n = (n0 * (1.0 - s) + n1 * s).normalize();
    (n, n.dot(v))
}

/// Search over chord directions through `x` (shifted to the origin). The
/// incidence `f(θ) = det[L_a, L_b, L_h]` is constant while both chord ends stay
/// inside edges and satisfies `f(θ + π) = -f(θ)`; at a vertex the supporting
/// line sweeps the normal cone, where `f` is continuous. Walking half a turn
/// from a non-event angle brackets a sign change inside one of the sweeps.
pub fn complementary_chord_2d(k: &ConvexBody, x: &Pt, h: &Halfspace) -> Result<ComplementaryChord> {
    if k.dim() != 2 {
        return Err(GeomError::NotTwoDimensional);
    }
    require_interior(k, x)?;
    let hn = Pt::new(h.normal.x, h.normal.y, 0.0);
    if (hn.dot(x) - h.offset).abs() > 1e-9 * (1.0 + h.offset.abs()) {
        return Err(GeomError::ValidationError("x is not on the line of h".into()));
    }
    let lh = homog(&hn, h.offset - hn.dot(x));
    let verts: Vec<Pt> = k.vertices().iter().map(|v| v - x).collect();
    let m = verts.len();
    // edge i runs from vertex i to i + 1; normals and offsets in shifted frame
    let normals: Vec<Pt> = k.facets().iter().map(|f| f.normal).collect();
    let offs: Vec<f64> = (0..m).map(|i| normals[i].dot(&verts[i])).collect();
    let ang: Vec<f64> = verts.iter().map(|v| v.y.atan2(v.x).rem_euclid(TAU)).collect();
    // edge hit by the ray at angle θ
    let edge_at = |t: f64| -> usize {
        let t = t.rem_euclid(TAU);
        (0..m)
            .find(|&i| {
                let (a0, a1) = (ang[i], ang[(i + 1) % m]);
                if a0 <= a1 {
                    a0 <= t && t < a1
                } else {
                    t >= a0 || t < a1
                }
            })
            .unwrap_or(0)
    };
    // events: end a meets vertex i at ang[i], end b at ang[i] - π
    let mut events: Vec<(f64, bool, usize)> = Vec::with_capacity(2 * m);
    for (i, &a) in ang.iter().enumerate() {
        events.push((a, true, i));
        events.push(((a - PI).rem_euclid(TAU), false, i));
    }
    events.sort_by(|p, q| p.0.total_cmp(&q.0));
    // start halfway into the widest event-free gap
    let mut theta0 = 0.0;
    let mut gap = -1.0;
    for w in 0..events.len() {
        let (t0, t1) = (events[w].0, events[(w + 1) % events.len()].0);
        let g = (t1 - t0).rem_euclid(TAU);
        if g > gap {
            gap = g;
            theta0 = t0 + 0.5 * g;
        }
    }
    let walk: Vec<(f64, bool, usize)> = {
        let mut v: Vec<(f64, bool, usize)> = events
            .iter()
            .map(|&(t, is_a, i)| ((t - theta0).rem_euclid(TAU), is_a, i))
            .filter(|e| e.0 <= PI + 1e-15)
            .collect();
        v.sort_by(|p, q| p.0.total_cmp(&q.0));
        v
    };
    let line_of = |e: usize| (normals[e], offs[e]);
    let mut ea = edge_at(theta0);
    let mut eb = edge_at(theta0 + PI);
    let (mut la, mut lb) = (line_of(ea), line_of(eb));
    let val = |la: &(Pt, f64), lb: &(Pt, f64)| incidence(&homog(&la.0, la.1), &homog(&lb.0, lb.1), &lh);
    let mut trace = vec![val(&la, &lb)];
    let mut result: Option<(f64, (Pt, f64), (Pt, f64))> = None;
    if trace[0] == 0.0 {
        result = Some((theta0, la, lb));
    }
    for &(t, is_a, i) in &walk {
        if result.is_some() {
            break;
        }
        let theta = theta0 + t;
        let v = verts[i];
        let (prev, next) = ((i + m - 1) % m, i);
        let f_at = |s: f64| {
            let l = cone_line(&normals[prev], &normals[next], &v, s);
            if is_a {
                val(&l, &lb)
            } else {
                val(&la, &l)
            }
        };
        let (f0, f1) = (f_at(0.0), f_at(1.0));
        trace.push(f1);
        if f0 * f1 <= 0.0 {
            // bisection on the cone parameter
            let (mut lo, mut hi) = (0.0, 1.0);
            if f0 != 0.0 {
                for _ in 0..100 {
                    let mid = 0.5 * (lo + hi);
                    if f_at(mid) * f0 > 0.0 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
            } else {
                hi = 0.0;
            }
            let l = cone_line(&normals[prev], &normals[next], &v, 0.5 * (lo + hi));
            result = Some(if is_a { (theta, l, lb) } else { (theta, la, l) });
            break;
        }
        if is_a {
            ea = next;
            la = line_of(ea);
        } else {
            eb = next;
            lb = line_of(eb);
        }
    }
    let (theta, la, lb) = result
        .ok_or_else(|| GeomError::SearchFailed(format!("no sign change of the incidence function; trace {trace:?}")))?;
    let u = Pt::new(theta.cos(), theta.sin(), 0.0);
    let a = u * (la.1 / la.0.dot(&u));
    let b = -u * (lb.1 / lb.0.dot(&(-u)));
    let residual = val(&la, &lb).abs();
    Ok(ComplementaryChord {
        a: x + a,
        b: x + b,
        line_a: Halfspace {
            normal: la.0,
            offset: la.1 + la.0.dot(x),
        },
        line_b: Halfspace {
            normal: lb.0,
            offset: lb.1 + lb.0.dot(x),
        },
        residual,
    })
}
