//! Convex hulls in dimensions 1, 2 and 3.

use crate::error::{GeomError, Result};
use crate::Pt;

/// Facet of a 3D hull: outward unit normal, offset and its vertex loop
/// (indices into the returned vertex list, counter-clockwise seen from outside).
#[derive(Debug, Clone)]
pub(crate) struct Face3 {
    pub normal: Pt,
    pub offset: f64,
    pub loop_idx: Vec<usize>,
}

fn lex_cmp(a: &Pt, b: &Pt) -> std::cmp::Ordering {
    a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)).then(a.z.total_cmp(&b.z))
}

/// Sort lexicographically and merge points closer than `eps`.
pub(crate) fn dedup(points: &[Pt], eps: f64) -> Vec<Pt> {
    dedup_with(points, eps, |a, b| (a - b).norm())
}

fn dedup_with(points: &[Pt], eps: f64, dist: impl Fn(&Pt, &Pt) -> f64) -> Vec<Pt> {
    let mut pts: Vec<Pt> = points.to_vec();
    pts.sort_by(lex_cmp);
    let mut out: Vec<Pt> = Vec::with_capacity(pts.len());
    for p in pts {
        // near-duplicates can be separated in sort order by a point with a
        // slightly smaller x, so look back over the whole x-window
        let dup = out
            .iter()
            .rev()
            .take_while(|q| p.x - q.x <= eps)
            .any(|q| dist(&p, q) <= eps);
        if !dup {
            out.push(p);
        }
    }
    out
}

fn cross2(o: &Pt, a: &Pt, b: &Pt) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Andrew's monotone chain. Returns the strictly convex hull in CCW order,
/// starting from the lexicographically smallest point.
pub(crate) fn hull_2d(points: &[Pt], eps: f64) -> Vec<Pt> {
    // z is ignored (callers may use it to carry an index)
    let pts = dedup_with(points, eps, |a, b| (a.x - b.x).hypot(a.y - b.y));
    if pts.len() < 3 {
        return pts;
    }
    // a turn counts only if the apex is farther than eps from the chord
    let left_turn = |o: &Pt, a: &Pt, b: &Pt| {
        let base = (b.x - o.x).hypot(b.y - o.y).max(f64::MIN_POSITIVE);
        cross2(o, a, b) / base > eps
    };
    let mut lower: Vec<Pt> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !left_turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<Pt> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !left_turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Polygon area (signed, positive for CCW) of points in the xy-plane.
pub(crate) fn shoelace(poly: &[Pt]) -> f64 {
    let n = poly.len();
    let mut s = 0.0;
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        s += a.x * b.y - a.y * b.x;
    }
    0.5 * s
}

/// Orthonormal pair spanning the plane with unit normal `n`, oriented so that
/// `u x v = n`.
pub(crate) fn plane_basis(n: &Pt) -> (Pt, Pt) {
    let helper = if n.x.abs() < 0.6 {
        Pt::new(1.0, 0.0, 0.0)
    } else if n.y.abs() < 0.6 {
        Pt::new(0.0, 1.0, 0.0)
    } else {
        Pt::new(0.0, 0.0, 1.0)
    };
    let u = (helper - n * n.dot(&helper)).normalize();
    let v = n.cross(&u);
    (u, v)
}

/// Incremental 3D hull with coplanar triangles merged into polygonal facets.
/// Returns the extreme vertices and facets referring to them.
pub(crate) fn hull_3d(points: &[Pt], eps: f64) -> Result<(Vec<Pt>, Vec<Face3>)> {
    let pts = dedup(points, eps);
    if pts.len() < 4 {
        return Err(GeomError::DegenerateBody(format!(
            "{} distinct points cannot span a 3D body",
            pts.len()
        )));
    }
    // initial tetrahedron
    let i0 = 0;
    let i1 = (0..pts.len())
        .max_by(|&a, &b| (pts[a] - pts[i0]).norm().total_cmp(&(pts[b] - pts[i0]).norm()))
        .unwrap();
    let d01 = (pts[i1] - pts[i0]).normalize();
    let line_dist = |p: &Pt| {
        let w = p - pts[i0];
        (w - d01 * w.dot(&d01)).norm()
    };
    let i2 = (0..pts.len())
        .max_by(|&a, &b| line_dist(&pts[a]).total_cmp(&line_dist(&pts[b])))
        .unwrap();
    if line_dist(&pts[i2]) <= eps {
        return Err(GeomError::DegenerateBody("points are collinear".into()));
    }
    let n012 = (pts[i1] - pts[i0]).cross(&(pts[i2] - pts[i0])).normalize();
    let plane_dist = |p: &Pt| n012.dot(&(p - pts[i0]));
    let i3 = (0..pts.len())
        .max_by(|&a, &b| plane_dist(&pts[a]).abs().total_cmp(&plane_dist(&pts[b]).abs()))
        .unwrap();
    if plane_dist(&pts[i3]).abs() <= eps {
        return Err(GeomError::DegenerateBody("points are coplanar".into()));
    }

    let mut tris: Vec<[usize; 3]> = Vec::new();
    let inner = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
    for f in [[i0, i1, i2], [i0, i1, i3], [i0, i2, i3], [i1, i2, i3]] {
        let n = (pts[f[1]] - pts[f[0]]).cross(&(pts[f[2]] - pts[f[0]]));
        if n.dot(&(pts[f[0]] - inner)) > 0.0 {
            tris.push(f);
        } else {
            tris.push([f[0], f[2], f[1]]);
        }
    }

    let tri_plane = |t: &[usize; 3]| -> (Pt, f64) {
        let n = (pts[t[1]] - pts[t[0]]).cross(&(pts[t[2]] - pts[t[0]]));
        let nn = n.norm();
        let n = if nn > 0.0 { n / nn } else { n };
        (n, n.dot(&pts[t[0]]))
    };

    for (pi, p) in pts.iter().enumerate() {
        if pi == i0 || pi == i1 || pi == i2 || pi == i3 {
            continue;
        }
        let visible: Vec<bool> = tris
            .iter()
            .map(|t| {
                let (n, b) = tri_plane(t);
                n.dot(p) - b > eps
            })
            .collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut vis_edges = std::collections::HashSet::new();
        for (t, &v) in tris.iter().zip(&visible) {
            if v {
                for k in 0..3 {
                    vis_edges.insert((t[k], t[(k + 1) % 3]));
                }
            }
        }
        let mut horizon = Vec::new();
        for (t, &v) in tris.iter().zip(&visible) {
            if v {
                for k in 0..3 {
                    let (a, b) = (t[k], t[(k + 1) % 3]);
                    if !vis_edges.contains(&(b, a)) {
                        horizon.push((a, b));
                    }
                }
            }
        }
        let mut kept: Vec<[usize; 3]> = tris
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .map(|(t, _)| *t)
            .collect();
        for (a, b) in horizon {
            kept.push([a, b, pi]);
        }
        tris = kept;
    }

    // group coplanar triangles into facets
    let planes: Vec<(Pt, f64)> = tris.iter().map(tri_plane).collect();
    let mut groups: Vec<(Pt, f64, Vec<usize>)> = Vec::new();
    let ptol = 1e-7_f64.max(eps * 10.0);
    for (ti, (n, b)) in planes.iter().enumerate() {
        if n.norm() < 0.5 {
            continue;
        }
        if let Some(g) = groups
            .iter_mut()
            .find(|g| (g.0 - n).norm() < ptol && (g.1 - b).abs() < ptol)
        {
            g.2.push(ti);
        } else {
            groups.push((*n, *b, vec![ti]));
        }
    }

    // Facet loops: 2D hull of each facet's points; drops non-extreme points.
    let mut vert_index: Vec<Option<usize>> = vec![None; pts.len()];
    let mut verts: Vec<Pt> = Vec::new();
    let mut faces = Vec::new();
    for (n0, _, members) in groups {
        let mut ids: Vec<usize> = members.iter().flat_map(|&t| tris[t]).collect();
        ids.sort_unstable();
        ids.dedup();
        // refit the plane to the member points (area weighted normal)
        let mut n = Pt::zeros();
        for &t in &members {
            let tr = tris[t];
            n += (pts[tr[1]] - pts[tr[0]]).cross(&(pts[tr[2]] - pts[tr[0]]));
        }
        let n = if n.norm() > 0.0 { n.normalize() } else { n0 };
        let (u, v) = plane_basis(&n);
        let flat: Vec<Pt> = ids
            .iter()
            .map(|&i| Pt::new(pts[i].dot(&u), pts[i].dot(&v), i as f64))
            .collect();
        let loop2 = hull_2d(&flat, eps);
        if loop2.len() < 3 {
            continue;
        }
        let mut loop_idx = Vec::with_capacity(loop2.len());
        for q in loop2 {
            let orig = q.z as usize;
            let vi = *vert_index[orig].get_or_insert_with(|| {
                verts.push(pts[orig]);
                verts.len() - 1
            });
            loop_idx.push(vi);
        }
        faces.push(Face3 {
            normal: n,
            offset: 0.0,
            loop_idx,
        });
    }
    for f in &mut faces {
        f.offset = verts.iter().map(|p| f.normal.dot(p)).fold(f64::NEG_INFINITY, f64::max);
    }
    Ok((verts, faces))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(x: f64, y: f64) -> Pt {
        Pt::new(x, y, 0.0)
    }

    #[test]
    fn hull_2d_drops_interior_and_collinear() {
        let pts = vec![
            p2(0.0, 0.0),
            p2(1.0, 0.0),
            p2(0.5, 0.0),
            p2(1.0, 1.0),
            p2(0.0, 1.0),
            p2(0.5, 0.5),
        ];
        let h = hull_2d(&pts, 1e-9);
        assert_eq!(h.len(), 4);
        assert_eq!(h[0], p2(0.0, 0.0));
        assert!(shoelace(&h) > 0.0);
        assert!((shoelace(&h) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hull_3d_cube_has_six_square_facets() {
        let mut pts = Vec::new();
        for i in 0..8 {
            pts.push(Pt::new(
                if i & 1 == 0 { -1.0 } else { 1.0 },
                if i & 2 == 0 { -1.0 } else { 1.0 },
                if i & 4 == 0 { -1.0 } else { 1.0 },
            ));
        }
        pts.push(Pt::new(0.0, 0.0, 1.0));
        pts.push(Pt::new(0.1, 0.2, -0.3));
        let (v, f) = hull_3d(&pts, 1e-9).unwrap();
        assert_eq!(v.len(), 8);
        assert_eq!(f.len(), 6);
        for face in &f {
            assert_eq!(face.loop_idx.len(), 4);
            assert!((face.offset - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn hull_3d_rejects_flat_input() {
        let pts = vec![
            Pt::new(0.0, 0.0, 0.0),
            Pt::new(1.0, 0.0, 0.0),
            Pt::new(0.0, 1.0, 0.0),
            Pt::new(1.0, 1.0, 0.0),
        ];
        assert!(hull_3d(&pts, 1e-9).is_err());
    }
}
