//! Expansions, nets, covering-number brackets and boundary diagnostics.

mod chord;
mod diagnostics;
mod estimate;
mod expand;
mod net;

pub use chord::{complementary_chord_2d, ComplementaryChord};
pub use diagnostics::{boundary_transfer_check, fatness_check, relative_isoperimetry_sample, IsoBall, IsoSample};
pub use estimate::{covering_estimate, exact_cover_1d, translative_cover_estimate, CoverEstimate, CoverOptions};
pub use expand::{expand_hilbert, expand_minkowski};
pub use net::{boundary_ground_set, ground_set, interior_ground_set, maximal_separated_net, Net};

use crate::body::{clip_polygon, ConvexBody};
use crate::Pt;
use serde::{Deserialize, Serialize};

/// What is being covered: the body or its boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetKind {
    Body,
    Boundary,
}

/// Halfspaces `(n, b)` of a body, optionally pulled inward by `shrink` to
/// describe the open interior.
pub(crate) fn halfspaces(body: &ConvexBody, shrink: f64) -> Vec<(Pt, f64)> {
    body.facets()
        .iter()
        .map(|h| (h.normal, h.offset - shrink * (1.0 + h.offset.abs())))
        .collect()
}

/// Part of the segment `[a, b]` inside all halfspaces.
pub(crate) fn clip_segment(a: &Pt, b: &Pt, hs: &[(Pt, f64)]) -> Option<(Pt, Pt)> {
    let (mut t0, mut t1) = (0.0f64, 1.0f64);
    let d = b - a;
    for (n, off) in hs {
        let num = off - n.dot(a);
        let den = n.dot(&d);
        if den.abs() < 1e-300 {
            if num < 0.0 {
                return None;
            }
        } else if den > 0.0 {
            t1 = t1.min(num / den);
        } else {
            t0 = t0.max(num / den);
        }
        if t0 >= t1 {
            return None;
        }
    }
    Some((a + d * t0, a + d * t1))
}

/// Measure of the part of `∂G` inside the halfspaces: points (1D), clipped
/// edges (2D) or clipped facet polygons (3D).
pub(crate) fn boundary_inside(
    g: &ConvexBody,
    hs: &[(Pt, f64)],
    piece2: impl Fn(&Pt, &Pt) -> f64,
    piece3: impl Fn(&[Pt], &Pt) -> f64,
) -> f64 {
    match g.dim() {
        1 => g
            .vertices()
            .iter()
            .filter(|v| hs.iter().all(|(n, b)| n.dot(v) <= *b))
            .count() as f64,
        2 => g
            .edges()
            .iter()
            .filter_map(|(a, b)| clip_segment(a, b, hs))
            .map(|(a, b)| piece2(&a, &b))
            .sum(),
        _ => (0..g.facets().len())
            .map(|i| {
                let mut poly = g.facet_polygon(i);
                for (n, b) in hs {
                    if poly.len() < 3 {
                        break;
                    }
                    poly = clip_polygon(&poly, n, *b);
                }
                if poly.len() < 3 {
                    0.0
                } else {
                    piece3(&poly, &g.facets()[i].normal)
                }
            })
            .sum(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::body::generate;

    #[test]
    fn segment_clipping() {
        let sq = generate("cube", 2).unwrap();
        let hs = halfspaces(&sq, 0.0);
        let (a, b) = clip_segment(&Pt::new(-3.0, 0.5, 0.0), &Pt::new(3.0, 0.5, 0.0), &hs).unwrap();
        assert!((a.x + 1.0).abs() < 1e-15 && (b.x - 1.0).abs() < 1e-15);
        assert!(clip_segment(&Pt::new(-3.0, 2.0, 0.0), &Pt::new(3.0, 2.0, 0.0), &hs).is_none());
        // a segment on the boundary is dropped by the open interior
        let open = halfspaces(&sq, 1e-12);
        assert!(clip_segment(&Pt::new(-3.0, 1.0, 0.0), &Pt::new(3.0, 1.0, 0.0), &open).is_none());
    }
}
