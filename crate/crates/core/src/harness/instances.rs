//! Seeded random instances shared by checks and sweeps.

use crate::body::{random_hull, ConvexBody, SymMode};
use crate::error::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Centered 1D hulls are symmetric intervals; draw the two ends separately.
fn interval(seed: u64) -> Result<ConvexBody> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ConvexBody::interval(-rng.random_range(0.2..1.0), rng.random_range(0.2..1.0))
}

/// Scale `g` about the origin so its largest `k`-gauge is `level`.
pub fn shrink_into(k: &ConvexBody, g: &ConvexBody, level: f64) -> Result<ConvexBody> {
    let mut worst: f64 = 0.0;
    for v in g.vertices() {
        worst = worst.max(k.gauge(v)?);
    }
    g.scale_by(level / worst)
}

/// Outer body `K` and inner body `G ⊂ int K` (largest `K`-gauge 0.6), both
/// with the origin in the interior.
pub fn nested_pair(dim: usize, index: u64, seed: u64) -> Result<(ConvexBody, ConvexBody)> {
    let s = seed.wrapping_mul(1_000_003).wrapping_add(index);
    if dim == 1 {
        let k = interval(s)?;
        let g = shrink_into(&k, &interval(s ^ 0x5bd1_e995)?, 0.6)?;
        return Ok((k, g));
    }
    let k = random_hull(dim, dim + 4 + (index % 7) as usize, s)?;
    let g = random_hull(dim, dim + 3 + (index * 3 % 5) as usize, s ^ 0x5bd1_e995)?;
    let g = shrink_into(&k, &g, 0.6)?;
    Ok((k, g))
}

/// Two independent bodies with centroid at the origin (1D: intervals
/// around the origin).
pub fn free_pair(dim: usize, index: u64, seed: u64) -> Result<(ConvexBody, ConvexBody)> {
    let s = seed.wrapping_mul(1_000_003).wrapping_add(index);
    if dim == 1 {
        return Ok((interval(s ^ 0x2545_f491)?, interval(s ^ 0x9e37_79b9)?));
    }
    let a = random_hull(dim, dim + 4 + (index % 6) as usize, s ^ 0x2545_f491)?;
    let b = random_hull(dim, dim + 3 + (index * 5 % 7) as usize, s ^ 0x9e37_79b9)?;
    Ok((a, b))
}

/// Centrally symmetric random body `conv(P ∪ -P)`.
pub fn symmetric_body(dim: usize, index: u64, seed: u64) -> Result<ConvexBody> {
    let s = seed.wrapping_mul(1_000_003).wrapping_add(index);
    random_hull(dim, dim + 2 + (index % 5) as usize, s ^ 0x85eb_ca6b)?.symmetrize(SymMode::Union)
}
