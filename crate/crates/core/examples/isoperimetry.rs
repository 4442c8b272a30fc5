//! Relative fatness of expansions and the cube/halfspace isoperimetric ratio.
//!
//!     cargo run --release --example isoperimetry

use hilbcover::body::generate;
use hilbcover::cover::{expand_hilbert, expand_minkowski, fatness_check, relative_isoperimetry_sample, IsoBall};
use hilbcover::harness::instances::nested_pair;
use hilbcover::measures::Normalization;
use hilbcover::metrics::Metric;
use hilbcover::{ConvexBody, Pt};

fn main() -> hilbcover::Result<()> {
    for dim in [2usize, 3] {
        let d = generate("cube", dim)?;
        let mut pts = Vec::new();
        for mask in 0..(1usize << dim) {
            let mut p = Pt::zeros();
            p[0] = if mask & 1 == 0 { -3.0 } else { 0.0 };
            for j in 1..dim {
                p[j] = if mask >> j & 1 == 0 { -3.0 } else { 3.0 };
            }
            pts.push(p);
        }
        let e = ConvexBody::from_points(dim, &pts)?;
        let ball = IsoBall::Minkowski {
            d: &d,
            center: Pt::zeros(),
            r: 1.0,
        };
        for norm in [Normalization::Busemann, Normalization::HolmesThompson] {
            let s = relative_isoperimetry_sample(ball, &e, norm)?;
            println!("cube ball, d = {dim}, {norm:?}: mu = {:.6}, beta = {:.6}", s.mu, s.beta);
        }
    }

    let c = generate("random_hull:6,seed=3", 2)?;
    let d = generate("ngon:8", 2)?;
    let alpha = 0.3;
    let e = expand_minkowski(&c, &d, alpha)?;
    let rep = fatness_check(Metric::Minkowski(&d), &e, alpha, 0.23, 16)?;
    println!("Minkowski expansion: min volume fraction {:.4}", rep.lhs);

    let (k, g) = nested_pair(2, 1, 0)?;
    let e = expand_hilbert(&k, &g, alpha, 128, 1e-10)?;
    let rep = fatness_check(Metric::Hilbert(&k), &e, alpha, 0.1, 16)?;
    println!(
        "Hilbert expansion: min volume fraction {:.4}, min area fraction {:.4}",
        rep.lhs, rep.detail["min_area_fraction"]
    );
    Ok(())
}
