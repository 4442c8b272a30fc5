//! Hilbert expansions, complementary chords, and the transfer of boundary
//! points of G to the boundary of its expansion.
//!
//!     cargo run --release --example boundary_transfer

use hilbcover::body::generate;
use hilbcover::cover::{boundary_transfer_check, complementary_chord_2d, expand_hilbert};
use hilbcover::harness::instances::nested_pair;
use hilbcover::metrics::Metric;
use hilbcover::{Halfspace, Pt};

fn main() -> hilbcover::Result<()> {
    // in the disk model a ball around a centered disk is a larger disk
    let disk = generate("ngon:512", 2)?;
    let g = disk.scale_by(0.5f64.tanh())?;
    let e = expand_hilbert(&disk, &g, 0.4, 128, 1e-10)?;
    let r = e.vertices().iter().map(|v| v.norm()).sum::<f64>() / e.vertices().len() as f64;
    println!("expanded disk radius {r:.6}, tanh(0.9) = {:.6}", 0.9f64.tanh());

    let (k, g) = nested_pair(2, 4, 0)?;
    let x = Pt::new(0.05, -0.02, 0.0);
    let n = Pt::new(0.6, 0.8, 0.0);
    let ch = complementary_chord_2d(&k, &x, &Halfspace::new(n, n.dot(&x))?)?;
    println!(
        "complementary chord through x: a = ({:.4}, {:.4}), b = ({:.4}, {:.4}), residual {:.1e}",
        ch.a.x, ch.a.y, ch.b.x, ch.b.y, ch.residual
    );

    for alpha in [0.1, 0.5, 1.0] {
        let rep = boundary_transfer_check(Metric::Hilbert(&k), &g, alpha, 24)?;
        println!(
            "alpha {alpha}: hit rate {:.3}, worst |d - alpha| {:.1e}",
            rep.detail["hit_rate"], rep.lhs
        );
    }
    Ok(())
}
