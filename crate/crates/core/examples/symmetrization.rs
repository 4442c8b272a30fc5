//! Symmetric core, symmetric union and difference body of a non-symmetric
//! body, with the Rogers-Shephard and 2^-d volume bounds.
//!
//!     cargo run --example symmetrization

use hilbcover::body::random_hull;
use hilbcover::SymMode;

fn main() -> hilbcover::Result<()> {
    println!(
        "{:>4} {:>10} {:>10} {:>10} {:>10}",
        "seed", "vol C", "core/C", "union/C", "diff/C"
    );
    for seed in 0..8 {
        let c = random_hull(2, 6, seed)?;
        let v = c.volume();
        let core = c.symmetrize(SymMode::Core)?.volume() / v;
        let union = c.symmetrize(SymMode::Union)?.volume() / v;
        let diff = c.symmetrize(SymMode::Difference)?.volume() / v;
        println!("{seed:>4} {v:>10.5} {core:>10.5} {union:>10.5} {diff:>10.5}");
    }
    println!("bounds in the plane: core/C >= 1/4, union/C and diff/C <= 6");
    Ok(())
}
