//! Polar bodies, the involution (K°)° = K, and sections against projections.
//!
//!     cargo run --example polarity

use hilbcover::body::{generate, hausdorff_distance, slice_project_dual_residual};
use hilbcover::{ConvexBody, Pt, Subspace};

fn main() -> hilbcover::Result<()> {
    let k = generate("random_hull:9,seed=4", 2)?;
    let kp = k.polar()?;
    println!("K: {} vertices, area {:.6}", k.vertices().len(), k.volume());
    println!("K°: {} vertices, area {:.6}", kp.vertices().len(), kp.volume());
    println!("d_H((K°)°, K) = {:.2e}", hausdorff_distance(&kp.polar()?, &k)?);

    // the square and the diamond are polar to each other
    let sq = generate("cube", 2)?;
    let diamond = generate("cross", 2)?;
    println!(
        "d_H(square°, diamond) = {:.2e}",
        hausdorff_distance(&sq.polar()?, &diamond)?
    );

    // an interval [a, b] with a < 0 < b has polar [1/a, 1/b]
    let iv = ConvexBody::interval(-0.5, 2.0)?;
    let ivp = iv.polar()?;
    println!("[-0.5, 2]° = [{}, {}]", ivp.vertices()[0].x, ivp.vertices()[1].x);

    let cube = generate("cube", 3)?;
    for e in [
        Subspace::line(3, Pt::new(1.0, 2.0, 0.5))?,
        Subspace::plane(Pt::new(0.3, -0.4, 1.0))?,
    ] {
        println!(
            "{}-dim subspace: residual between (K ∩ E)° and proj_E K° = {:.2e}",
            e.dim(),
            slice_project_dual_residual(&cube, &e)?
        );
    }
    Ok(())
}
