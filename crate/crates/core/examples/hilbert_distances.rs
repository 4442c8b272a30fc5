//! Funk and Hilbert distances, metric balls, and the Macbeath comparison.
//!
//!     cargo run --example hilbert_distances

use hilbcover::body::generate;
use hilbcover::metrics::{
    finsler_sandwich_ratios, funk_distance, funk_distance_variational, hilbert_ball, hilbert_distance,
    sandwich_estimate,
};
use hilbcover::{ConvexBody, Pt};

fn main() -> hilbcover::Result<()> {
    // on (-1, 1) the Hilbert distance from 0 to t is artanh(t)
    let iv = ConvexBody::interval(-1.0, 1.0)?;
    let t = 0.6f64;
    let d = hilbert_distance(&iv, &Pt::zeros(), &Pt::new(t, 0.0, 0.0))?;
    println!("interval: d_H(0, {t}) = {d:.12}, artanh = {:.12}", t.atanh());

    let k = generate("random_hull:10,seed=2", 2)?;
    let (x, y) = (Pt::new(0.1, -0.05, 0.0), Pt::new(-0.2, 0.15, 0.0));
    println!(
        "funk(x,y) = {:.9}  funk(y,x) = {:.9}  variational = {:.9}",
        funk_distance(&k, &x, &y)?,
        funk_distance(&k, &y, &x)?,
        funk_distance_variational(&k, &x, &y)?
    );
    println!("hilbert(x,y) = {:.9}", hilbert_distance(&k, &x, &y)?);

    let ball = hilbert_ball(&k, &x, 0.5, 128)?;
    println!("B_H(x, 0.5): Euclidean area {:.6}", ball.to_body()?.volume());

    for r in [0.1, 0.5, 1.0] {
        let s = sandwich_estimate(&k, &x, r, 128)?;
        println!(
            "r = {r}: M(x, {:.3} r) ⊆ B_H(x, r) ⊆ M(x, {:.3} r)",
            s.sigma_hat, s.tau_hat
        );
    }
    let (lo, hi) = finsler_sandwich_ratios(&k, &x, 256)?;
    println!("Finsler ball over Macbeath body: radial ratios in [{lo:.4}, {hi:.4}]");
    Ok(())
}
