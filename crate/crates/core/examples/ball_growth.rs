//! Growth of Hilbert balls: volume like r^d and area like r^(d-1) at small
//! radii, against the hyperbolic formulas on a fine polygon.
//!
//!     cargo run --release --example ball_growth

use hilbcover::body::generate;
use hilbcover::measures::{ball_growth_profile, GrowthGeometry};
use hilbcover::Pt;

fn main() -> hilbcover::Result<()> {
    let radii: Vec<f64> = (0..8).map(|j| 0.05 * 20f64.powf(j as f64 / 7.0)).collect();
    let disk = generate("ngon:256", 2)?;
    let prof = ball_growth_profile(GrowthGeometry::Hilbert(&disk), &Pt::zeros(), &radii, 256)?;
    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>12}",
        "r", "vol", "2π(cosh-1)", "area", "2π sinh"
    );
    for row in &prof.rows {
        let tau = std::f64::consts::TAU;
        println!(
            "{:>8.4} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            row.r,
            row.vol,
            tau * (row.r.cosh() - 1.0),
            row.area,
            tau * row.r.sinh()
        );
    }
    println!("slopes: volume {:.4}, area {:.4}", prof.slope_vol, prof.slope_area);

    let k = generate("random_hull:7,seed=12", 2)?;
    let prof = ball_growth_profile(GrowthGeometry::Hilbert(&k), &Pt::zeros(), &radii, 256)?;
    println!("random heptagon: slopes {:.4}, {:.4}", prof.slope_vol, prof.slope_area);
    Ok(())
}
