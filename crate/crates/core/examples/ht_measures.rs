//! Holmes-Thompson volumes and areas in Funk, Hilbert and Minkowski geometry,
//! and their behaviour under polarity.
//!
//!     cargo run --release --example ht_measures

use hilbcover::body::generate;
use hilbcover::harness::instances::{nested_pair, symmetric_body};
use hilbcover::measures::{
    beta, busemann_volume, ht_area_finsler, ht_area_minkowski, ht_volume_finsler, ht_volume_finsler_quadrature,
    ht_volume_minkowski, volume_product, Finsler,
};

fn main() -> hilbcover::Result<()> {
    let (k, g) = nested_pair(2, 3, 0)?;
    let (kp, gp) = (k.polar()?, g.polar()?);

    let a = ht_volume_finsler(Finsler::Funk(&k), &g, 20_000, 1)?;
    let b = ht_volume_finsler(Finsler::Funk(&gp), &kp, 20_000, 2)?;
    println!(
        "Funk volume:  vol_K(G) = {:.5} ± {:.5}   vol_G°(K°) = {:.5} ± {:.5}",
        a.value, a.std_error, b.value, b.std_error
    );
    let a = ht_area_finsler(Finsler::Funk(&k), &g, 8)?.value;
    let b = ht_area_finsler(Finsler::Funk(&gp), &kp, 8)?.value;
    println!("Funk area:    {a:.10} vs {b:.10}");

    let a = ht_volume_finsler_quadrature(Finsler::Hilbert(&k), &g, 3)?.value;
    let b = ht_volume_finsler_quadrature(Finsler::Hilbert(&gp), &kp, 3)?.value;
    println!(
        "Hilbert volume: {a:.6} vs {b:.6}, ratio {:.4} (band {})",
        a / b,
        beta(2)
    );

    let d = symmetric_body(2, 1, 0)?;
    let c = symmetric_body(2, 2, 0)?;
    let (cp, dp) = (c.polar()?, d.polar()?);
    println!(
        "Minkowski volume: {:.10} vs {:.10}",
        ht_volume_minkowski(&d, &c)?.value,
        ht_volume_minkowski(&cp, &dp)?.value
    );
    println!(
        "Minkowski area:   {:.10} vs {:.10}",
        ht_area_minkowski(&d, &c)?.value,
        ht_area_minkowski(&cp, &dp)?.value
    );

    let sq = generate("cube", 2)?;
    println!(
        "square norm: HT area of the square {:.6}, Busemann area {:.6}, volume product {:.6}",
        ht_volume_minkowski(&sq, &sq)?.value,
        busemann_volume(&sq, &sq)?.value,
        volume_product(&sq)?
    );
    Ok(())
}
