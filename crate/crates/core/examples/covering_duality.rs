//! Covering numbers of a body and of its polar picture, Hilbert and
//! translative, plus a small duality sweep.
//!
//!     cargo run --release --example covering_duality

use hilbcover::cover::{covering_estimate, exact_cover_1d, translative_cover_estimate, CoverOptions, TargetKind};
use hilbcover::harness::instances::{free_pair, nested_pair};
use hilbcover::harness::{duality_experiment, ExperimentConfig};
use hilbcover::metrics::Metric;
use hilbcover::ConvexBody;

fn main() -> hilbcover::Result<()> {
    let k = ConvexBody::interval(-1.0, 1.0)?;
    let g = ConvexBody::interval(-0.9, 0.9)?;
    for a in [0.1, 0.25, 0.5] {
        let n = exact_cover_1d(Metric::Hilbert(&k), &g, TargetKind::Body, a)?;
        println!("interval: N({a}) = {n}  (Hilbert length {:.4})", 2.0 * 0.9f64.atanh());
    }

    let (k, g) = nested_pair(2, 0, 0)?;
    let (kp, gp) = (k.polar()?, g.polar()?);
    let opts = CoverOptions::default();
    for target in [TargetKind::Body, TargetKind::Boundary] {
        let p = covering_estimate(Metric::Hilbert(&k), &g, target, 0.2, 0, opts)?;
        let q = covering_estimate(Metric::Hilbert(&gp), &kp, target, 0.2, 0, opts)?;
        println!(
            "Hilbert {target:?}: N_K(G) in [{}, {}], N_G°(K°) in [{}, {}]",
            p.lower, p.upper, q.lower, q.upper
        );
    }
    let (d, c) = free_pair(2, 0, 0)?;
    let p = translative_cover_estimate(&c, &d, TargetKind::Body, 0.2, 0, opts)?;
    let q = translative_cover_estimate(&d.polar()?, &c.polar()?, TargetKind::Body, 0.2, 0, opts)?;
    println!("translative: N_D(C) ≤ {}, N_C°(D°) ≤ {}", p.upper, q.upper);

    let cfg = ExperimentConfig {
        alphas: vec![0.2, 0.5],
        seeds: vec![0, 1],
        instances: 3,
        ..Default::default()
    };
    let out = duality_experiment(&cfg)?;
    println!("{}", serde_json::to_string_pretty(&out.summary).unwrap_or_default());
    Ok(())
}
