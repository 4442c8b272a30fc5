//! The one-dimensional examples where polarity after expansion stretches
//! distances by exactly 3.
//!
//!     cargo run --example stability_sharpness

use hilbcover::harness::{run_check, ExperimentConfig};

fn main() -> hilbcover::Result<()> {
    for id in ["mink_stability_sharp", "hilb_stability_sharp"] {
        for alpha in [0.1, 0.3, 0.5] {
            let cfg = ExperimentConfig {
                alphas: vec![alpha],
                ..Default::default()
            };
            let r = run_check(id, &cfg)?;
            println!(
                "{id:<22} alpha {alpha}: before {:.12}  after {:.12}  ratio {:.12}",
                r.lhs, r.rhs, r.ratio
            );
        }
    }
    Ok(())
}
