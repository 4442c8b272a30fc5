//! Named checks, duality sweeps, body parsing and report emission.

mod checks;
mod input;
pub mod instances;
mod report;
mod sweep;

pub use checks::{check_info, run_check, CheckInfo, ExperimentConfig, CHECKS};
pub use input::{parse_body_spec, parse_point};
pub use report::{emit_report, CheckReport, ReportFormat, CSV_HEADER};
pub use sweep::{duality_budget, duality_experiment, DualityOutput, DualitySummary, KindStats};

use crate::config::THREADS_ENV;

/// Cap the global rayon pool at `HILBCOVER_THREADS` when set. Returns the
/// cap, or `None` if the variable is unset or invalid. Results do not depend
/// on the thread count.
pub fn init_threads() -> Option<usize> {
    let n: usize = std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)?;
    // a pool built earlier keeps its size
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Some(n)
}
