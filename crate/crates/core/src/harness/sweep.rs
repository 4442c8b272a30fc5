//! Covering-duality sweeps: both sides of the Hilbert and translative
//! dualities over instances, radii and seeds.

use super::checks::ExperimentConfig;
use super::input::parse_body_spec;
use super::instances::{free_pair, nested_pair, shrink_into};
use super::{emit_report, CheckReport, ReportFormat};
use crate::body::ConvexBody;
use crate::config::{DUALITY_BUDGET_1D, DUALITY_BUDGET_2D, DUALITY_BUDGET_3D};
use crate::cover::{covering_estimate, exact_cover_1d, translative_cover_estimate, CoverOptions, TargetKind};
use crate::error::{GeomError, Result};
use crate::metrics::Metric;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Kind {
    HilbertVol,
    HilbertBd,
    TranslativeVol,
    TranslativeBd,
}

impl Kind {
    const ALL: [Kind; 4] = [
        Kind::HilbertVol,
        Kind::HilbertBd,
        Kind::TranslativeVol,
        Kind::TranslativeBd,
    ];

    fn name(self) -> &'static str {
        match self {
            Kind::HilbertVol => "hilbert_vol",
            Kind::HilbertBd => "hilbert_bd",
            Kind::TranslativeVol => "translative_vol",
            Kind::TranslativeBd => "translative_bd",
        }
    }

    fn target(self) -> TargetKind {
        match self {
            Kind::HilbertVol | Kind::TranslativeVol => TargetKind::Body,
            Kind::HilbertBd | Kind::TranslativeBd => TargetKind::Boundary,
        }
    }

    fn hilbert(self) -> bool {
        matches!(self, Kind::HilbertVol | Kind::HilbertBd)
    }
}

/// One instance with its polars. Hilbert: `G ⊂ int K`. Translative: cover
/// `C` by translates of `αD`.
struct Instance {
    label: String,
    k: ConvexBody,
    g: ConvexBody,
    k_polar: ConvexBody,
    g_polar: ConvexBody,
    c: ConvexBody,
    d: ConvexBody,
    c_polar: ConvexBody,
    d_polar: ConvexBody,
}

impl Instance {
    fn new(label: String, (k, g): (ConvexBody, ConvexBody), (d, c): (ConvexBody, ConvexBody)) -> Result<Self> {
        Ok(Instance {
            label,
            k_polar: k.polar()?,
            g_polar: g.polar()?,
            c_polar: c.polar()?,
            d_polar: d.polar()?,
            k,
            g,
            c,
            d,
        })
    }
}

fn instances(cfg: &ExperimentConfig) -> Result<Vec<Instance>> {
    let base = cfg.seeds.first().copied().unwrap_or(0);
    if cfg.bodies.is_empty() {
        let n = if cfg.instances == 0 { 10 } else { cfg.instances };
        return (0..n)
            .map(|i| {
                Instance::new(
                    format!("pair{i:02}"),
                    nested_pair(cfg.dim, i as u64, base)?,
                    free_pair(cfg.dim, i as u64, base)?,
                )
            })
            .collect();
    }
    cfg.bodies
        .iter()
        .enumerate()
        .map(|(i, spec)| {
            let (outer, inner) = spec
                .split_once(';')
                .ok_or_else(|| GeomError::ParseError(format!("instance `{spec}`: expected `outer;inner`")))?;
            let a = parse_body_spec(outer, cfg.dim)?;
            let b = parse_body_spec(inner, cfg.dim)?;
            if !a.contains_origin_interior() || !b.contains_origin_interior() {
                return Err(GeomError::OriginNotInterior);
            }
            let g = shrink_into(&a, &b, 0.6)?;
            Instance::new(format!("body{i:02}"), (a.clone(), g), (a, b))
        })
        .collect()
}

/// Ratio budget per dimension.
pub fn duality_budget(dim: usize) -> f64 {
    match dim {
        1 => DUALITY_BUDGET_1D,
        2 => DUALITY_BUDGET_2D,
        _ => DUALITY_BUDGET_3D,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KindStats {
    pub rows: usize,
    pub max_ratio: f64,
    pub median_ratio: f64,
}

/// Envelope of `max(primal/dual, dual/primal)` over the sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualitySummary {
    pub dim: usize,
    pub rows: usize,
    pub budget: f64,
    pub max_ratio: f64,
    /// `max_ratio^(1/d)`.
    pub c_hat: f64,
    pub all_within_budget: bool,
    pub kinds: BTreeMap<String, KindStats>,
}

#[derive(Debug, Clone)]
pub struct DualityOutput {
    /// One row per (instance, kind, alpha, seed): `lhs` primal count, `rhs`
    /// dual count.
    pub reports: Vec<CheckReport>,
    pub csv: String,
    pub summary: DualitySummary,
}

fn counts(inst: &Instance, kind: Kind, dim: usize, alpha: f64, seed: u64) -> Result<((usize, usize), (usize, usize))> {
    let t = kind.target();
    let opts = CoverOptions::default();
    if dim == 1 {
        let (p, q) = if kind.hilbert() {
            (
                exact_cover_1d(Metric::Hilbert(&inst.k), &inst.g, t, alpha)?,
                exact_cover_1d(Metric::Hilbert(&inst.g_polar), &inst.k_polar, t, alpha)?,
            )
        } else {
            (
                exact_cover_1d(Metric::Minkowski(&inst.d), &inst.c, t, alpha)?,
                exact_cover_1d(Metric::Minkowski(&inst.c_polar), &inst.d_polar, t, alpha)?,
            )
        };
        return Ok(((p, p), (q, q)));
    }
    let (p, q) = if kind.hilbert() {
        (
            covering_estimate(Metric::Hilbert(&inst.k), &inst.g, t, alpha, seed, opts)?,
            covering_estimate(Metric::Hilbert(&inst.g_polar), &inst.k_polar, t, alpha, seed, opts)?,
        )
    } else {
        (
            translative_cover_estimate(&inst.c, &inst.d, t, alpha, seed, opts)?,
            translative_cover_estimate(&inst.d_polar, &inst.c_polar, t, alpha, seed, opts)?,
        )
    };
    Ok(((p.upper, p.lower), (q.upper, q.lower)))
}

fn median(v: &mut [f64]) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n == 0 {
        f64::NAN
    } else if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Run the sweep. Rows are computed in parallel and assembled in the fixed
/// order instance, kind, alpha, seed. Counts come from greedy nets (exact
/// sweeps in 1D).
pub fn duality_experiment(cfg: &ExperimentConfig) -> Result<DualityOutput> {
    cfg.validate()?;
    if let Some(a) = cfg.alphas.iter().find(|a| **a > 1.0) {
        return Err(GeomError::RadiusOutOfRange { radius: *a, max: 1.0 });
    }
    if cfg.alphas.is_empty() || cfg.seeds.is_empty() {
        return Err(GeomError::ValidationError(
            "need at least one alpha and one seed".into(),
        ));
    }
    let insts = instances(cfg)?;
    let budget = duality_budget(cfg.dim);
    let mut tasks = Vec::new();
    for (i, _) in insts.iter().enumerate() {
        for kind in Kind::ALL {
            for &a in &cfg.alphas {
                for &s in &cfg.seeds {
                    tasks.push((i, kind, a, s));
                }
            }
        }
    }
    let reports: Vec<CheckReport> = tasks
        .par_iter()
        .map(|&(i, kind, alpha, seed)| -> Result<CheckReport> {
            let inst = &insts[i];
            let ((pu, pl), (qu, ql)) = counts(inst, kind, cfg.dim, alpha, seed)?;
            let (p, q) = (pu as f64, qu as f64);
            let spread = (p / q).max(q / p);
            Ok(CheckReport::new(
                &format!("{}:{}", kind.name(), inst.label),
                json!({"dim": cfg.dim, "alpha": alpha, "instance": inst.label, "kind": kind.name()}),
                p,
                q,
                0.0,
                spread <= budget,
            )
            .with_seed(seed)
            .with_detail("primal_lower", pl as f64)
            .with_detail("dual_lower", ql as f64))
        })
        .collect::<Result<_>>()?;
    let mut kinds = BTreeMap::new();
    for kind in Kind::ALL {
        let mut spreads: Vec<f64> = reports
            .iter()
            .filter(|r| r.inputs["kind"] == kind.name())
            .map(|r| r.ratio.max(1.0 / r.ratio))
            .collect();
        let max = spreads.iter().copied().fold(0.0, f64::max);
        kinds.insert(
            kind.name().to_string(),
            KindStats {
                rows: spreads.len(),
                max_ratio: max,
                median_ratio: median(&mut spreads),
            },
        );
    }
    let max_ratio = kinds.values().map(|k| k.max_ratio).fold(0.0, f64::max);
    let summary = DualitySummary {
        dim: cfg.dim,
        rows: reports.len(),
        budget,
        max_ratio,
        c_hat: max_ratio.powf(1.0 / cfg.dim as f64),
        all_within_budget: reports.iter().all(|r| r.pass),
        kinds,
    };
    for r in reports.iter().filter(|r| !r.pass) {
        log::warn!(
            "{} alpha {} seed {}: ratio {} over budget",
            r.check_id,
            r.inputs["alpha"],
            r.seed,
            r.ratio
        );
    }
    let csv = emit_report(&reports, ReportFormat::Csv, cfg.out.as_deref())?;
    Ok(DualityOutput { reports, csv, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(dim: usize) -> ExperimentConfig {
        ExperimentConfig {
            dim,
            alphas: vec![0.5, 1.0],
            seeds: vec![0, 1],
            instances: 2,
            ..Default::default()
        }
    }

    #[test]
    fn one_dimensional_sweep() {
        let out = duality_experiment(&small(1)).unwrap();
        assert_eq!(out.reports.len(), 2 * 4 * 2 * 2);
        assert!(out.summary.all_within_budget, "{:?}", out.summary);
        assert!(out.csv.starts_with("check_id,dim,alpha,seed"));
    }

    #[test]
    fn planar_sweep_is_repeatable() {
        let a = duality_experiment(&small(2)).unwrap();
        let b = duality_experiment(&small(2)).unwrap();
        assert_eq!(a.csv, b.csv);
        assert!(a.summary.max_ratio >= 1.0 && a.summary.c_hat <= a.summary.max_ratio);
    }

    #[test]
    fn rejects_large_alpha_and_bad_instances() {
        let mut c = small(2);
        c.alphas = vec![1.5];
        assert!(matches!(
            duality_experiment(&c),
            Err(GeomError::RadiusOutOfRange { .. })
        ));
        let mut c = small(2);
        c.bodies = vec!["cube".into()];
        assert!(matches!(duality_experiment(&c), Err(GeomError::ParseError(_))));
    }

    #[test]
    fn self_dual_disks() {
        let c = ExperimentConfig {
            bodies: vec!["ngon:64;ngon:64".into()],
            alphas: vec![0.5],
            seeds: vec![3],
            ..Default::default()
        };
        let out = duality_experiment(&c).unwrap();
        for r in &out.reports {
            assert!(r.ratio.max(1.0 / r.ratio) <= 1.5, "{r:?}");
        }
    }
}
