//! Registry of named checks. Every check is deterministic in its config.

use super::instances::{free_pair, nested_pair, symmetric_body};
use super::CheckReport;
use crate::body::{generate, hausdorff_distance, random_hull, ConvexBody, Halfspace, Subspace, SymMode};
use crate::config::{Tolerances, N_SAMPLES};
use crate::cover::{
    boundary_transfer_check, complementary_chord_2d, covering_estimate, expand_hilbert, expand_minkowski,
    fatness_check, relative_isoperimetry_sample, CoverOptions, IsoBall, TargetKind,
};
use crate::error::{GeomError, Result};
use crate::measures::sampling::UniformSampler;
use crate::measures::{
    ball_growth_profile, beta, ht_area_finsler, ht_area_minkowski, ht_area_minkowski_cauchy, ht_volume_finsler,
    ht_volume_minkowski, Finsler, GrowthGeometry, Normalization,
};
use crate::metrics::{
    finsler_sandwich_ratios, funk_distance, funk_distance_variational, hilbert_distance, minkowski_distance,
    projective_polar_map, sandwich_estimate, Metric,
};
use crate::Pt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::path::PathBuf;

/// A registered check and the statement it tests.
#[derive(Debug, Clone, Copy)]
pub struct CheckInfo {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Dimensions the check accepts.
    pub dims: &'static [usize],
}

const ANY: &[usize] = &[1, 2, 3];
const MULTI: &[usize] = &[2, 3];

pub const CHECKS: &[CheckInfo] = &[
    CheckInfo {
        id: "polar_involution",
        anchor: "polarity is an involution: (K°)° = K",
        dims: ANY,
    },
    CheckInfo {
        id: "slice_project_dual",
        anchor: "projection-section duality: (K ∩ E)° = proj_E(K°)",
        dims: MULTI,
    },
    CheckInfo {
        id: "funk_variational",
        anchor: "Funk distance as a supremum over the polar body",
        dims: ANY,
    },
    CheckInfo {
        id: "hilbert_additivity",
        anchor: "Hilbert distance is additive along chords",
        dims: ANY,
    },
    CheckInfo {
        id: "sandwich",
        anchor: "Macbeath-Hilbert sandwich M(x, σr) ⊆ B_H(x, r) ⊆ M(x, τr)",
        dims: ANY,
    },
    CheckInfo {
        id: "finsler_sandwich",
        anchor: "A(y) ⊆ Hilbert-Finsler unit ball ⊆ 2A(y)",
        dims: ANY,
    },
    CheckInfo {
        id: "polar_sum_gauge",
        anchor: "polar of a Minkowski sum: ‖u‖_(C+αD)° = ‖u‖_C° + α‖u‖_D°",
        dims: ANY,
    },
    CheckInfo {
        id: "mink_stability_sharp",
        anchor: "polarity-expansion stability, Minkowski: distortion 3 attained in 1D",
        dims: ANY,
    },
    CheckInfo {
        id: "hilb_stability_sharp",
        anchor: "polarity-expansion stability, Hilbert: distortion 3 attained in 1D",
        dims: ANY,
    },
    CheckInfo {
        id: "funk_vol_duality",
        anchor: "Funk Holmes-Thompson volume polarity vol_K(G) = vol_G°(K°)",
        dims: ANY,
    },
    CheckInfo {
        id: "funk_area_duality",
        anchor: "Funk Holmes-Thompson area polarity area_K(G) = area_G°(K°)",
        dims: ANY,
    },
    CheckInfo {
        id: "hilb_measure_polarity_beta",
        anchor: "Hilbert Holmes-Thompson polarity within β_d (volume), β_(d-1) (area)",
        dims: ANY,
    },
    CheckInfo {
        id: "mink_measure_duality",
        anchor: "Minkowski Holmes-Thompson polarity vol_D(C) = vol_C°(D°)",
        dims: ANY,
    },
    CheckInfo {
        id: "cauchy_area",
        anchor: "Cauchy formula for Minkowski Holmes-Thompson area",
        dims: MULTI,
    },
    CheckInfo {
        id: "busemann_cube_halfspace",
        anchor: "cube ball cut by a coordinate halfspace: Busemann ratio 1/(2d)",
        dims: ANY,
    },
    CheckInfo {
        id: "jacobian_symmetry",
        anchor: "det J_(x,y) = det J_(y,x) for the projective polar map",
        dims: ANY,
    },
    CheckInfo {
        id: "ball_growth",
        anchor: "Hilbert ball growth vol ≍ r^d, area ≍ r^(d-1)",
        dims: MULTI,
    },
    CheckInfo {
        id: "expansion_fatness",
        anchor: "α-expansions are relatively α-fat (Minkowski and Hilbert)",
        dims: ANY,
    },
    CheckInfo {
        id: "boundary_transfer",
        anchor: "points of ∂G reach ∂G₊ at Hilbert distance α",
        dims: ANY,
    },
    CheckInfo {
        id: "complementary_chord",
        anchor: "complementary chord exists through every interior point",
        dims: ANY,
    },
    CheckInfo {
        id: "rogers_shephard_union",
        anchor: "Rogers-Shephard: vol(C∪), vol(C - C) ≤ C(2d, d) vol(C)",
        dims: ANY,
    },
    CheckInfo {
        id: "core_cover_volume",
        anchor: "symmetric core keeps a 2^-d volume fraction",
        dims: ANY,
    },
];

pub fn check_info(id: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.id == id)
}

/// Parameters shared by checks and sweeps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub dim: usize,
    /// Sweep instances as `outer;inner` generator pairs. Empty: seeded random pairs.
    pub bodies: Vec<String>,
    /// Radii; checks use the first entry.
    pub alphas: Vec<f64>,
    pub n_samples: usize,
    pub n_dir: usize,
    /// Seeds; checks use the first entry.
    pub seeds: Vec<u64>,
    /// Instance count; 0 picks the check's default.
    pub instances: usize,
    pub out: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            dim: 2,
            bodies: Vec::new(),
            alphas: vec![0.1, 0.2, 0.5, 1.0],
            n_samples: N_SAMPLES,
            n_dir: 64,
            seeds: (0..5).collect(),
            instances: 0,
            out: None,
        }
    }
}

impl ExperimentConfig {
    fn alpha(&self) -> f64 {
        self.alphas.first().copied().unwrap_or(0.2)
    }

    fn seed(&self) -> u64 {
        self.seeds.first().copied().unwrap_or(0)
    }

    fn count(&self, default: usize) -> usize {
        if self.instances == 0 {
            default
        } else {
            self.instances
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.dim) {
            return Err(GeomError::ValidationError(format!(
                "dim must be 1, 2 or 3 (got {})",
                self.dim
            )));
        }
        if let Some(a) = self.alphas.iter().find(|a| !(**a > 0.0 && a.is_finite())) {
            return Err(GeomError::RadiusOutOfRange {
                radius: *a,
                max: f64::INFINITY,
            });
        }
        if self.n_samples < 2 || self.n_dir < 2 {
            return Err(GeomError::ValidationError("samples and ndir must be at least 2".into()));
        }
        Ok(())
    }
}

/// Run a registered check.
pub fn run_check(id: &str, cfg: &ExperimentConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let f: fn(&ExperimentConfig) -> Result<CheckReport> = match id {
        "polar_involution" => polar_involution,
        "slice_project_dual" => slice_project_dual,
        "funk_variational" => funk_variational,
        "hilbert_additivity" => hilbert_additivity,
        "sandwich" => sandwich,
        "finsler_sandwich" => finsler_sandwich,
        "polar_sum_gauge" => polar_sum_gauge,
        "mink_stability_sharp" => mink_stability_sharp,
        "hilb_stability_sharp" => hilb_stability_sharp,
        "funk_vol_duality" => funk_vol_duality,
        "funk_area_duality" => funk_area_duality,
        "hilb_measure_polarity_beta" => hilb_measure_polarity,
        "mink_measure_duality" => mink_measure_duality,
        "cauchy_area" => cauchy_area,
        "busemann_cube_halfspace" => busemann_cube_halfspace,
        "jacobian_symmetry" => jacobian_symmetry,
        "ball_growth" => ball_growth,
        "expansion_fatness" => expansion_fatness,
        "boundary_transfer" => boundary_transfer,
        "complementary_chord" => complementary_chord,
        "rogers_shephard_union" => rogers_shephard,
        "core_cover_volume" => core_cover_volume,
        _ => return Err(GeomError::UnknownCheck(id.to_string())),
    };
    Ok(f(cfg)?.with_seed(cfg.seed()))
}

fn rng(cfg: &ExperimentConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed() ^ salt)
}

fn body(dim: usize, i: usize, seed: u64) -> Result<ConvexBody> {
    random_hull(dim, dim + 4 + i % 6, seed.wrapping_mul(7919).wrapping_add(i as u64))
}

/// Uniform point of `s·K`.
fn interior_point(k: &ConvexBody, s: f64, rng: &mut ChaCha8Rng) -> Result<Pt> {
    Ok(UniformSampler::new(&k.scale_by(s)?).sample(rng))
}

fn unit_vector(dim: usize, rng: &mut ChaCha8Rng) -> Pt {
    loop {
        let mut u = Pt::zeros();
        for k in 0..dim {
            u[k] = rng.random_range(-1.0..1.0);
        }
        let n = u.norm();
        if n > 0.1 && n <= 1.0 {
            return u / n;
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}

fn within(id: &str, inputs: serde_json::Value, worst: f64, tol: f64) -> CheckReport {
    CheckReport::new(id, inputs, worst, tol, tol, worst <= tol)
}

fn polar_involution(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(20);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let k = body(cfg.dim, i, cfg.seed())?;
        worst = worst.max(hausdorff_distance(&k.polar()?.polar()?, &k)?);
    }
    let tol = Tolerances::default().exact;
    Ok(within(
        "polar_involution",
        json!({"dim": cfg.dim, "instances": n}),
        worst,
        tol,
    ))
}

fn slice_project_dual(cfg: &ExperimentConfig) -> Result<CheckReport> {
    if cfg.dim < 2 {
        return Err(GeomError::ValidationError("slice_project_dual needs dim 2 or 3".into()));
    }
    let n = cfg.count(100);
    let mut r = rng(cfg, 0x51);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let k = body(cfg.dim, i, cfg.seed())?;
        let u = unit_vector(cfg.dim, &mut r);
        let e = if cfg.dim == 3 && i % 2 == 1 {
            Subspace::plane(u)?
        } else {
            Subspace::line(cfg.dim, u)?
        };
        worst = worst.max(crate::body::slice_project_dual_residual(&k, &e)?);
    }
    let tol = Tolerances::default().dual;
    Ok(within(
        "slice_project_dual",
        json!({"dim": cfg.dim, "instances": n}),
        worst,
        tol,
    ))
}

fn funk_variational(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(200);
    let mut r = rng(cfg, 0xf0);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let k = body(cfg.dim, i / 10, cfg.seed())?;
        let x = interior_point(&k, 0.95, &mut r)?;
        let y = interior_point(&k, 0.95, &mut r)?;
        let a = funk_distance(&k, &x, &y)?;
        let b = funk_distance_variational(&k, &x, &y)?;
        worst = worst.max((a - b).abs());
    }
    let tol = Tolerances::default().metric;
    Ok(within(
        "funk_variational",
        json!({"dim": cfg.dim, "instances": n}),
        worst,
        tol,
    ))
}

fn hilbert_additivity(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(200);
    let mut r = rng(cfg, 0xad);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let k = body(cfg.dim, i / 10, cfg.seed())?;
        let x = interior_point(&k, 0.95, &mut r)?;
        let z = interior_point(&k, 0.95, &mut r)?;
        let y = x + (z - x) * r.random_range(0.0..1.0);
        let whole = hilbert_distance(&k, &x, &z)?;
        let parts = hilbert_distance(&k, &x, &y)? + hilbert_distance(&k, &y, &z)?;
        worst = worst.max((whole - parts).abs());
    }
    let tol = Tolerances::default().metric;
    Ok(within(
        "hilbert_additivity",
        json!({"dim": cfg.dim, "instances": n}),
        worst,
        tol,
    ))
}

/// Radial ratios `ρ_H(u) / (r min(t+, t-))` lie in
/// `[tanh(r)/r, (e^{2r} - 1)/r]`: the two extremes are `t+ = t-` and
/// `t- = min`, `t+ -> ∞`.
fn sandwich(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(20);
    let mut r = rng(cfg, 0x5a);
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    let (mut sigma, mut tau) = (f64::INFINITY, 0.0f64);
    for i in 0..n {
        let k = body(cfg.dim, i, cfg.seed())?;
        let x = interior_point(&k, 0.7, &mut r)?;
        for rad in [0.1, 0.5, 1.0] {
            let s = sandwich_estimate(&k, &x, rad, cfg.n_dir)?;
            lo = lo.min(s.sigma_hat * rad / rad.tanh());
            hi = hi.max(s.tau_hat * rad / (2.0 * rad).exp_m1());
            sigma = sigma.min(s.sigma_hat);
            tau = tau.max(s.tau_hat);
        }
    }
    let tol = Tolerances::default().exact;
    let pass = lo >= 1.0 - tol && hi <= 1.0 + tol;
    Ok(CheckReport::new(
        "sandwich",
        json!({"dim": cfg.dim, "instances": n, "radii": [0.1, 0.5, 1.0]}),
        lo,
        hi,
        tol,
        pass,
    )
    .with_detail("sigma_hat", sigma)
    .with_detail("tau_hat", tau))
}

fn finsler_sandwich(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(20);
    let mut r = rng(cfg, 0xf5);
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for i in 0..n {
        let k = body(cfg.dim, i, cfg.seed())?;
        let x = interior_point(&k, 0.9, &mut r)?;
        let (a, b) = finsler_sandwich_ratios(&k, &x, cfg.n_dir)?;
        lo = lo.min(a);
        hi = hi.max(b);
    }
    let tol = Tolerances::default().exact;
    let pass = lo >= 1.0 - tol && hi <= 2.0 + tol;
    Ok(CheckReport::new(
        "finsler_sandwich",
        json!({"dim": cfg.dim, "instances": n}),
        lo,
        hi,
        tol,
        pass,
    ))
}

fn polar_sum_gauge(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(10);
    let a = cfg.alpha();
    let mut r = rng(cfg, 0x95);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let c = body(cfg.dim, i, cfg.seed())?;
        let d = symmetric_body(cfg.dim, i as u64, cfg.seed())?;
        let sum_polar = c.minkowski_sum(&d.scale_by(a)?)?.polar()?;
        let (cp, dp) = (c.polar()?, d.polar()?);
        for _ in 0..32 {
            let u = unit_vector(cfg.dim, &mut r);
            let lhs = sum_polar.gauge(&u)?;
            let rhs = cp.gauge(&u)? + a * dp.gauge(&u)?;
            worst = worst.max(rel(lhs, rhs));
        }
    }
    let tol = Tolerances::default().exact;
    Ok(within(
        "polar_sum_gauge",
        json!({"dim": cfg.dim, "alpha": a, "instances": n}),
        worst,
        tol,
    ))
}

fn sharp_report(id: &str, a: f64, lhs: f64, rhs: f64) -> CheckReport {
    let tol = Tolerances::default().exact;
    let mut rep = CheckReport::new(
        id,
        json!({"dim": 1, "alpha": a, "p": 1.0, "x": -1.0}),
        lhs,
        rhs,
        tol,
        false,
    );
    rep.ratio = rhs / lhs;
    rep.pass = (rep.ratio - 3.0).abs() <= tol;
    rep
}

/// `D = [-1, 1]`, `C = [-α/2, α/2]`, `p = 1`, `x = -1`.
fn mink_stability_sharp(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let a = cfg.alpha();
    let d = ConvexBody::interval(-1.0, 1.0)?;
    let c = ConvexBody::interval(-a / 2.0, a / 2.0)?;
    let c_plus = expand_minkowski(&c, &d, a)?;
    let (p, x) = (Pt::new(1.0, 0.0, 0.0), Pt::new(-1.0, 0.0, 0.0));
    let lhs = minkowski_distance(&c.polar()?, &p, &x)?;
    let rhs = minkowski_distance(&c_plus.polar()?, &p, &x)?;
    Ok(sharp_report("mink_stability_sharp", a, lhs, rhs))
}

/// `K = [-1, 1]`, `G = [-tanh(α/2), tanh(α/2)]`, `p = 1`, `x = -1`.
fn hilb_stability_sharp(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let a = cfg.alpha();
    if a > 1.0 {
        return Err(GeomError::RadiusOutOfRange { radius: a, max: 1.0 });
    }
    let k = ConvexBody::interval(-1.0, 1.0)?;
    let h = (a / 2.0).tanh();
    let g = ConvexBody::interval(-h, h)?;
    let g_plus = expand_hilbert(&k, &g, a, 2, 1e-15)?;
    let (p, x) = (Pt::new(1.0, 0.0, 0.0), Pt::new(-1.0, 0.0, 0.0));
    let lhs = hilbert_distance(&g.polar()?, &p, &x)?;
    let rhs = hilbert_distance(&g_plus.polar()?, &p, &x)?;
    Ok(sharp_report("hilb_stability_sharp", a, lhs, rhs))
}

fn pair_inputs(cfg: &ExperimentConfig, n: usize) -> serde_json::Value {
    json!({"dim": cfg.dim, "instances": n, "samples": cfg.n_samples})
}

fn funk_vol_duality(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(20);
    let (mut worst_z, mut worst_rel, mut se_at_worst) = (0.0f64, 0.0f64, 0.0);
    for i in 0..n {
        let (k, g) = nested_pair(cfg.dim, i as u64, cfg.seed())?;
        let (kp, gp) = (k.polar()?, g.polar()?);
        let s = cfg.seed().wrapping_mul(2 * n as u64 + 1) + 2 * i as u64;
        let a = ht_volume_finsler(Finsler::Funk(&k), &g, cfg.n_samples, s)?;
        let b = ht_volume_finsler(Finsler::Funk(&gp), &kp, cfg.n_samples, s + 1)?;
        let se = a.std_error.hypot(b.std_error);
        let z = (a.value - b.value).abs() / se;
        if z > worst_z {
            worst_z = z;
            se_at_worst = se;
        }
        worst_rel = worst_rel.max(rel(a.value, b.value));
    }
    let k = Tolerances::default().mc_sigmas;
    Ok(
        CheckReport::new("funk_vol_duality", pair_inputs(cfg, n), worst_z, k, k, worst_z <= k)
            .with_detail("std_error", se_at_worst)
            .with_detail("max_rel_diff", worst_rel),
    )
}

fn funk_area_duality(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(20);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let (k, g) = nested_pair(cfg.dim, i as u64, cfg.seed())?;
        let (kp, gp) = (k.polar()?, g.polar()?);
        let a = ht_area_finsler(Finsler::Funk(&k), &g, 8)?.value;
        let b = ht_area_finsler(Finsler::Funk(&gp), &kp, 8)?.value;
        worst = worst.max(rel(a, b));
    }
    let tol = Tolerances::default().quadrature_rel;
    Ok(within(
        "funk_area_duality",
        json!({"dim": cfg.dim, "instances": n}),
        worst,
        tol,
    ))
}

/// Volume band `β_d` and area band `β_{d-1}`, each widened by 5% for sampling.
fn hilb_measure_polarity(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(20);
    let slack = 1.05;
    let (vol_band, area_band) = (beta(cfg.dim) * slack, beta(cfg.dim - 1).max(1.0) * slack);
    let (mut worst_vol, mut worst_area) = (1.0f64, 1.0f64);
    for i in 0..n {
        let (k, g) = nested_pair(cfg.dim, i as u64, cfg.seed())?;
        let (kp, gp) = (k.polar()?, g.polar()?);
        let s = cfg.seed().wrapping_mul(2 * n as u64 + 1) + 2 * i as u64;
        let a = ht_volume_finsler(Finsler::Hilbert(&k), &g, cfg.n_samples, s)?.value;
        let b = ht_volume_finsler(Finsler::Hilbert(&gp), &kp, cfg.n_samples, s + 1)?.value;
        worst_vol = worst_vol.max(a / b).max(b / a);
        let a = ht_area_finsler(Finsler::Hilbert(&k), &g, 8)?.value;
        let b = ht_area_finsler(Finsler::Hilbert(&gp), &kp, 8)?.value;
        worst_area = worst_area.max(a / b).max(b / a);
    }
    let pass = worst_vol <= vol_band && worst_area <= area_band;
    Ok(CheckReport::new(
        "hilb_measure_polarity_beta",
        pair_inputs(cfg, n),
        worst_vol,
        vol_band,
        slack - 1.0,
        pass,
    )
    .with_detail("area_ratio", worst_area)
    .with_detail("area_band", area_band))
}

fn mink_measure_duality(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(20);
    let (mut worst_vol, mut worst_area) = (0.0f64, 0.0f64);
    for i in 0..n {
        let c = symmetric_body(cfg.dim, 2 * i as u64, cfg.seed())?;
        let d = symmetric_body(cfg.dim, 2 * i as u64 + 1, cfg.seed())?;
        let (cp, dp) = (c.polar()?, d.polar()?);
        worst_vol = worst_vol.max(rel(
            ht_volume_minkowski(&d, &c)?.value,
            ht_volume_minkowski(&cp, &dp)?.value,
        ));
        worst_area = worst_area.max(rel(
            ht_area_minkowski(&d, &c)?.value,
            ht_area_minkowski(&cp, &dp)?.value,
        ));
    }
    let tol = Tolerances::default().dual;
    let worst = worst_vol.max(worst_area);
    Ok(within(
        "mink_measure_duality",
        json!({"dim": cfg.dim, "instances": n}),
        worst,
        tol,
    )
    .with_detail("vol_rel_diff", worst_vol)
    .with_detail("area_rel_diff", worst_area))
}

fn cauchy_area(cfg: &ExperimentConfig) -> Result<CheckReport> {
    if cfg.dim < 2 {
        return Err(GeomError::ValidationError("cauchy_area needs dim 2 or 3".into()));
    }
    let n = cfg.count(20);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let d = symmetric_body(cfg.dim, i as u64, cfg.seed())?;
        let c = body(cfg.dim, i, cfg.seed())?;
        worst = worst.max(rel(
            ht_area_minkowski(&d, &c)?.value,
            ht_area_minkowski_cauchy(&d, &c)?.value,
        ));
    }
    let tol = Tolerances::default().dual;
    Ok(within(
        "cauchy_area",
        json!({"dim": cfg.dim, "instances": n}),
        worst,
        tol,
    ))
}

/// Unit cube ball at the origin, `E = [-3, 0] x [-3, 3]^{d-1}`.
fn busemann_cube_halfspace(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let dim = cfg.dim;
    let d = generate("cube", dim)?;
    let mut pts = Vec::new();
    for mask in 0..(1usize << dim) {
        let mut p = Pt::zeros();
        p[0] = if mask & 1 == 0 { -3.0 } else { 0.0 };
        for j in 1..dim {
            p[j] = if mask >> j & 1 == 0 { -3.0 } else { 3.0 };
        }
        pts.push(p);
    }
    let e = ConvexBody::from_points(dim, &pts)?;
    let s = relative_isoperimetry_sample(
        IsoBall::Minkowski {
            d: &d,
            center: Pt::zeros(),
            r: 1.0,
        },
        &e,
        Normalization::Busemann,
    )?;
    let want = 1.0 / (2.0 * dim as f64);
    let tol = Tolerances::default().exact;
    Ok(CheckReport::new(
        "busemann_cube_halfspace",
        json!({"dim": dim}),
        s.beta,
        want,
        tol,
        (s.beta - want).abs() <= tol,
    )
    .with_detail("mu", s.mu))
}

fn jacobian_symmetry(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(10_000);
    let mut r = rng(cfg, 0x1a);
    let mut worst: f64 = 0.0;
    for _ in 0..n {
        let x = unit_vector(cfg.dim, &mut r) * r.random_range(0.0..0.8);
        let y = unit_vector(cfg.dim, &mut r) * r.random_range(0.0..0.8);
        let (_, _, a) = projective_polar_map(&x, &y, cfg.dim)?;
        let (_, _, b) = projective_polar_map(&y, &x, cfg.dim)?;
        worst = worst.max((a - b).abs());
    }
    let tol = Tolerances::default().jacobian;
    Ok(within(
        "jacobian_symmetry",
        json!({"dim": cfg.dim, "instances": n}),
        worst,
        tol,
    ))
}

/// Log-log slopes of Hilbert ball measures over `r ∈ [0.05, 1]` must lie
/// within 0.1 of `d` (volume) and `d - 1` (area).
fn ball_growth(cfg: &ExperimentConfig) -> Result<CheckReport> {
    if cfg.dim < 2 {
        return Err(GeomError::ValidationError("ball_growth needs dim 2 or 3".into()));
    }
    let n = cfg.count(5);
    let radii: Vec<f64> = (0..8).map(|j| 0.05 * 20f64.powf(j as f64 / 7.0)).collect();
    let dim = cfg.dim as f64;
    let (mut vmin, mut vmax, mut amin, mut amax) = (f64::INFINITY, 0.0f64, f64::INFINITY, 0.0f64);
    for i in 0..n {
        let k = body(cfg.dim, i, cfg.seed())?;
        let prof = ball_growth_profile(GrowthGeometry::Hilbert(&k), &Pt::zeros(), &radii, cfg.n_dir.max(128))?;
        vmin = vmin.min(prof.slope_vol);
        vmax = vmax.max(prof.slope_vol);
        amin = amin.min(prof.slope_area);
        amax = amax.max(prof.slope_area);
    }
    let worst = (vmin - dim)
        .abs()
        .max((vmax - dim).abs())
        .max((amin - dim + 1.0).abs())
        .max((amax - dim + 1.0).abs());
    Ok(within(
        "ball_growth",
        json!({"dim": cfg.dim, "instances": n, "r_min": 0.05, "r_max": 1.0}),
        worst,
        0.1,
    )
    .with_detail("slope_vol_min", vmin)
    .with_detail("slope_vol_max", vmax)
    .with_detail("slope_area_min", amin)
    .with_detail("slope_area_max", amax))
}

/// Minkowski expansions must keep a `2^-d - 0.02` volume fraction; Hilbert
/// expansions (2D) must keep more than 0.1.
fn expansion_fatness(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(5);
    let a = cfg.alpha();
    let gamma = 0.5f64.powi(cfg.dim as i32) - 0.02;
    let (mut mink, mut mink_area) = (f64::INFINITY, f64::INFINITY);
    let (mut hilb, mut hilb_area) = (f64::INFINITY, f64::INFINITY);
    for i in 0..n {
        let (c, _) = free_pair(cfg.dim, i as u64, cfg.seed())?;
        let d = symmetric_body(cfg.dim, i as u64, cfg.seed())?;
        let e = expand_minkowski(&c, &d, a)?;
        let rep = fatness_check(Metric::Minkowski(&d), &e, a, gamma, 16)?;
        mink = mink.min(rep.lhs);
        mink_area = mink_area.min(rep.detail["min_area_fraction"]);
        if cfg.dim == 2 && a <= 1.0 {
            let (k, g) = nested_pair(2, i as u64, cfg.seed())?;
            let e = expand_hilbert(&k, &g, a, cfg.n_dir.max(64), 1e-10)?;
            let rep = fatness_check(Metric::Hilbert(&k), &e, a, 0.1, 16)?;
            hilb = hilb.min(rep.lhs);
            hilb_area = hilb_area.min(rep.detail["min_area_fraction"]);
        }
    }
    let pass = mink >= gamma && (hilb.is_infinite() || hilb > 0.1);
    let mut rep = CheckReport::new(
        "expansion_fatness",
        json!({"dim": cfg.dim, "alpha": a, "instances": n}),
        mink,
        gamma,
        0.02,
        pass,
    )
    .with_detail("minkowski_min_area_fraction", mink_area);
    if hilb.is_finite() {
        rep = rep
            .with_detail("hilbert_min_fraction", hilb)
            .with_detail("hilbert_min_area_fraction", hilb_area);
    }
    Ok(rep)
}

fn boundary_transfer(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(10);
    let a = cfg.alpha().min(1.0);
    let (mut hits, mut total, mut worst, mut chord) = (0.0, 0.0, 0.0f64, 0.0f64);
    for i in 0..n {
        let (k, g) = nested_pair(2, i as u64, cfg.seed())?;
        let rep = boundary_transfer_check(Metric::Hilbert(&k), &g, a, 20)?;
        let probes = rep.inputs["n_probes"].as_f64().unwrap_or(0.0);
        hits += rep.detail["hit_rate"] * probes;
        total += probes;
        worst = worst.max(rep.lhs);
        chord = chord.max(rep.detail["max_chord_residual"]);
    }
    let tol = Tolerances::default().transfer;
    let rate = hits / total;
    Ok(CheckReport::new(
        "boundary_transfer",
        json!({"dim": 2, "alpha": a, "instances": n, "probes": total}),
        worst,
        tol,
        tol,
        rate == 1.0 && worst <= tol,
    )
    .with_detail("hit_rate", rate)
    .with_detail("max_chord_residual", chord))
}

fn complementary_chord(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(100);
    let mut r = rng(cfg, 0xcc);
    let (mut worst, mut end_err) = (0.0f64, 0.0f64);
    for i in 0..n {
        let k = body(2, i, cfg.seed())?;
        let x = interior_point(&k, 0.8, &mut r)?;
        let m = unit_vector(2, &mut r);
        let h = Halfspace::new(m, m.dot(&x))?;
        let ch = complementary_chord_2d(&k, &x, &h)?;
        worst = worst.max(ch.residual);
        end_err = end_err.max(k.max_excess(&ch.a).abs()).max(k.max_excess(&ch.b).abs());
    }
    let tol = Tolerances::default().chord;
    Ok(
        within("complementary_chord", json!({"dim": 2, "instances": n}), worst, tol)
            .with_detail("max_end_offset", end_err),
    )
}

fn binomial(n: u64, k: u64) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * (n - k + i) as f64 / i as f64)
}

fn rogers_shephard(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(50);
    let bound = binomial(2 * cfg.dim as u64, cfg.dim as u64);
    let (mut union, mut diff) = (0.0f64, 0.0f64);
    for i in 0..n {
        let c = body(cfg.dim, i, cfg.seed() ^ 0x7e)?;
        let v = c.volume();
        union = union.max(c.symmetrize(SymMode::Union)?.volume() / v);
        diff = diff.max(c.symmetrize(SymMode::Difference)?.volume() / v);
    }
    let worst = union.max(diff);
    Ok(CheckReport::new(
        "rogers_shephard_union",
        json!({"dim": cfg.dim, "instances": n}),
        worst,
        bound,
        0.0,
        worst <= bound,
    )
    .with_detail("union_ratio", union)
    .with_detail("difference_ratio", diff))
}

/// `vol(D ∩ -D) >= 2^-d vol(D)` for centroid-centered `D`; the ratio of
/// greedy net sizes under the core and under `D` is reported.
fn core_cover_volume(cfg: &ExperimentConfig) -> Result<CheckReport> {
    let n = cfg.count(20);
    let bound = 0.5f64.powi(cfg.dim as i32);
    let a = cfg.alpha();
    let (mut worst, mut nets) = (f64::INFINITY, 0.0f64);
    for i in 0..n {
        let (d, u) = free_pair(cfg.dim, i as u64, cfg.seed() ^ 0xc0)?;
        let core = d.symmetrize(SymMode::Core)?;
        worst = worst.min(core.volume() / d.volume());
        if i < 5 && cfg.dim <= 2 {
            let opts = CoverOptions::default();
            let nd = covering_estimate(Metric::Minkowski(&d), &u, TargetKind::Body, a, cfg.seed(), opts)?.upper;
            let nc = covering_estimate(Metric::Minkowski(&core), &u, TargetKind::Body, a, cfg.seed(), opts)?.upper;
            nets = nets.max(nc as f64 / nd as f64);
        }
    }
    Ok(CheckReport::new(
        "core_cover_volume",
        json!({"dim": cfg.dim, "alpha": a, "instances": n}),
        worst,
        bound,
        0.0,
        worst >= bound,
    )
    .with_detail("net_ratio", nets))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(alpha: f64) -> ExperimentConfig {
        ExperimentConfig {
            alphas: vec![alpha],
            ..Default::default()
        }
    }

    #[test]
    fn registry_matches_dispatch() {
        assert_eq!(CHECKS.len(), 22);
        let bad = run_check("nope", &ExperimentConfig::default()).unwrap_err();
        assert_eq!(bad, GeomError::UnknownCheck("nope".into()));
        for c in CHECKS {
            assert!(!c.anchor.is_empty());
        }
    }

    #[test]
    fn sharp_distortion_examples() {
        let r = run_check("mink_stability_sharp", &cfg(0.2)).unwrap();
        assert!((r.lhs - 0.2).abs() < 1e-15 && (r.rhs - 0.6).abs() < 1e-15, "{r:?}");
        assert!(r.pass);
        let r = run_check("hilb_stability_sharp", &cfg(0.3)).unwrap();
        assert!((r.lhs - 0.3).abs() < 1e-12 && (r.ratio - 3.0).abs() < 1e-9, "{r:?}");
    }

    #[test]
    fn cheap_checks_pass_and_repeat() {
        for id in [
            "polar_involution",
            "jacobian_symmetry",
            "rogers_shephard_union",
            "busemann_cube_halfspace",
        ] {
            let a = run_check(id, &ExperimentConfig::default()).unwrap();
            let b = run_check(id, &ExperimentConfig::default()).unwrap();
            assert!(a.pass, "{a:?}");
            assert_eq!(a, b);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6.0);
        assert_eq!(binomial(6, 3), 20.0);
    }
}
