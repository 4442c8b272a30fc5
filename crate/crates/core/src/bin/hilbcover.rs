use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hilbcover::cover::{covering_estimate, translative_cover_estimate, CoverOptions, TargetKind};
use hilbcover::harness::{
    duality_experiment, emit_report, init_threads, parse_body_spec, parse_point, run_check, CheckReport,
    ExperimentConfig, ReportFormat, CHECKS,
};
use hilbcover::measures::{ht_area_finsler, ht_area_minkowski, ht_volume_finsler, ht_volume_minkowski, Finsler};
use hilbcover::metrics::{funk_distance, hilbert_ball, hilbert_distance, minkowski_distance};
use hilbcover::{ConvexBody, Pt};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hilbcover",
    version,
    about = "Funk, Hilbert and Minkowski geometry on convex polytopes"
)]
struct Cli {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 2)]
    dim: usize,
    /// Radius (checks, balls, covers); sweeps use it as a one-point grid.
    #[arg(long, global = true)]
    alpha: Option<f64>,
    #[arg(long, global = true, default_value_t = hilbcover::config::N_SAMPLES)]
    samples: usize,
    #[arg(long, global = true, default_value_t = 64)]
    ndir: usize,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// json or csv (reports only)
    #[arg(long, global = true)]
    format: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Geometry {
    Funk,
    Hilbert,
    Minkowski,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverMetric {
    Hilbert,
    Translative,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Body,
    Boundary,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a body from JSON or a generator and print it.
    Body { spec: String },
    /// Funk, Hilbert and gauge distances between two points.
    Dist { body: String, x: String, y: String },
    /// Hilbert ball of radius --alpha around a point.
    Ball { body: String, x: String },
    /// Holmes-Thompson volume and area of REGION in the geometry of AMBIENT.
    Measure {
        ambient: String,
        region: String,
        #[arg(long, value_enum, default_value = "hilbert")]
        geometry: Geometry,
    },
    /// Covering-number bracket of TARGET by radius --alpha balls.
    Cover {
        ambient: String,
        target: String,
        #[arg(long, value_enum, default_value = "hilbert")]
        metric: CoverMetric,
        #[arg(long = "kind", value_enum, default_value = "body")]
        kind: Target,
    },
    /// Run a named check (or `all`); exit code 0 iff every check passes.
    Check { id: String },
    /// Covering-duality sweep; CSV rows plus a JSON summary on stderr.
    Sweep {
        /// Instances as `outer;inner` body pairs (repeatable).
        #[arg(long = "instance")]
        instances: Vec<String>,
    },
    /// List check ids with the statement each one tests.
    ListChecks,
}

fn coords(p: &Pt, dim: usize) -> Vec<f64> {
    p.iter().take(dim).copied().collect()
}

fn body_json(b: &ConvexBody) -> Value {
    let d = b.dim();
    json!({
        "name": b.name(),
        "dim": d,
        "scale": b.scale(),
        "vertices": b.vertices().iter().map(|v| coords(v, d)).collect::<Vec<_>>(),
        "facets": b.facets().iter().map(|h| json!({"normal": coords(&h.normal, d), "offset": h.offset})).collect::<Vec<_>>(),
        "volume": b.volume(),
        "boundary_area": b.boundary_area(),
        "centrally_symmetric": b.centrally_symmetric(),
        "origin_interior": b.contains_origin_interior(),
    })
}

fn write_out(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_json(v: &Value, out: &Option<PathBuf>) -> Result<()> {
    write_out(&(serde_json::to_string_pretty(v)? + "\n"), out)
}

fn format(cli: &Cli, default: ReportFormat) -> Result<ReportFormat> {
    Ok(match &cli.format {
        Some(f) => f.parse()?,
        None => default,
    })
}

fn config(cli: &Cli) -> ExperimentConfig {
    let mut c = ExperimentConfig {
        dim: cli.dim,
        n_samples: cli.samples,
        n_dir: cli.ndir,
        seeds: (cli.seed..cli.seed + 5).collect(),
        out: cli.out.clone(),
        ..Default::default()
    };
    if let Some(a) = cli.alpha {
        c.alphas = vec![a];
    }
    c
}

fn run(cli: &Cli) -> Result<bool> {
    let dim = cli.dim;
    match &cli.cmd {
        Cmd::Body { spec } => write_json(&body_json(&parse_body_spec(spec, dim)?), &cli.out)?,
        Cmd::Dist { body, x, y } => {
            let k = parse_body_spec(body, dim)?;
            let (x, y) = (parse_point(x, k.dim())?, parse_point(y, k.dim())?);
            let gauge = if k.contains_origin_interior() {
                Some(minkowski_distance(&k, &x, &y)?)
            } else {
                None
            };
            write_json(
                &json!({
                    "funk": funk_distance(&k, &x, &y)?,
                    "funk_reverse": funk_distance(&k, &y, &x)?,
                    "hilbert": hilbert_distance(&k, &x, &y)?,
                    "gauge": gauge,
                }),
                &cli.out,
            )?;
        }
        Cmd::Ball { body, x } => {
            let k = parse_body_spec(body, dim)?;
            let x = parse_point(x, k.dim())?;
            let r = cli.alpha.unwrap_or(0.5);
            let ball = hilbert_ball(&k, &x, r, cli.ndir)?;
            let poly = ball.to_body()?;
            write_json(
                &json!({
                    "center": coords(&x, k.dim()),
                    "radius": r,
                    "points": ball.points().iter().map(|p| coords(p, k.dim())).collect::<Vec<_>>(),
                    "volume": poly.volume(),
                }),
                &cli.out,
            )?;
        }
        Cmd::Measure {
            ambient,
            region,
            geometry,
        } => {
            let k = parse_body_spec(ambient, dim)?;
            let u = parse_body_spec(region, dim)?;
            let (vol, area) = match geometry {
                Geometry::Minkowski => (ht_volume_minkowski(&k, &u)?, ht_area_minkowski(&k, &u)?),
                Geometry::Funk | Geometry::Hilbert => {
                    let g = if matches!(geometry, Geometry::Funk) {
                        Finsler::Funk(&k)
                    } else {
                        Finsler::Hilbert(&k)
                    };
                    (
                        ht_volume_finsler(g, &u, cli.samples, cli.seed)?,
                        ht_area_finsler(g, &u, hilbcover::config::QUAD_ORDER)?,
                    )
                }
            };
            write_json(&json!({"volume": vol, "area": area}), &cli.out)?;
        }
        Cmd::Cover {
            ambient,
            target,
            metric,
            kind,
        } => {
            let a = parse_body_spec(ambient, dim)?;
            let g = parse_body_spec(target, dim)?;
            let alpha = cli.alpha.unwrap_or(0.5);
            let t = match kind {
                Target::Body => TargetKind::Body,
                Target::Boundary => TargetKind::Boundary,
            };
            let opts = CoverOptions {
                n_dir: cli.ndir,
                ..Default::default()
            };
            let est = match metric {
                CoverMetric::Hilbert => {
                    covering_estimate(hilbcover::metrics::Metric::Hilbert(&a), &g, t, alpha, cli.seed, opts)?
                }
                CoverMetric::Translative => translative_cover_estimate(&g, &a, t, alpha, cli.seed, opts)?,
            };
            write_json(&serde_json::to_value(est)?, &cli.out)?;
        }
        Cmd::Check { id } => {
            let mut cfg = config(cli);
            cfg.seeds = vec![cli.seed];
            let ids: Vec<&str> = if id == "all" {
                CHECKS.iter().filter(|c| c.dims.contains(&dim)).map(|c| c.id).collect()
            } else {
                vec![id.as_str()]
            };
            let reports: Vec<CheckReport> = ids
                .iter()
                .map(|i| run_check(i, &cfg))
                .collect::<hilbcover::Result<_>>()?;
            let text = emit_report(&reports, format(cli, ReportFormat::Json)?, cli.out.as_deref())?;
            if cli.out.is_none() {
                print!("{text}");
            }
            for r in &reports {
                eprintln!("{:<28} {}", r.check_id, if r.pass { "PASS" } else { "FAIL" });
            }
            return Ok(reports.iter().all(|r| r.pass));
        }
        Cmd::Sweep { instances } => {
            let mut cfg = config(cli);
            cfg.bodies = instances.clone();
            cfg.out = None;
            let out = duality_experiment(&cfg)?;
            let text = emit_report(&out.reports, format(cli, ReportFormat::Csv)?, cli.out.as_deref())?;
            if cli.out.is_none() {
                print!("{text}");
            }
            eprintln!("{}", serde_json::to_string_pretty(&out.summary)?);
            return Ok(out.summary.all_within_budget);
        }
        Cmd::ListChecks => {
            let mut s = String::new();
            for c in CHECKS {
                s.push_str(&format!("{:<28} {}\n", c.id, c.anchor));
            }
            write_out(&s, &cli.out)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    init_threads();
    let cli = Cli::parse();
    if !(1..=3).contains(&cli.dim) {
        eprintln!("error: --dim must be 1, 2 or 3");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
