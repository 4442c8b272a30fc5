//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs with `harness = false`; exits non-zero if any criterion fails.

use hilbcover::body::ConvexBody;
use hilbcover::harness::instances::{free_pair, nested_pair};
use hilbcover::harness::{duality_experiment, run_check, CheckReport, ExperimentConfig};
use hilbcover::measures::ht_volume_minkowski;
use hilbcover::SymMode;
use sha2::{Digest, Sha256};
use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

type Outcome = Result<(), String>;

fn cfg(dim: usize, alpha: f64) -> ExperimentConfig {
    ExperimentConfig {
        dim,
        alphas: vec![alpha],
        seeds: vec![0],
        ..Default::default()
    }
}

fn check(id: &str, c: &ExperimentConfig) -> Result<CheckReport, String> {
    let r = run_check(id, c).map_err(|e| format!("{id}: {e}"))?;
    if r.pass {
        Ok(r)
    } else {
        Err(format!("{id} dim {} failed: {r:?}", c.dim))
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn interval_ends(b: &ConvexBody) -> (f64, f64) {
    let v = b.vertices();
    let (a, b) = (v[0].x, v[1].x);
    (a.min(b), a.max(b))
}

/// Hilbert length of `g` inside `k` on the line.
fn hilbert_length(k: &ConvexBody, g: &ConvexBody) -> f64 {
    let (lo, hi) = interval_ends(k);
    let (a, b) = interval_ends(g);
    0.5 * ((b - lo) * (hi - a) / ((a - lo) * (hi - b))).ln()
}

fn len(b: &ConvexBody) -> f64 {
    let (a, c) = interval_ends(b);
    c - a
}

// balls of Hilbert length 2α (or translates of length α·len D) laid end to end
fn oracle_body(total: f64, piece: f64) -> usize {
    ((total / piece - 1e-9).ceil() as usize).max(1)
}

fn oracle_boundary(total: f64, piece: f64) -> usize {
    if total <= piece * (1.0 + 1e-12) {
        1
    } else {
        2
    }
}

// D = [-1,1], C = [-α/2, α/2]: C° = [-2/α, 2/α] and (C + αD)° = [-2/(3α), 2/(3α)],
// so the norm distances between 1 and -1 are α and 3α.
fn c01() -> Outcome {
    for a in [0.1, 0.2, 0.5] {
        let r = check("mink_stability_sharp", &cfg(1, a))?;
        ensure((r.lhs - a).abs() <= 1e-12 && (r.rhs - 3.0 * a).abs() <= 1e-12, || {
            format!("alpha {a}: got {} and {}, want {a} and {}", r.lhs, r.rhs, 3.0 * a)
        })?;
        ensure((r.ratio - 3.0).abs() <= 1e-9, || format!("ratio {}", r.ratio))?;
    }
    Ok(())
}

// G° = [-1/h, 1/h] with h = tanh(α/2); d(-1, 1) = ln((1+h)/(1-h)) = α. The
// expansion is [-tanh(3α/2), tanh(3α/2)], giving 3α.
fn c02() -> Outcome {
    for a in [0.1, 0.3, 0.5] {
        let r = check("hilb_stability_sharp", &cfg(1, a))?;
        let h = (a / 2.0f64).tanh();
        let want = ((1.0 + h) / (1.0 - h)).ln();
        ensure((r.lhs - want).abs() <= 1e-9 && (r.rhs - 3.0 * a).abs() <= 1e-9, || {
            format!("alpha {a}: got {} and {}", r.lhs, r.rhs)
        })?;
        ensure((r.ratio - 3.0).abs() <= 1e-9, || format!("ratio {}", r.ratio))?;
    }
    Ok(())
}

fn c03() -> Outcome {
    let c = cfg(2, 0.2);
    let v = check("funk_vol_duality", &c)?;
    ensure(v.lhs <= 3.0, || format!("z = {}", v.lhs))?;
    let a = check("funk_area_duality", &c)?;
    ensure(a.lhs <= 1e-3, || format!("area rel diff {}", a.lhs))
}

fn c04() -> Outcome {
    let r = check("hilb_measure_polarity_beta", &cfg(2, 0.2))?;
    ensure(r.lhs <= 1.5 * 1.05, || format!("volume ratio {}", r.lhs))?;
    ensure(r.detail["area_ratio"] <= 1.05, || {
        format!("area ratio {}", r.detail["area_ratio"])
    })
}

fn c05() -> Outcome {
    let r = check("mink_measure_duality", &cfg(2, 0.2))?;
    ensure(r.lhs <= 1e-6, || format!("rel diff {}", r.lhs))?;
    // square in the square norm: λ(C) λ(D°) / ω_2 = 4 · 2 / π
    let sq = ConvexBody::from_coords(2, &[vec![-1.0, -1.0], vec![1.0, -1.0], vec![1.0, 1.0], vec![-1.0, 1.0]])
        .map_err(|e| e.to_string())?;
    let v = ht_volume_minkowski(&sq, &sq).map_err(|e| e.to_string())?.value;
    ensure((v - 8.0 / PI).abs() <= 1e-12, || format!("square HT volume {v}"))
}

fn c06() -> Outcome {
    for (dim, want) in [(2, 0.25), (3, 1.0 / 6.0)] {
        let r = check("busemann_cube_halfspace", &cfg(dim, 0.2))?;
        ensure((r.lhs - want).abs() <= 1e-9, || format!("dim {dim}: beta {}", r.lhs))?;
    }
    Ok(())
}

fn c07() -> Outcome {
    for dim in [2, 3] {
        let mut c = cfg(dim, 0.2);
        c.instances = 10_000;
        let r = check("jacobian_symmetry", &c)?;
        ensure(r.lhs <= 1e-12, || format!("dim {dim}: {}", r.lhs))?;
    }
    Ok(())
}

fn c08() -> Outcome {
    for dim in [2, 3] {
        let mut c = cfg(dim, 0.2);
        c.instances = 100;
        let r = check("slice_project_dual", &c)?;
        ensure(r.lhs <= 1e-6, || format!("dim {dim}: residual {}", r.lhs))?;
    }
    Ok(())
}

fn c09() -> Outcome {
    let r = check("ball_growth", &cfg(2, 0.2))?;
    let d = &r.detail;
    ensure(
        d["slope_vol_min"] >= 1.9
            && d["slope_vol_max"] <= 2.1
            && d["slope_area_min"] >= 0.9
            && d["slope_area_max"] <= 1.1,
        || format!("slopes {d:?}"),
    )
}

fn c10() -> Outcome {
    for a in [0.1, 0.5, 1.0] {
        let r = check("expansion_fatness", &cfg(2, a))?;
        ensure(r.lhs >= 0.25 - 0.02, || format!("alpha {a}: minkowski {}", r.lhs))?;
        let h = r.detail.get("hilbert_min_fraction").copied().unwrap_or(0.0);
        println!(
            "    2D alpha {a}: minkowski min fraction {:.4}, hilbert min fraction {h:.4}",
            r.lhs
        );
        ensure(h > 0.1, || format!("alpha {a}: hilbert {h}"))?;
    }
    let r = check("expansion_fatness", &cfg(3, 0.2))?;
    ensure(r.lhs >= 0.125 - 0.02, || format!("3D minkowski {}", r.lhs))
}

fn c11() -> Outcome {
    let r = check("boundary_transfer", &cfg(2, 0.3))?;
    ensure(r.inputs["probes"].as_f64() == Some(200.0), || {
        format!("probes {}", r.inputs["probes"])
    })?;
    ensure(r.detail["hit_rate"] == 1.0 && r.lhs <= 1e-5, || format!("{r:?}"))
}

fn c12() -> Outcome {
    let r = check("complementary_chord", &cfg(2, 0.2))?;
    ensure(r.lhs <= 1e-6, || format!("residual {}", r.lhs))
}

fn c13() -> Outcome {
    let full = ExperimentConfig::default();
    let out = duality_experiment(&full).map_err(|e| e.to_string())?;
    println!(
        "    2D: {} rows, max ratio {:.4}, c_hat {:.4}",
        out.summary.rows, out.summary.max_ratio, out.summary.c_hat
    );
    for (k, s) in &out.summary.kinds {
        println!("    {k:<16} max {:.4} median {:.4}", s.max_ratio, s.median_ratio);
    }
    ensure(out.summary.rows == 10 * 4 * 4 * 5, || {
        format!("rows {}", out.summary.rows)
    })?;
    ensure(out.summary.all_within_budget && out.summary.max_ratio <= 64.0, || {
        format!("max ratio {}", out.summary.max_ratio)
    })?;

    let one = ExperimentConfig {
        dim: 1,
        ..Default::default()
    };
    let out = duality_experiment(&one).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for r in &out.reports {
        let (kind, label) = r.check_id.split_once(':').ok_or("bad check id")?;
        let i: u64 = label.trim_start_matches("pair").parse().map_err(|_| "bad label")?;
        let a = r.inputs["alpha"].as_f64().ok_or("no alpha")?;
        let (k, g) = nested_pair(1, i, 0).map_err(|e| e.to_string())?;
        let (d, c) = free_pair(1, i, 0).map_err(|e| e.to_string())?;
        let polar = |b: &ConvexBody| b.polar().map_err(|e| e.to_string());
        let (p, q) = match kind {
            "hilbert_vol" => (
                oracle_body(hilbert_length(&k, &g), 2.0 * a),
                oracle_body(hilbert_length(&polar(&g)?, &polar(&k)?), 2.0 * a),
            ),
            "hilbert_bd" => (
                oracle_boundary(hilbert_length(&k, &g), 2.0 * a),
                oracle_boundary(hilbert_length(&polar(&g)?, &polar(&k)?), 2.0 * a),
            ),
            "translative_vol" => (
                oracle_body(len(&c), a * len(&d)),
                oracle_body(len(&polar(&d)?), a * len(&polar(&c)?)),
            ),
            "translative_bd" => (
                oracle_boundary(len(&c), a * len(&d)),
                oracle_boundary(len(&polar(&d)?), a * len(&polar(&c)?)),
            ),
            _ => return Err(format!("unknown kind {kind}")),
        };
        ensure(r.lhs == p as f64 && r.rhs == q as f64, || {
            format!(
                "{} alpha {a}: got ({}, {}), oracle ({p}, {q})",
                r.check_id, r.lhs, r.rhs
            )
        })?;
        checked += 1;
    }
    println!("    1D: {checked} rows match the interval oracle");
    ensure(checked == 10 * 4 * 4 * 5, || format!("1D rows {checked}"))
}

fn c14() -> Outcome {
    let r = check("rogers_shephard_union", &cfg(2, 0.2))?;
    ensure(r.lhs <= 6.0, || format!("ratio {}", r.lhs))?;
    // simplices attain the bound for the difference body
    let t =
        ConvexBody::from_coords(2, &[vec![-1.0, -1.0], vec![2.0, -1.0], vec![-1.0, 2.0]]).map_err(|e| e.to_string())?;
    let ratio = t.symmetrize(SymMode::Difference).map_err(|e| e.to_string())?.volume() / t.volume();
    ensure((ratio - 6.0).abs() <= 1e-12, || {
        format!("triangle difference body ratio {ratio}")
    })
}

fn sweep_digest(threads: Option<&str>) -> Result<String, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hilbcover"));
    cmd.args(["--seed", "7", "--alpha", "0.2", "sweep"]);
    if let Some(t) = threads {
        cmd.env("HILBCOVER_THREADS", t);
    }
    let out = cmd.output().map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        String::from_utf8_lossy(&out.stderr).into_owned()
    })?;
    ensure(!out.stdout.is_empty(), || "empty CSV".into())?;
    Ok(Sha256::digest(&out.stdout).iter().map(|b| format!("{b:02x}")).collect())
}

fn c15() -> Outcome {
    let a = sweep_digest(None)?;
    let b = sweep_digest(None)?;
    let c = sweep_digest(Some("1"))?;
    println!("    sha256 {a}");
    ensure(a == b && b == c, || format!("digests differ: {a} {b} {c}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Option<u64>); 15] = [
        ("sharp_distortion_minkowski", c01, Some(1)),
        ("sharp_distortion_hilbert", c02, Some(1)),
        ("funk_measure_duality", c03, Some(120)),
        ("hilbert_polarity_band", c04, Some(120)),
        ("minkowski_ht_duality", c05, Some(10)),
        ("cube_halfspace_isoperimetry", c06, None),
        ("jacobian_symmetry", c07, None),
        ("projection_section_duality", c08, None),
        ("ball_growth", c09, Some(120)),
        ("expansion_fatness", c10, None),
        ("boundary_transfer", c11, None),
        ("complementary_chord", c12, None),
        ("covering_duality_envelope", c13, Some(600)),
        ("rogers_shephard", c14, None),
        ("sweep_determinism", c15, None),
    ];
    let mut failed = 0;
    for (n, (name, f, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut res = f();
        let dt = t.elapsed();
        if let (Ok(()), Some(s)) = (&res, limit) {
            if dt > Duration::from_secs(*s) {
                res = Err(format!("took {dt:.1?}, limit {s} s"));
            }
        }
        let status = if res.is_ok() { "PASS" } else { "FAIL" };
        println!("criterion {:02} {name:<28} {status} ({:.2} s)", n + 1, dt.as_secs_f64());
        if let Err(e) = res {
            println!("    {e}");
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
