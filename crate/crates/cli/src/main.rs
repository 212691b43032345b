//! Command-line front end: recoveries, periodizations, density evaluation,
//! and the step-approximation convergence experiment.
//!
//! Exit codes: 0 success, 1 input error, 2 positivity failure,
//! 3 quadrature failure. Diagnostics go to stderr; data goes to stdout or to
//! the requested files. Output is deterministic: identical invocations
//! produce byte-identical CSV/JSON.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use canspec::builtins::{parse_samples, BuiltinSpec};
use canspec::direct::{cross_validate, recover_moments, recover_verblunsky, StepHeightSequence};
use canspec::measure::{
    cosine_partial_sum, expgrowth_family, expgrowth_limit, geronimus_measure, periodize_measure,
    Domain, SpectralMeasure,
};
use canspec::opuc::moments_from_verblunsky;
use canspec::systems::{
    convergence_experiment_with_dt, default_sinc_test_set, periodize, rk4_default_dt,
    DiracPotential,
};
use canspec::toeplitz::{check_positive_definite, MomentSequence};
use canspec::{DirectError, MeasureError, SystemsError, ToeplitzError};

const EXIT_INPUT: u8 = 1;
const EXIT_POSITIVITY: u8 = 2;
const EXIT_QUADRATURE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "canspec",
    about = "Direct spectral problems for diagonal canonical systems",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recover Verblunsky coefficients and/or moments from step heights.
    Recover(RecoverArgs),
    /// Periodize a smooth h11 into a step Hamiltonian and recover its measure.
    Periodize(PeriodizeArgs),
    /// Evaluate a cosine-series spectral density on a grid.
    Density(DensityArgs),
    /// Compare step-approximation weights against the smooth weight.
    Converge(ConvergeArgs),
}

#[derive(Args)]
struct RecoverArgs {
    /// Comma-separated step heights h0,h1,...
    #[arg(long, value_delimiter = ',', num_args = 1, conflicts_with_all = ["heights_file", "geometric"])]
    heights: Vec<f64>,
    /// Two-column (index, height) or one-column file of heights.
    #[arg(long, conflicts_with = "geometric")]
    heights_file: Option<PathBuf>,
    /// Geometric heights a^n, written as a=VALUE.
    #[arg(long)]
    geometric: Option<String>,
    /// Number of heights generated by --geometric.
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Which route(s) to run.
    #[arg(long, default_value = "both", value_parser = ["verblunsky", "moments", "both"])]
    route: String,
    /// Cross-validation tolerance.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Output path for the JSON report (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PeriodizeArgs {
    /// Builtin h11 spec (const:V, exp[:r=R], affine:b=B, inverse-square:c=C, decay[:s=S]).
    #[arg(long, conflicts_with = "h11_file")]
    h11: Option<String>,
    /// Two-column (t, h11) sample file, linearly interpolated.
    #[arg(long)]
    h11_file: Option<PathBuf>,
    /// Step size of the periodization.
    #[arg(long = "T")]
    t_step: f64,
    /// Number of steps.
    #[arg(long = "N")]
    count: usize,
    /// CSV of the step heights (default: stdout).
    #[arg(long)]
    heights_out: Option<PathBuf>,
    /// CSV of the recovered moments.
    #[arg(long)]
    moments_out: Option<PathBuf>,
    /// CSV of the recovered line density over one period.
    #[arg(long)]
    density_out: Option<PathBuf>,
    /// Number of cosine terms for --density-out (default: all recovered).
    #[arg(long)]
    terms: Option<usize>,
}

#[derive(Args)]
struct DensityArgs {
    /// Comma-separated moments c0,c1,...
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true, conflicts_with_all = ["alphas", "heights"])]
    moments: Vec<f64>,
    /// Comma-separated Verblunsky coefficients (moments are derived).
    #[arg(long, value_delimiter = ',', num_args = 1, allow_hyphen_values = true, conflicts_with = "heights")]
    alphas: Vec<f64>,
    /// Comma-separated step heights (moments are recovered first).
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    heights: Vec<f64>,
    /// Number of cosine terms in the partial sum (default: all available).
    #[arg(long)]
    terms: Option<usize>,
    /// Grid as lo:hi:step; defaults to one circle period 0:6.28:0.01.
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// Hamiltonian step size: interpret the grid on the line with period π/T.
    #[arg(long = "T")]
    t_step: Option<f64>,
    /// Comparison column: geronimus:alpha=A | expgrowth:T=T | expgrowth-limit
    /// | lebesgue-atom:mass=M (the periodized Lebesgue-plus-atom series).
    #[arg(long)]
    compare: Option<String>,
    /// CSV (location,mass) of the comparison measure's atoms.
    #[arg(long)]
    atoms_out: Option<PathBuf>,
    /// Output CSV path (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConvergeArgs {
    /// Builtin potential spec f (const:V, exp[:r=R], affine:b=B, inverse-square:c=C, decay[:s=S]).
    #[arg(long, conflicts_with = "f_file")]
    f: Option<String>,
    /// Two-column (t, f) sample file.
    #[arg(long)]
    f_file: Option<PathBuf>,
    /// Horizon a.
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    /// Comma-separated step sizes, large to small.
    #[arg(long = "Ts", value_delimiter = ',', num_args = 1..)]
    steps: Vec<f64>,
    /// Grid as lo:hi:step (default -20:20:0.01).
    #[arg(long, default_value = "-20:20:0.01", allow_hyphen_values = true)]
    grid: String,
    /// RK4 step (default 1e-3·a).
    #[arg(long)]
    dt: Option<f64>,
    /// JSON report path (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Optional CSV table of the per-T differences.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Recover(args) => cmd_recover(args),
        Command::Periodize(args) => cmd_periodize(args),
        Command::Density(args) => cmd_density(args),
        Command::Converge(args) => cmd_converge(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(classify(&err))
        }
    }
}

/// Map error chains onto the exit-code contract.
fn classify(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(DirectError::Toeplitz(ToeplitzError::NotPositiveDefinite { .. })) =
            cause.downcast_ref::<DirectError>()
        {
            return EXIT_POSITIVITY;
        }
        if let Some(ToeplitzError::NotPositiveDefinite { .. }) =
            cause.downcast_ref::<ToeplitzError>()
        {
            return EXIT_POSITIVITY;
        }
        if let Some(SystemsError::Quadrature(_)) = cause.downcast_ref::<SystemsError>() {
            return EXIT_QUADRATURE;
        }
        if let Some(MeasureError::Quadrature(_)) = cause.downcast_ref::<MeasureError>() {
            return EXIT_QUADRATURE;
        }
        if cause.downcast_ref::<canspec::QuadratureError>().is_some() {
            return EXIT_QUADRATURE;
        }
    }
    EXIT_INPUT
}

/// Resolve a relative output path against CANSPEC_OUT_DIR when set.
fn resolve_out(path: &Path) -> PathBuf {
    if path.is_absolute() {
        return path.to_path_buf();
    }
    match std::env::var_os("CANSPEC_OUT_DIR") {
        Some(dir) => PathBuf::from(dir).join(path),
        None => path.to_path_buf(),
    }
}

fn emit(path: Option<&Path>, contents: &str) -> Result<()> {
    match path {
        Some(p) => {
            let p = resolve_out(p);
            if let Some(parent) = p.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)
                        .with_context(|| format!("creating {}", parent.display()))?;
                }
            }
            std::fs::write(&p, contents).with_context(|| format!("writing {}", p.display()))
        }
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        bail!("grid must be lo:hi:step, got `{spec}`");
    }
    let lo: f64 = parts[0].parse().context("grid lo")?;
    let hi: f64 = parts[1].parse().context("grid hi")?;
    let step: f64 = parts[2].parse().context("grid step")?;
    if !(step > 0.0 && hi > lo) {
        bail!("grid bounds must be ordered and the step positive");
    }
    let n = ((hi - lo) / step).round() as usize;
    Ok((0..=n).map(|i| lo + i as f64 * step).collect())
}

fn parse_key_value(spec: &str, key: &str) -> Result<f64> {
    let (k, v) = spec
        .split_once('=')
        .ok_or_else(|| anyhow!("expected {key}=VALUE, got `{spec}`"))?;
    if k.trim() != key {
        bail!("expected key `{key}`, got `{k}`");
    }
    v.trim().parse::<f64>().map_err(|_| anyhow!("cannot parse `{v}` as a number"))
}

// ---------------------------------------------------------------------------
// recover
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct RecoverReportJson {
    heights: Vec<f64>,
    route: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    alphas: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    moments: Option<Vec<f64>>,
    positivity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_cross_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_height_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    within_tolerance: Option<bool>,
}

fn load_heights(args: &RecoverArgs) -> Result<StepHeightSequence> {
    let values: Vec<f64> = if !args.heights.is_empty() {
        args.heights.clone()
    } else if let Some(path) = &args.heights_file {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let mut vals = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let v = line.split_whitespace().last().unwrap();
            vals.push(v.parse::<f64>().map_err(|_| anyhow!("bad height `{v}`"))?);
        }
        vals
    } else if let Some(spec) = &args.geometric {
        let a = parse_key_value(spec, "a")?;
        if !(a > 0.0) {
            bail!("geometric ratio must be positive");
        }
        (0..args.n as i32).map(|n| a.powi(n)).collect()
    } else {
        bail!("one of --heights, --heights-file, --geometric is required");
    };
    StepHeightSequence::new(values).map_err(|e| anyhow!(e))
}

fn cmd_recover(args: RecoverArgs) -> Result<ExitCode> {
    let h = load_heights(&args)?;
    let report = match args.route.as_str() {
        "verblunsky" => {
            let alphas = recover_verblunsky(&h);
            RecoverReportJson {
                heights: h.heights().to_vec(),
                route: args.route.clone(),
                alphas: Some(alphas.alphas().to_vec()),
                moments: None,
                positivity: "not checked (verblunsky route)".into(),
                max_cross_error: None,
                max_height_error: None,
                within_tolerance: None,
            }
        }
        "moments" => {
            let moments = recover_moments(&h).map_err(|e| anyhow!(e))?;
            let positivity = check_positive_definite(&moments);
            RecoverReportJson {
                heights: h.heights().to_vec(),
                route: args.route.clone(),
                alphas: None,
                moments: Some(moments.values().to_vec()),
                positivity: positivity.to_string(),
                max_cross_error: None,
                max_height_error: None,
                within_tolerance: None,
            }
        }
        _ => {
            let report = cross_validate(&h, args.tol).map_err(|e| anyhow!(e))?;
            RecoverReportJson {
                heights: h.heights().to_vec(),
                route: args.route.clone(),
                alphas: Some(report.alphas.alphas().to_vec()),
                moments: Some(report.moments.values().to_vec()),
                positivity: report.positivity.to_string(),
                max_cross_error: Some(report.max_cross_error),
                max_height_error: Some(report.max_height_error),
                within_tolerance: Some(report.within_tolerance),
            }
        }
    };
    let failed = report.positivity.starts_with("fails");
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    emit(args.out.as_deref(), &text)?;
    Ok(if failed { ExitCode::from(EXIT_POSITIVITY) } else { ExitCode::SUCCESS })
}

// ---------------------------------------------------------------------------
// periodize
// ---------------------------------------------------------------------------

fn load_h11(spec: Option<&str>, file: Option<&Path>) -> Result<Box<dyn Fn(f64) -> f64>> {
    if let Some(spec) = spec {
        let builtin = BuiltinSpec::parse(spec).map_err(|e| anyhow!(e))?;
        return Ok(Box::new(builtin.h11_fn()));
    }
    if let Some(path) = file {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let (ts, vals) = parse_samples(&text).map_err(|e| anyhow!(e))?;
        let interp = move |t: f64| -> f64 {
            let i = match ts.binary_search_by(|v| v.total_cmp(&t)) {
                Ok(i) => i.min(ts.len() - 2),
                Err(i) => i.saturating_sub(1).min(ts.len() - 2),
            };
            let w = ((t - ts[i]) / (ts[i + 1] - ts[i])).clamp(0.0, 1.0);
            vals[i] * (1.0 - w) + vals[i + 1] * w
        };
        return Ok(Box::new(interp));
    }
    bail!("one of --h11, --h11-file is required")
}

fn cmd_periodize(args: PeriodizeArgs) -> Result<ExitCode> {
    let h11 = load_h11(args.h11.as_deref(), args.h11_file.as_deref())?;
    let ham = periodize(&*h11, args.t_step, args.count).map_err(|e| anyhow!(e))?;

    let mut heights_csv = String::from("n,height\n");
    for (n, h) in ham.heights.heights().iter().enumerate() {
        let _ = writeln!(heights_csv, "{n},{}", fmt17(*h));
    }
    emit(args.heights_out.as_deref(), &heights_csv)?;

    let moments = recover_moments(&ham.heights)
        .map_err(|e| anyhow!(e))?
        .with_period(std::f64::consts::PI / args.t_step);
    if args.moments_out.is_some() {
        let mut csv = String::from("n,c\n");
        for (n, c) in moments.values().iter().enumerate() {
            let _ = writeln!(csv, "{n},{}", fmt17(*c));
        }
        emit(args.moments_out.as_deref(), &csv)?;
    }

    if args.density_out.is_some() {
        let terms = args.terms.unwrap_or(moments.len() - 1);
        let period = std::f64::consts::PI / args.t_step;
        let n = 1000usize;
        let thetas: Vec<f64> = (0..=n).map(|i| period * i as f64 / n as f64).collect();
        let circle_xs: Vec<f64> = thetas.iter().map(|t| 2.0 * args.t_step * t).collect();
        let density = cosine_partial_sum(&moments, terms, &circle_xs);
        let mut csv = String::from("x,w\n");
        for (theta, (_, w)) in thetas.iter().zip(&density.samples) {
            let _ = writeln!(csv, "{},{}", fmt17(*theta), fmt17(*w));
        }
        emit(args.density_out.as_deref(), &csv)?;
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// density
// ---------------------------------------------------------------------------

fn density_moments(args: &DensityArgs) -> Result<MomentSequence> {
    if !args.moments.is_empty() {
        return MomentSequence::new(args.moments.clone()).map_err(|e| anyhow!(e));
    }
    if !args.alphas.is_empty() {
        let seq = canspec::opuc::VerblunskySequence::new(args.alphas.clone())
            .map_err(|e| anyhow!(e))?;
        return Ok(moments_from_verblunsky(&seq, 1.0));
    }
    if !args.heights.is_empty() {
        let h = StepHeightSequence::new(args.heights.clone()).map_err(|e| anyhow!(e))?;
        return recover_moments(&h).map_err(|e| anyhow!(e));
    }
    bail!("one of --moments, --alphas, --heights is required")
}

fn comparison_column(
    spec: &str,
    xs: &[f64],
    t_step: Option<f64>,
    terms: usize,
) -> Result<(Vec<f64>, Vec<(f64, f64)>)> {
    let (name, payload) = spec.split_once(':').unwrap_or((spec, ""));
    match name {
        "geronimus" => {
            let alpha = parse_key_value(payload, "alpha")?;
            let m = geronimus_measure(alpha).map_err(|e| anyhow!(e))?;
            Ok((xs.iter().map(|&x| m.density_at(x).unwrap()).collect(), m.atoms.clone()))
        }
        "expgrowth" => {
            let t = parse_key_value(payload, "T")?;
            let m = expgrowth_family(t, xs);
            Ok((m.samples.iter().map(|s| s.1).collect(), m.atoms.clone()))
        }
        "expgrowth-limit" => {
            let m = expgrowth_limit(xs);
            Ok((m.samples.iter().map(|s| s.1).collect(), m.atoms.clone()))
        }
        "lebesgue-atom" => {
            let mass = parse_key_value(payload, "mass")?;
            let t = t_step
                .ok_or_else(|| anyhow!("lebesgue-atom comparison needs --T for the period"))?;
            let period = std::f64::consts::PI / t;
            let m = SpectralMeasure::from_density(
                Domain::Line { period: None },
                |_| 1.0,
                (f64::NEG_INFINITY, f64::INFINITY),
                false,
                vec![(0.0, mass)],
                &[0.0],
            );
            let coeffs = periodize_measure(&m, period).map_err(|e| anyhow!(e))?;
            let limit = terms.min(coeffs.len() - 1);
            let vals = coeffs.values().to_vec();
            let omega = 2.0 * std::f64::consts::PI / period;
            let col = xs
                .iter()
                .map(|&theta| {
                    vals[0]
                        + 2.0
                            * (1..=limit)
                                .map(|k| vals[k] * (k as f64 * omega * theta).cos())
                                .sum::<f64>()
                })
                .collect();
            Ok((col, m.atoms.clone()))
        }
        other => bail!("unknown comparison `{other}`"),
    }
}

fn cmd_density(args: DensityArgs) -> Result<ExitCode> {
    let moments = density_moments(&args)?;
    let terms = args.terms.unwrap_or(moments.len() - 1).min(moments.len() - 1);

    // the grid is in line coordinates when --T is given, else on the circle
    let (xs, circle_xs) = match (args.grid.as_deref(), args.t_step) {
        (Some(g), Some(t)) => {
            let xs = parse_grid(g)?;
            let circle: Vec<f64> = xs.iter().map(|&theta| 2.0 * t * theta).collect();
            (xs, circle)
        }
        (Some(g), None) => {
            let xs = parse_grid(g)?;
            (xs.clone(), xs)
        }
        (None, Some(t)) => {
            let period = std::f64::consts::PI / t;
            let xs: Vec<f64> = (0..=1000).map(|i| period * i as f64 / 1000.0).collect();
            let circle: Vec<f64> = xs.iter().map(|&theta| 2.0 * t * theta).collect();
            (xs, circle)
        }
        (None, None) => {
            let xs: Vec<f64> = (0..=628).map(|i| i as f64 * 0.01).collect();
            (xs.clone(), xs)
        }
    };

    let density = cosine_partial_sum(&moments, terms, &circle_xs);
    let (compare, atoms) = match &args.compare {
        Some(spec) => {
            let (col, atoms) = comparison_column(spec, &xs, args.t_step, terms)?;
            (Some(col), atoms)
        }
        None => (None, Vec::new()),
    };
    if let Some(path) = &args.atoms_out {
        let mut csv = String::from("location,mass\n");
        for &(x0, mass) in &atoms {
            let _ = writeln!(csv, "{},{}", fmt17(x0), fmt17(mass));
        }
        emit(Some(path), &csv)?;
    }

    let mut csv = String::from(if compare.is_some() { "x,w,comparison\n" } else { "x,w\n" });
    for (i, &x) in xs.iter().enumerate() {
        match &compare {
            Some(cmp) => {
                let _ = writeln!(
                    csv,
                    "{},{},{}",
                    fmt17(x),
                    fmt17(density.samples[i].1),
                    fmt17(cmp[i])
                );
            }
            None => {
                let _ = writeln!(csv, "{},{}", fmt17(x), fmt17(density.samples[i].1));
            }
        }
    }
    emit(args.out.as_deref(), &csv)?;
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// converge
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ConvergeRowJson {
    step: f64,
    sup_weight_diff: f64,
    pw_norm_diffs: Vec<f64>,
}

#[derive(Serialize)]
struct ConvergeReportJson {
    a: f64,
    grid: String,
    dt: f64,
    test_centers: Vec<f64>,
    rows: Vec<ConvergeRowJson>,
    weight_monotone: bool,
    pw_monotone: Vec<bool>,
}

fn load_potential(spec: Option<&str>, file: Option<&Path>, a: f64) -> Result<DiracPotential> {
    if let Some(spec) = spec {
        let builtin = BuiltinSpec::parse(spec).map_err(|e| anyhow!(e))?;
        return builtin.potential(a).map_err(|e| anyhow!(e));
    }
    if let Some(path) = file {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let (ts, vals) = parse_samples(&text).map_err(|e| anyhow!(e))?;
        if *ts.last().unwrap() < a {
            bail!("sample file covers [0, {}], horizon {a} requested", ts.last().unwrap());
        }
        return DiracPotential::from_samples(&ts, &vals).map_err(|e| anyhow!(e));
    }
    bail!("one of --f, --f-file is required")
}

fn cmd_converge(args: ConvergeArgs) -> Result<ExitCode> {
    if args.steps.is_empty() {
        bail!("--Ts needs at least one step size");
    }
    let f = load_potential(args.f.as_deref(), args.f_file.as_deref(), args.a)?;
    let xs = parse_grid(&args.grid)?;
    let dt = args.dt.unwrap_or_else(|| rk4_default_dt(args.a));
    let phis = default_sinc_test_set(args.a);
    let table = convergence_experiment_with_dt(&f, args.a, &args.steps, &xs, &phis, dt)
        .map_err(|e| anyhow!(e))?;

    let report = ConvergeReportJson {
        a: args.a,
        grid: args.grid.clone(),
        dt,
        test_centers: phis.iter().map(|p| p.center).collect(),
        rows: table
            .rows
            .iter()
            .map(|r| ConvergeRowJson {
                step: r.step,
                sup_weight_diff: r.sup_weight_diff,
                pw_norm_diffs: r.pw_norm_diffs.clone(),
            })
            .collect(),
        weight_monotone: table.weight_monotone,
        pw_monotone: table.pw_monotone.clone(),
    };

    if args.csv.is_some() {
        let mut csv = String::from("T,sup_weight_diff");
        for i in 0..phis.len() {
            let _ = write!(csv, ",pw_diff_{i}");
        }
        csv.push('\n');
        for row in &table.rows {
            let _ = write!(csv, "{},{}", fmt17(row.step), fmt17(row.sup_weight_diff));
            for d in &row.pw_norm_diffs {
                let _ = write!(csv, ",{}", fmt17(*d));
            }
            csv.push('\n');
        }
        emit(args.csv.as_deref(), &csv)?;
    }

    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    emit(args.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}
