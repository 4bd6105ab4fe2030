//! Command-line front end.
//!
//! Reads angles (or draws a synthetic sample), runs an estimator, a
//! cross-validation or the kernel/Carathéodory equivalence check, and writes
//! plot-ready CSV or JSON. Exit codes: 0 success, 2 configuration error,
//! 3 data error, 4 numeric-domain error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use serde_json::json;

use crate::angle::{uniform_grid, AngleSample, DensityEstimate};
use crate::error::Error;
use crate::estimators::{kernel_estimate, opuc_density_estimate, series_estimate, wc_estimate, weighted_series_estimate};
use crate::kernels::{KernelKind, KernelSpec};
use crate::selection::{cross_validate, default_candidates, select_n_star, CvCriterion, CvResult};
use crate::simlab::{RngSeed, TrueDensity};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("numeric domain error: {0}")]
    Domain(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Data(_) => 3,
            CliError::Domain(_) => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Estimate,
    Cv,
    Series,
    Equivalence,
    Simulate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Unit {
    Rad,
    Deg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EstimatorArg {
    Wc,
    Vm,
    Series,
    Opuc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    Loo,
    Lscv,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Concentration {
    Value(f64),
    Cv,
}

impl FromStr for Concentration {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("cv") {
            return Ok(Concentration::Cv);
        }
        s.parse::<f64>()
            .map(Concentration::Value)
            .map_err(|_| format!("expected a number or `cv`, got `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NStar {
    Fixed(usize),
    Auto,
}

impl FromStr for NStar {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(NStar::Auto);
        }
        s.parse::<usize>()
            .map(NStar::Fixed)
            .map_err(|_| format!("expected a non-negative integer or `auto`, got `{s}`"))
    }
}

/// Parsed command line.
#[derive(Debug, Clone, Parser)]
#[command(name = "circkde", version, about = "Circular kernel and series density estimation")]
pub struct RunConfig {
    #[arg(long, value_enum)]
    pub command: Command,
    /// Text file with one angle per line; `#` starts a comment line.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Synthetic law instead of a file: `uniform`, `wc:MU:RHO`, `vm:MU:NU` or `wn:MU:SIGMA` (radians).
    #[arg(long)]
    pub synthetic: Option<String>,
    /// Size of the synthetic sample.
    #[arg(long, default_value_t = 500)]
    pub size: usize,
    #[arg(long, value_enum, default_value = "rad")]
    pub unit: Unit,
    #[arg(long, value_enum, default_value = "wc")]
    pub estimator: EstimatorArg,
    /// Concentration (rho, r or nu) or `cv`.
    #[arg(long)]
    pub concentration: Option<Concentration>,
    /// Comma-separated CV candidates.
    #[arg(long, value_delimiter = ',')]
    pub candidates: Option<Vec<f64>>,
    #[arg(long, value_enum, default_value = "loo")]
    pub criterion: CriterionArg,
    /// Series truncation point or `auto`.
    #[arg(long, default_value = "auto")]
    pub nstar: NStar,
    #[arg(long, default_value_t = 1e-8)]
    pub tail_tol: f64,
    /// Number of uniform grid points.
    #[arg(long, default_value_t = 512)]
    pub grid: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Parses angle text: one decimal per line, blank and `#` lines skipped.
pub fn parse_angles(text: &str, unit: Unit) -> Result<AngleSample, CliError> {
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let x: f64 = line
            .parse()
            .map_err(|_| CliError::Data(format!("line {}: cannot parse `{line}` as a number", i + 1)))?;
        if !x.is_finite() {
            return Err(CliError::Data(format!("line {}: angle must be finite", i + 1)));
        }
        values.push(match unit {
            Unit::Rad => x,
            Unit::Deg => x.to_radians(),
        });
    }
    if values.is_empty() {
        return Err(CliError::Data("input contains no angles".into()));
    }
    Ok(AngleSample::new(values)?)
}

pub fn ingest(path: &Path, unit: Unit) -> Result<AngleSample, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    parse_angles(&text, unit)
}

/// Parses a `--synthetic` law description.
pub fn parse_synthetic(spec: &str) -> Result<TrueDensity, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| CliError::Config(format!("bad number `{s}` in --synthetic")))
    };
    let law = match parts.as_slice() {
        ["uniform"] => TrueDensity::uniform(),
        ["wc", mu, rho] => TrueDensity::wrapped_cauchy(num(mu)?, num(rho)?)?,
        ["vm", mu, nu] => TrueDensity::von_mises(num(mu)?, num(nu)?)?,
        ["wn", mu, sigma] => TrueDensity::wrapped_normal(num(mu)?, num(sigma)?)?,
        _ => {
            return Err(CliError::Config(format!(
                "unknown --synthetic `{spec}`; expected uniform, wc:MU:RHO, vm:MU:NU or wn:MU:SIGMA"
            )))
        }
    };
    Ok(law)
}

fn load_sample(cfg: &RunConfig) -> Result<AngleSample, CliError> {
    match (&cfg.input, &cfg.synthetic) {
        (Some(path), None) => ingest(path, cfg.unit),
        (None, Some(spec)) => {
            if cfg.size == 0 {
                return Err(CliError::Config("--size must be positive".into()));
            }
            Ok(parse_synthetic(spec)?.sample(cfg.size, RngSeed(cfg.seed))?)
        }
        (Some(_), Some(_)) => Err(CliError::Config("give either --input or --synthetic, not both".into())),
        (None, None) => Err(CliError::Config("one of --input or --synthetic is required".into())),
    }
}

fn kernel_kind(cfg: &RunConfig) -> KernelKind {
    match cfg.estimator {
        EstimatorArg::Vm => KernelKind::VonMises,
        _ => KernelKind::WrappedCauchy,
    }
}

fn criterion(cfg: &RunConfig) -> CvCriterion {
    match cfg.criterion {
        CriterionArg::Loo => CvCriterion::LooLogLik,
        CriterionArg::Lscv => CvCriterion::Lscv,
    }
}

fn run_cv(cfg: &RunConfig, sample: &AngleSample, kind: KernelKind) -> Result<CvResult, CliError> {
    let candidates = cfg.candidates.clone().unwrap_or_else(|| default_candidates(kind));
    Ok(cross_validate(sample, kind, &candidates, criterion(cfg))?)
}

fn resolve_concentration(cfg: &RunConfig, sample: &AngleSample, kind: KernelKind) -> Result<f64, CliError> {
    match cfg.concentration {
        Some(Concentration::Value(c)) => Ok(c),
        Some(Concentration::Cv) => Ok(run_cv(cfg, sample, kind)?.best),
        None => Err(CliError::Config("--concentration is required for this command".into())),
    }
}

/// Renders a float with 17 significant digits, enough to round-trip any f64.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn density_csv(est: &DensityEstimate) -> String {
    let mut out = String::from("theta,density\n");
    for (t, v) in est.iter() {
        let _ = writeln!(out, "{},{}", fmt17(t), fmt17(v));
    }
    out
}

/// Reads back the CSV written by [`density_csv`].
pub fn parse_density_csv(text: &str) -> Result<Vec<(f64, f64)>, CliError> {
    let mut lines = text.lines();
    if lines.next() != Some("theta,density") {
        return Err(CliError::Data("missing `theta,density` header".into()));
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let bad = || CliError::Data(format!("line {}: malformed row `{line}`", i + 2));
            let (t, v) = line.split_once(',').ok_or_else(bad)?;
            Ok((t.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?))
        })
        .collect()
}

fn density_json(est: &DensityEstimate) -> String {
    let meta = est.meta();
    let mut m = json!({
        "estimator": meta.kind.name(),
        "concentration": meta.concentration,
        "n": meta.sample_size,
        "m": est.grid().len(),
    });
    if let Some(k) = meta.n_star {
        m["n_star"] = json!(k);
        m["has_negative"] = json!(meta.has_negative);
    }
    let doc = json!({
        "meta": m,
        "grid": est.grid().points(),
        "values": est.values(),
    });
    format!("{doc}\n")
}

fn render_density(cfg: &RunConfig, est: &DensityEstimate) -> String {
    match cfg.format {
        Format::Csv => density_csv(est),
        Format::Json => density_json(est),
    }
}

fn cmd_estimate(cfg: &RunConfig) -> Result<String, CliError> {
    let sample = load_sample(cfg)?;
    let grid = uniform_grid(cfg.grid)?;
    let est = match cfg.estimator {
        EstimatorArg::Wc | EstimatorArg::Vm => {
            let kind = kernel_kind(cfg);
            let c = resolve_concentration(cfg, &sample, kind)?;
            kernel_estimate(&sample, &KernelSpec::new(kind, c)?, &grid)
        }
        EstimatorArg::Opuc => {
            let r = resolve_concentration(cfg, &sample, KernelKind::WrappedCauchy)?;
            opuc_density_estimate(&sample, r, &grid)?
        }
        EstimatorArg::Series => match cfg.nstar {
            NStar::Fixed(k) => series_estimate(&sample, k, &grid),
            NStar::Auto => {
                return Err(CliError::Config(
                    "the plain series estimator needs an explicit --nstar; use --command series for the weighted series"
                        .into(),
                ))
            }
        },
    };
    Ok(render_density(cfg, &est))
}

fn cmd_series(cfg: &RunConfig) -> Result<String, CliError> {
    let sample = load_sample(cfg)?;
    let grid = uniform_grid(cfg.grid)?;
    let r = resolve_concentration(cfg, &sample, KernelKind::WrappedCauchy)?;
    let n_star = match cfg.nstar {
        NStar::Fixed(k) => k,
        NStar::Auto => select_n_star(r, cfg.tail_tol)?,
    };
    let est = weighted_series_estimate(&sample, r, n_star, &grid)?;
    Ok(render_density(cfg, &est))
}

fn cmd_cv(cfg: &RunConfig) -> Result<String, CliError> {
    let sample = load_sample(cfg)?;
    let kind = kernel_kind(cfg);
    let cv = run_cv(cfg, &sample, kind)?;
    Ok(match cfg.format {
        Format::Csv => {
            let mut out = String::from("candidate,score\n");
            for (c, s) in cv.candidate_grid.iter().zip(&cv.scores) {
                let _ = writeln!(out, "{},{}", fmt17(*c), fmt17(*s));
            }
            let _ = writeln!(out, "# criterion={} best={}", cv.criterion.name(), fmt17(cv.best));
            out
        }
        Format::Json => {
            let doc = json!({
                "criterion": cv.criterion.name(),
                "kernel": kind.name(),
                "n": sample.len(),
                "candidates": cv.candidate_grid,
                "scores": cv.scores,
                "best": cv.best,
            });
            format!("{doc}\n")
        }
    })
}

fn cmd_equivalence(cfg: &RunConfig) -> Result<String, CliError> {
    let sample = load_sample(cfg)?;
    let grid = uniform_grid(cfg.grid)?;
    let r = resolve_concentration(cfg, &sample, KernelKind::WrappedCauchy)?;
    let kernel = wc_estimate(&sample, r, &grid)?;
    let disk = opuc_density_estimate(&sample, r, &grid)?;
    let diff = kernel.max_abs_diff(&disk);
    Ok(match cfg.format {
        Format::Csv => format!("r,n,m,max_abs_diff\n{},{},{},{}\n", fmt17(r), sample.len(), grid.len(), fmt17(diff)),
        Format::Json => format!(
            "{}\n",
            json!({ "r": r, "n": sample.len(), "m": grid.len(), "max_abs_diff": diff })
        ),
    })
}

fn cmd_simulate(cfg: &RunConfig) -> Result<String, CliError> {
    if cfg.synthetic.is_none() {
        return Err(CliError::Config("simulate needs --synthetic".into()));
    }
    let sample = load_sample(cfg)?;
    let values: Vec<f64> = sample
        .iter()
        .map(|t| match cfg.unit {
            Unit::Rad => t,
            Unit::Deg => t.to_degrees(),
        })
        .collect();
    Ok(match cfg.format {
        Format::Csv => {
            let mut out = String::new();
            for v in values {
                let _ = writeln!(out, "{}", fmt17(v));
            }
            out
        }
        Format::Json => format!("{}\n", json!({ "angles": values })),
    })
}

/// Runs one command and returns the text it would write.
pub fn run(cfg: &RunConfig) -> Result<String, CliError> {
    if cfg.grid < 2 {
        return Err(CliError::Config(format!("--grid must be at least 2, got {}", cfg.grid)));
    }
    match cfg.command {
        Command::Estimate => cmd_estimate(cfg),
        Command::Cv => cmd_cv(cfg),
        Command::Series => cmd_series(cfg),
        Command::Equivalence => cmd_equivalence(cfg),
        Command::Simulate => cmd_simulate(cfg),
    }
}

/// Runs a command and writes its output to `--output` or standard output.
pub fn execute(cfg: &RunConfig) -> Result<(), CliError> {
    let text = run(cfg)?;
    match &cfg.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Data(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Entry point shared by the binary: parses `args`, runs, and returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cfg) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("circkde: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, TAU};

    fn cfg(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("circkde").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn parse_examples() {
        let s = parse_angles("0\n3.0\n", Unit::Rad).unwrap();
        assert_eq!(s.to_radians_vec(), vec![0.0, 3.0]);

        let s = parse_angles("90\n-90\n", Unit::Deg).unwrap();
        let v = s.to_radians_vec();
        assert!((v[0] - FRAC_PI_2).abs() < 1e-15 && (v[1] + FRAC_PI_2).abs() < 1e-15);

        let e = parse_angles("abc", Unit::Rad).unwrap_err();
        assert!(e.to_string().contains("line 1"));
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn comments_blanks_and_empty() {
        let s = parse_angles("# header\n\n  1.5 \n# x\n-0.5\n", Unit::Rad).unwrap();
        assert_eq!(s.to_radians_vec(), vec![1.5, -0.5]);
        assert!(matches!(parse_angles("# only\n\n", Unit::Rad), Err(CliError::Data(_))));
        let e = parse_angles("1\n2\nnope\n", Unit::Rad).unwrap_err();
        assert!(e.to_string().contains("line 3"));
    }

    #[test]
    fn flat_estimate_csv() {
        let c = cfg(&["--command", "estimate", "--synthetic", "vm:0:3", "--size", "20", "--concentration", "0", "--grid", "4"]);
        let out = run(&c).unwrap();
        let rows = parse_density_csv(&out).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|(_, d)| (d - 1.0 / TAU).abs() < 1e-16));
        assert!(out.starts_with("theta,density\n"));
        assert!(!out.contains('\r'));
    }

    #[test]
    fn json_layout() {
        let c = cfg(&["--command", "estimate", "--synthetic", "wc:0:0.5", "--size", "10", "--concentration", "0.4", "--grid", "8", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&run(&c).unwrap()).unwrap();
        assert_eq!(v["meta"]["estimator"], "wc");
        assert_eq!(v["meta"]["n"], 10);
        assert_eq!(v["meta"]["m"], 8);
        assert_eq!(v["meta"]["concentration"], 0.4);
        assert_eq!(v["grid"].as_array().unwrap().len(), 8);
        assert_eq!(v["values"].as_array().unwrap().len(), 8);
    }

    #[test]
    fn error_codes() {
        let missing = cfg(&["--command", "estimate", "--synthetic", "uniform"]);
        assert_eq!(run(&missing).unwrap_err().exit_code(), 2);
        let domain = cfg(&["--command", "estimate", "--synthetic", "uniform", "--concentration", "1.5"]);
        assert_eq!(run(&domain).unwrap_err().exit_code(), 4);
        let bad_law = cfg(&["--command", "estimate", "--synthetic", "gauss:0:1", "--concentration", "0.5"]);
        assert_eq!(run(&bad_law).unwrap_err().exit_code(), 2);
        let series_auto = cfg(&["--command", "estimate", "--estimator", "series", "--synthetic", "uniform"]);
        assert_eq!(run(&series_auto).unwrap_err().exit_code(), 2);
        assert_eq!(main_with(["circkde", "--command", "nonsense"]), 2);
    }

    #[test]
    fn fmt17_round_trips() {
        for x in [0.1, -std::f64::consts::PI, 1.0 / 3.0, 1e-300, 6.02214076e23] {
            assert_eq!(fmt17(x).parse::<f64>().unwrap(), x);
        }
    }
}
