//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input (bad flags, malformed or invalid
//! configuration, unverified witness), 2 internal failure (I/O). Every failure
//! also prints one JSON line `{"error": <kind>, "message": ...}` on stderr.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::config::load_config;
use crate::covering::estimate_doubling;
use crate::error::{Error, Result};
use crate::experiments::{
    bs_sweep, check_bilipschitz_transfer, check_snowflake_transfer, fit_c_delta, SweepSpec,
    TransferMap, FIT_HEADER, SWEEP_HEADER,
};
use crate::metric::PointConfiguration;
use crate::records::{write_records, write_records_to, Format};
use crate::support::{supported_points, SolverMode, SupportParams};
use crate::witness::construct_witness;

#[derive(Parser, Debug)]
#[command(
    name = "bslemma",
    version,
    about = "Supported points, doubling estimates and non-doubling witnesses for finite metric configurations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// `json` or `csv`.
    #[arg(long)]
    pub format: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify every point of a configuration as (δ, s)-supported or not.
    Supported {
        config: PathBuf,
        /// δ in (0, 1); decimal or rational such as `1/20`.
        #[arg(long)]
        delta: String,
        #[arg(long = "s")]
        s: usize,
        /// restricted-to-c | euclidean-exact-2d | candidate-grid-<N>; defaults to the best for the space.
        #[arg(long)]
        solver: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Estimate the doubling ratio and dimension of a configuration.
    Doubling {
        config: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build and verify the well-separated witness set of a configuration.
    /// Exits 0 only if the witness verifies.
    Witness {
        config: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run a seeded (δ, s) sweep described by a JSON file.
    Sweep {
        spec: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
        /// Also write the per-δ constant fit as CSV.
        #[arg(long)]
        fit: Option<PathBuf>,
        /// Dimension n of the reference curve δ^-n log(1/δ).
        #[arg(long, default_value_t = 2)]
        reference_dim: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check the snowflake transfer (with --epsilon) or the bi-Lipschitz
    /// transfer (with --map) on a configuration.
    Transfer {
        config: PathBuf,
        #[arg(long)]
        delta: String,
        #[arg(long)]
        epsilon: Option<String>,
        /// JSON file with `matrix`, `offset`, `lipschitz`.
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long = "s", default_value_t = 2)]
        s: usize,
        #[arg(long)]
        solver: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// Parses a decimal (`0.05`) or a rational (`1/20`).
pub fn parse_real(text: &str) -> Result<f64> {
    let bad = || Error::InvalidParameter(format!("cannot parse {text:?} as a number"));
    let value = match text.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0.0 {
                return Err(bad());
            }
            num / den
        }
        None => text.trim().parse().map_err(|_| bad())?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(bad())
    }
}

fn parse_unit(text: &str, name: &str) -> Result<f64> {
    let v = parse_real(text)?;
    if v > 0.0 && v < 1.0 {
        Ok(v)
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must lie in (0, 1), got {text}"
        )))
    }
}

/// A missing input is the caller's mistake (exit 1), unlike a failed read or write.
fn input(path: &Path) -> Result<&Path> {
    if path.is_file() {
        Ok(path)
    } else {
        Err(Error::InvalidParameter(format!(
            "no such input file: {}",
            path.display()
        )))
    }
}

fn load(path: &Path) -> Result<PointConfiguration> {
    load_config(input(path)?)?.materialize()
}

fn format_of(out: &OutputArgs, default: Format) -> Result<Format> {
    out.format.as_deref().map_or(Ok(default), str::parse)
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit_json<T: Serialize>(value: &T, out: &OutputArgs) -> Result<()> {
    let mut w = sink(out.output.as_deref())?;
    serde_json::to_writer_pretty(&mut w, value)?;
    w.write_all(b"\n")?;
    w.flush()?;
    Ok(())
}

fn emit<T: Serialize, R: Serialize>(
    value: &T,
    rows: &[R],
    header: &[&str],
    out: &OutputArgs,
    default: Format,
) -> Result<()> {
    match format_of(out, default)? {
        Format::Json => emit_json(value, out),
        Format::Csv => {
            let mut w = sink(out.output.as_deref())?;
            write_records_to(&mut w, rows, header, Format::Csv)?;
            w.flush()?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct SupportRow {
    index: usize,
    isolation_radius: f64,
    outer_count: usize,
    deficit: usize,
    supported: bool,
}

#[derive(Serialize)]
struct WitnessOutput<'a> {
    #[serde(flatten)]
    result: &'a crate::witness::WitnessResult,
    delta_rational: &'static str,
}

/// Runs one parsed command. `Ok(code)` carries non-error exit codes (an
/// unverified witness returns 1).
pub fn run_command(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Supported {
            config,
            delta,
            s,
            solver,
            out,
        } => {
            let delta = parse_unit(delta, "delta")?;
            let params = SupportParams::new(delta, *s)?;
            let c = load(config)?;
            let mode = match solver {
                Some(name) => name.parse()?,
                None => SolverMode::best_for(c.space()),
            };
            let report = supported_points(&c, params, mode)?;
            let rows: Vec<SupportRow> = report
                .points
                .iter()
                .map(|p| SupportRow {
                    index: p.index,
                    isolation_radius: p.isolation_radius,
                    outer_count: p.outer_count,
                    deficit: p.deficit,
                    supported: p.supported,
                })
                .collect();
            emit(
                &report,
                &rows,
                &[
                    "index",
                    "isolation_radius",
                    "outer_count",
                    "deficit",
                    "supported",
                ],
                out,
                Format::Json,
            )?;
            Ok(0)
        }
        Command::Doubling {
            config,
            samples,
            seed,
            out,
        } => {
            let c = load(config)?;
            let est = estimate_doubling(&c, *samples, *seed)?;
            emit(
                &est,
                &est.samples,
                &["center", "radius", "cover_count", "coarse_count", "ratio"],
                out,
                Format::Json,
            )?;
            Ok(0)
        }
        Command::Witness { config, out } => {
            let a = load(config)?;
            let result = construct_witness(&a)?;
            emit_json(
                &WitnessOutput {
                    result: &result,
                    delta_rational: "1/20",
                },
                out,
            )?;
            Ok(if result.verified { 0 } else { 1 })
        }
        Command::Sweep {
            spec,
            seed,
            trials,
            fit,
            reference_dim,
            out,
        } => {
            let file = File::open(input(spec)?)?;
            let mut spec: SweepSpec = serde_json::from_reader(io::BufReader::new(file))?;
            if let Some(seed) = seed {
                spec.seed = *seed;
            }
            if let Some(trials) = trials {
                spec.trials = *trials;
            }
            let records = bs_sweep(&spec)?;
            let format = format_of(out, Format::Csv)?;
            match &out.output {
                Some(path) => write_records(&records, path, &SWEEP_HEADER, format)?,
                None => write_records_to(io::stdout().lock(), &records, &SWEEP_HEADER, format)?,
            }
            if let Some(path) = fit {
                let fits = fit_c_delta(&records, *reference_dim)?;
                write_records(&fits, path, &FIT_HEADER, Format::Csv)?;
            }
            Ok(0)
        }
        Command::Transfer {
            config,
            delta,
            epsilon,
            map,
            s,
            solver,
            out,
        } => {
            let delta = parse_unit(delta, "delta")?;
            let c = load(config)?;
            let mode = match solver {
                Some(name) => name.parse()?,
                None => SolverMode::best_for(c.space()),
            };
            match (epsilon, map) {
                (Some(eps), None) => {
                    let eps = parse_unit(eps, "epsilon")?;
                    let report = check_snowflake_transfer(&c, eps, delta, mode)?;
                    emit_json(&report, out)?;
                    Ok(if report.equal { 0 } else { 1 })
                }
                (None, Some(path)) => {
                    let raw: TransferMap =
                        serde_json::from_reader(io::BufReader::new(File::open(input(path)?)?))?;
                    let map = TransferMap::new(raw.matrix, raw.offset, raw.lipschitz)?;
                    let report = check_bilipschitz_transfer(&c, &map, delta, *s, mode)?;
                    emit_json(&report, out)?;
                    Ok(if report.holds { 0 } else { 1 })
                }
                _ => Err(Error::InvalidParameter(
                    "transfer needs exactly one of --epsilon or --map".into(),
                )),
            }
        }
    }
}

fn diagnostic(kind: &str, message: &str) {
    let line = serde_json::json!({ "error": kind, "message": message });
    eprintln!("{line}");
}

/// Parses arguments, runs the command and maps the outcome to an exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return 0;
            }
            let _ = e.print();
            diagnostic("usage", &e.kind().to_string());
            return 1;
        }
    };
    match run_command(&cli) {
        Ok(code) => code,
        Err(e) => {
            diagnostic(e.kind(), &e.to_string());
            if e.is_internal() {
                2
            } else {
                1
            }
        }
    }
}
