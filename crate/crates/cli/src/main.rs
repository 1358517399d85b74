//! `lospa-eval`: LOSPA / OSPA evaluation of estimated multitarget trajectories.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use lospa_core::constants::{BRUTE_CAP_ENV, DEFAULT_BRUTE_FORCE_CAP};
use lospa_core::demo::run_demo;
use lospa_core::trajectory::{load_trajectory_with_shape, Shape};
use lospa_core::{evaluate, BaseMetric, LospaParams, SolverBackend, TrajectoryFormat};

const EXIT_INPUT: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "lospa-eval",
    about = "Labelled OSPA evaluation of multitarget trajectories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare an estimated trajectory against ground truth and emit a JSON report.
    Compute(ComputeArgs),
    /// Reproduce the built-in three-target example and check it against its closed form.
    Demo,
    /// Print the version.
    Version,
}

#[derive(clap::Args)]
struct ComputeArgs {
    /// Ground-truth trajectory file
    #[arg(long)]
    truth: PathBuf,
    /// Estimated trajectory file
    #[arg(long)]
    est: PathBuf,
    /// Exponent p, 1 <= p < inf
    #[arg(long)]
    p: f64,
    /// Label-error penalty alpha (0 gives OSPA without cut-off)
    #[arg(long)]
    alpha: f64,
    /// Base metric: `euclidean` or `pnorm:<q>`
    #[arg(long, default_value = "euclidean")]
    metric: BaseMetric,
    #[arg(long, value_enum, default_value_t = Backend::Optimal)]
    backend: Backend,
    /// Input format; guessed from the file extension when omitted
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Number of targets, for CSV files without a `# t=.. nx=..` line
    #[arg(long)]
    t: Option<usize>,
    /// Per-target dimension, for CSV files without a `# t=.. nx=..` line
    #[arg(long)]
    nx: Option<usize>,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Brute,
    Optimal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for TrajectoryFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => TrajectoryFormat::Csv,
            Format::Json => TrajectoryFormat::Json,
        }
    }
}

fn brute_cap() -> anyhow::Result<usize> {
    match std::env::var(BRUTE_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{BRUTE_CAP_ENV}={v:?} is not a non-negative integer")),
        Err(_) => Ok(DEFAULT_BRUTE_FORCE_CAP),
    }
}

fn resolve_format(explicit: Option<Format>, path: &Path) -> anyhow::Result<TrajectoryFormat> {
    match explicit {
        Some(f) => Ok(f.into()),
        None => TrajectoryFormat::from_path(path)
            .with_context(|| format!("cannot infer format of {}; pass --format", path.display())),
    }
}

fn compute(args: ComputeArgs) -> anyhow::Result<()> {
    let params = LospaParams::new(args.p, args.alpha, args.metric)?;
    let backend = match args.backend {
        Backend::Brute => SolverBackend::BruteForce { cap: brute_cap()? },
        Backend::Optimal => SolverBackend::OptimalAssignment,
    };
    let shape = match (args.t, args.nx) {
        (Some(t), Some(nx)) => Some(Shape { t, nx }),
        (None, None) => None,
        _ => anyhow::bail!("--t and --nx must be given together"),
    };

    let truth_format = resolve_format(args.format, &args.truth)?;
    let est_format = resolve_format(args.format, &args.est)?;
    let truth = load_trajectory_with_shape(&args.truth, truth_format, shape)
        .with_context(|| format!("reading {}", args.truth.display()))?;
    let estimate = load_trajectory_with_shape(&args.est, est_format, shape)
        .with_context(|| format!("reading {}", args.est.display()))?;

    let report = evaluate(&truth, &estimate, &params, backend)?;
    let json = report.to_json();
    match args.out {
        Some(path) => {
            std::fs::write(&path, json).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{json}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Compute(args) => match compute(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(EXIT_INPUT)
            }
        },
        Command::Demo => {
            let outcome = run_demo();
            print!("{}", outcome.render());
            if outcome.passed() {
                ExitCode::SUCCESS
            } else {
                eprintln!("demo mismatch");
                ExitCode::from(EXIT_MISMATCH)
            }
        }
        Command::Version => {
            println!("lospa-eval {}", env!("CARGO_PKG_VERSION"));
            ExitCode::SUCCESS
        }
    }
}
