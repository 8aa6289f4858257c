use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use proxima_cli::gen::{generate_random_scenario, GenParams};
use proxima_cli::runner::{run_instance, RunConfig, RunOutcome};
use proxima_cli::scenario::{ScenarioError, ScenarioFile};

/// Hypothesis checking and best-proximity iteration on scenario files.
#[derive(Parser)]
#[command(name = "proxima", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// Scenario file (JSON).
    scenario: PathBuf,
    /// Output directory for the report and trace files.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Override the scenario's iteration cap.
    #[arg(long)]
    max_iter: Option<usize>,
    /// Override both stop tolerances.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Run hypothesis checks only.
    Check(RunArgs),
    /// Run solver iterations only.
    Solve(RunArgs),
    /// Run checks, solver iterations, and route equivalence.
    Run(RunArgs),
    /// Compare the direct and induced-map iteration routes only.
    CompareRoutes(RunArgs),
    /// Generate a deterministic random scenario.
    Gen {
        /// RNG seed; the output is a pure function of seed and size.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of points in A (and B).
        #[arg(long, default_value_t = 5)]
        size: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load(args: &RunArgs) -> Result<ScenarioFile, ScenarioError> {
    let mut scn = ScenarioFile::load(&args.scenario)?;
    if let Some(max_iter) = args.max_iter {
        scn.stop.max_iter = max_iter;
    }
    if let Some(tol) = args.tol {
        scn.stop.tol_step = tol;
        scn.stop.tol_residual = tol;
    }
    Ok(scn)
}

fn write_outcome(out_dir: &Path, outcome: &RunOutcome) -> anyhow::Result<()> {
    std::fs::create_dir_all(out_dir)
        .with_context(|| format!("cannot create {}", out_dir.display()))?;
    let report_path = out_dir.join("report.json");
    let mut text = serde_json::to_string_pretty(&outcome.report)?;
    text.push('\n');
    std::fs::write(&report_path, text)
        .with_context(|| format!("cannot write {}", report_path.display()))?;
    for (name, csv) in &outcome.traces {
        std::fs::write(out_dir.join(name), csv)?;
    }
    Ok(())
}

fn dispatch(args: &RunArgs, cfg: RunConfig) -> ExitCode {
    let scn = match load(args) {
        Ok(scn) => scn,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let label = args.scenario.display().to_string();
    let started = Instant::now();
    let outcome = match run_instance(&scn, &label, &cfg) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = write_outcome(&args.out, &outcome) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    eprintln!(
        "{label}: exit {} ({} traces, {:.1} ms)",
        outcome.exit_code,
        outcome.traces.len(),
        started.elapsed().as_secs_f64() * 1e3
    );
    ExitCode::from(outcome.exit_code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Check(args) => {
            dispatch(args, RunConfig { checks: true, solve: false, routes: false })
        }
        Command::Solve(args) => {
            dispatch(args, RunConfig { checks: false, solve: true, routes: false })
        }
        Command::Run(args) => dispatch(args, RunConfig::all()),
        Command::CompareRoutes(args) => {
            dispatch(args, RunConfig { checks: false, solve: false, routes: true })
        }
        Command::Gen { seed, size, out } => {
            let scn = generate_random_scenario(*seed, &GenParams { size: *size });
            let mut text = serde_json::to_string_pretty(&scn).expect("scenario serializes");
            text.push('\n');
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
    }
}
