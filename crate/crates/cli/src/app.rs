use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use repeatvote::{compare_procedures, run_scenario};

use crate::config::{expand_sweep, parse_config, ConfigError};
use crate::report::{
    comparison_records, records, records_labelled, write_records, Format, ReportError,
};

/// Environment variable capping harness threads; 0 or unset means automatic.
pub const THREADS_ENV: &str = "REPEATVOTE_THREADS";

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;
pub const EXIT_SIMULATION: i32 = 4;
pub const EXIT_IO: i32 = 5;

const AFTER_HELP: &str = "\
Exit codes:
  0  success
  2  bad invocation (unknown flag, missing --config, bad REPEATVOTE_THREADS)
  3  invalid scenario file
  4  simulation failed
  5  output could not be written

Environment:
  REPEATVOTE_THREADS  cap on worker threads (0 or unset: one per core)";

#[derive(Debug, Parser)]
#[command(name = "repeatvote", version, about = "Simulate repeat voting against single-round voting", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one scenario and report every variant.
    Run(RunArgs),
    /// Run a scenario and add paired deltas against single-round voting.
    Compare(RunArgs),
    /// Run every point of the scenario's [sweep] grid.
    Sweep(RunArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Scenario file.
    #[arg(long)]
    pub config: PathBuf,
    /// Master seed, overriding the scenario's.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Replication count, overriding the scenario's.
    #[arg(long)]
    pub reps: Option<u32>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Config(#[from] ConfigError),
    #[error("simulation failed: {0}")]
    Simulation(#[from] repeatvote::Error),
    #[error("{0}")]
    Io(#[from] ReportError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Simulation(_) => EXIT_SIMULATION,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

/// Reads the thread cap from the environment.
pub fn threads_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var(THREADS_ENV) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(CliError::Usage(format!("{THREADS_ENV}: {e}"))),
        Ok(s) if s.trim().is_empty() => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(0) => Ok(None),
            Ok(n) => Ok(Some(n)),
            Err(_) => Err(CliError::Usage(format!(
                "{THREADS_ENV} must be a non-negative integer, got `{s}`"
            ))),
        },
    }
}

pub fn execute(cmd: &Command, threads: Option<usize>) -> Result<(), CliError> {
    let (args, kind) = match cmd {
        Command::Run(a) => (a, 0),
        Command::Compare(a) => (a, 1),
        Command::Sweep(a) => (a, 2),
    };
    let mut cfg = parse_config(&args.config)?;
    if let Some(seed) = args.seed {
        cfg.master_seed = seed;
    }
    if let Some(reps) = args.reps {
        cfg.replications = reps;
        cfg.validate().map_err(ConfigError::from)?;
    }
    let rows = match kind {
        0 => records(&run_scenario(&cfg, threads)?),
        1 => comparison_records(&compare_procedures(&cfg, threads)?),
        _ => {
            let mut rows = Vec::new();
            for point in expand_sweep(&cfg)? {
                let report = run_scenario(&point.config, threads)?;
                rows.extend(records_labelled(&report, &point.label));
            }
            rows
        }
    };
    if rows.is_empty() {
        return Err(ReportError::Empty.into());
    }
    write_records(&rows, args.format, args.out.as_deref())?;
    Ok(())
}
