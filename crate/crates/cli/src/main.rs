//! `spectra`: interval spectra of edge labelings from the command line.

mod commands;
mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use input::{GraphArgs, LabelArgs};

/// Version of the JSON documents written by every subcommand.
pub const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "spectra", version, about = "Interval vertex spectra of edge labelings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report spectra, interval vertices and the component classification for one labeling.
    Analyze(AnalyzeArgs),
    /// Check the classification over all or sampled bijective labelings.
    Verify(VerifyArgs),
    /// Structural summary of a graph and its distribution of |U|.
    Stats(StatsArgs),
    /// Search for a labeling with many interval vertices.
    Search(SearchArgs),
    /// Build, recognise and label galaxies.
    #[command(subcommand)]
    Galaxy(GalaxyCommand),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub labeling: LabelArgs,
    /// Also list every gradient path.
    #[arg(long)]
    pub gradient: bool,
    /// Cap on listed gradient paths.
    #[arg(long, default_value_t = 10_000)]
    pub max_paths: usize,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(id = "mode", required = true, multiple = false, args = ["exhaustive", "samples"])]
pub struct VerifyArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Every one of the |E|! bijective labelings.
    #[arg(long)]
    pub exhaustive: bool,
    /// Number of uniformly random bijective labelings.
    #[arg(long, value_name = "N")]
    pub samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Visit one labeling of each complementary pair (exhaustive mode).
    #[arg(long)]
    pub prune: bool,
    /// Worker threads.
    #[arg(long, value_name = "K")]
    pub shards: Option<usize>,
    /// Lift the edge-count guard on exhaustive runs.
    #[arg(long)]
    pub allow_large: bool,
    /// Write one reproduction file per stored violation here.
    #[arg(long, value_name = "DIR")]
    pub repro_dir: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Sample this many labelings instead of enumerating all of them.
    #[arg(long, value_name = "N")]
    pub samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Move evaluations per restart.
    #[arg(long, default_value_t = 100_000)]
    pub budget: u64,
    #[arg(long, default_value_t = 5)]
    pub restarts: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GalaxyCommand {
    /// Print T[A] for the pendant counts A as an edge list.
    Build {
        /// Pendant counts, e.g. `1,0,2`.
        #[arg(value_name = "A", allow_hyphen_values = true)]
        counts: String,
    },
    /// Decide whether a graph is a galaxy and print its decomposition.
    Check {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Print a labeling under which every vertex has an interval spectrum.
    Label {
        #[command(flatten)]
        graph: GraphArgs,
    },
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Guard(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            Self::Input(_) => 1,
            Self::Guard(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Input(m) | Self::Guard(m) => f.write_str(m),
        }
    }
}

/// What a successful command found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Finding {
    Clean,
    Violation,
}

/// Writes `value` as pretty JSON to `out` or stdout.
pub fn emit_json<T: Serialize>(value: &T, out: Option<&PathBuf>) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    emit_text(&text, out)
}

pub fn emit_text(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<Finding, CliError> {
    if !matches!(cli.command, Command::Verify(_)) {
        // Only `verify` shards its work.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(1).build_global();
    }
    match cli.command {
        Command::Analyze(args) => commands::analyze(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Stats(args) => commands::stats(&args),
        Command::Search(args) => commands::search(&args),
        Command::Galaxy(cmd) => commands::galaxy(&cmd),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Finding::Clean) => ExitCode::SUCCESS,
        Ok(Finding::Violation) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
