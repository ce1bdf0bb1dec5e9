mod commands;
mod experiment;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Monochromatic triangle tilings of 2-edge-coloured graphs.
#[derive(Debug, Parser)]
#[command(name = "tritile", version)]
pub struct Cli {
    /// Worker threads for parallel sections. Never changes reported values.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a random or extremal instance (plus `.meta` sidecar for extremal ones).
    Generate(GenerateArgs),
    /// Solve an instance and write a JSON report.
    Solve(SolveArgs),
    /// Check a tiling file against an instance; exit 0 iff valid.
    Verify(VerifyArgs),
    /// Print the bound table for (n, delta).
    Bounds(BoundsArgs),
    /// Chromatic parameters, admissible constants and reduction diagnostics.
    Theory(TheoryArgs),
    /// Run a TOML-configured sweep and append CSV rows.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Weak,
    Strong,
}

impl From<ModeArg> for tritile::Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Weak => tritile::Mode::Weak,
            ModeArg::Strong => tritile::Mode::Strong,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Target minimum degree. Required with `--extremal`; otherwise the
    /// instance is a random graph of exactly this minimum degree.
    #[arg(long)]
    pub delta: Option<usize>,
    #[arg(long)]
    pub seed: u64,
    /// Build the multipartite construction with triangle-free parts.
    #[arg(long)]
    pub extremal: bool,
    /// `catalog` or `process`, for the parts of an extremal instance.
    #[arg(long, default_value = "catalog")]
    pub method: String,
    /// Edge probability when `--delta` is absent.
    #[arg(long, default_value_t = 0.5)]
    pub p_edge: f64,
    #[arg(long, default_value_t = 0.5)]
    pub p_red: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub instance: PathBuf,
    /// Branch-and-bound search (default).
    #[arg(long, conflicts_with = "heuristic")]
    pub exact: bool,
    /// Greedy plus local search; needs `--seed`.
    #[arg(long)]
    pub heuristic: bool,
    #[arg(long, value_enum, default_value = "weak")]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 50_000_000)]
    pub budget: u64,
    #[arg(long, default_value_t = 200)]
    pub iters: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Slack subtracted from the lower bound, as a rational such as `1/100`.
    #[arg(long, default_value = "0")]
    pub gamma: String,
    /// Report file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the tiling in text form.
    #[arg(long)]
    pub tiling_out: Option<PathBuf>,
    /// Leave the runtime block out of the report.
    #[arg(long)]
    pub no_runtime: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long)]
    pub tiling: PathBuf,
    #[arg(long, value_enum, default_value = "weak")]
    pub mode: ModeArg,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub delta: usize,
    #[arg(long, default_value = "0")]
    pub gamma: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TheoryArgs {
    #[command(subcommand)]
    pub command: TheoryCommand,
}

#[derive(Debug, Subcommand)]
pub enum TheoryCommand {
    /// chi, sigma, chi_cr, hcf values and chi* of a small graph.
    Chromatic {
        /// `bowtie`, `k2`, `k3`, `k4`, `c5`, `petersen` or a graph file.
        #[arg(long)]
        graph: String,
    },
    /// Smallest admissible constant C for (k, delta).
    Admissible {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value = "0")]
        c_f2: String,
    },
    /// Auxiliary graph for a base graph, optionally with a perfect F2-tiling.
    Reduce {
        /// Base graph file; a random graph is used with `--k`/`--delta`/`--seed` instead.
        #[arg(long)]
        instance: Option<PathBuf>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Defaults to the admissible value.
        #[arg(long)]
        c: Option<String>,
        #[arg(long, default_value = "0")]
        c_f2: String,
        #[arg(long)]
        tile: bool,
        #[arg(long, default_value_t = 5_000_000)]
        budget: u64,
    },
    /// Refuter and dominating greedy on the pair (0..split, split..n).
    Pair {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        split: usize,
        #[arg(long, default_value = "1/2")]
        d: String,
        #[arg(long, default_value = "1/10")]
        eps: String,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Greedy tiler on a random bowtie blow-up.
    FivePart {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0.8)]
        density: f64,
        #[arg(long, default_value_t = 0.5)]
        p_red: f64,
        #[arg(long, default_value = "1/100")]
        eps: String,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the CSV path from the config.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failure classes, mapped to exit codes 1 and 2.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl From<tritile::Error> for CliError {
    fn from(e: tritile::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    std::panic::set_hook(Box::new(|info| eprintln!("internal error: {info}")));
    match std::panic::catch_unwind(|| commands::run(&cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CliError::Input(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Ok(Err(CliError::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(2),
    }
}
