use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tilepack::generators::YShape;
use tilepack::heuristics::OrderStrategy;

#[derive(Debug, Parser)]
#[command(
    name = "tilepack",
    version,
    about = "Pack sparse rows into short gap-free placements"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance file and print the value and witness.
    Solve(SolveArgs),
    /// Check a placement file against an instance file.
    Verify(VerifyArgs),
    /// Write a generated instance.
    Gen(GenArgs),
    /// Run the heuristics over a parameter sweep and write CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Greedy,
    Dp,
    Dp1,
    Doubling,
    Brute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Length,
    Maxshift,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    None,
    Incfreq,
    Decfreq,
    Incdens,
    Decdens,
    Random,
}

impl OrderArg {
    pub fn strategy(self, restarts: usize, seed: u64) -> OrderStrategy {
        match self {
            OrderArg::None => OrderStrategy::None,
            OrderArg::Incfreq => OrderStrategy::IncFreq,
            OrderArg::Decfreq => OrderStrategy::DecFreq,
            OrderArg::Incdens => OrderStrategy::IncDens,
            OrderArg::Decdens => OrderStrategy::DecDens,
            OrderArg::Random => OrderStrategy::Random { restarts, seed },
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Instance file.
    pub instance: PathBuf,
    #[arg(long, value_enum, default_value = "dp")]
    pub algo: Algo,
    /// Overrides the objective named in the file header.
    #[arg(long, value_enum)]
    pub objective: Option<ObjectiveArg>,
    #[arg(long, value_enum, default_value = "none")]
    pub order: OrderArg,
    #[arg(long, default_value_t = tilepack::heuristics::DEFAULT_RESTARTS)]
    pub restarts: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest number of stored DP entries (also `TILEPACK_STATE_CAP`).
    #[arg(long)]
    pub state_cap: Option<u64>,
    /// Largest start offset tried by `brute`; defaults to one that covers
    /// every gap-free placement.
    #[arg(long)]
    pub offset_cap: Option<usize>,
    /// Lift the tile count and offset guards of `brute`.
    #[arg(long)]
    pub unguarded: bool,
    /// Write the placement here instead of printing it.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub instance: PathBuf,
    pub witness: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Lowerbound,
    Ziegler,
    Exp2,
    Exp3,
    Coupled,
    Clique,
    Gap,
    Random,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: GenFamily,
    #[arg(long)]
    pub delta: Option<usize>,
    #[arg(long)]
    pub c: Option<usize>,
    #[arg(long)]
    pub g: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value = "balanced")]
    pub y_shape: YShape,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub min_len: usize,
    #[arg(long, default_value_t = 6)]
    pub max_len: usize,
    #[arg(long, default_value_t = 0.2)]
    pub min_density: f64,
    #[arg(long, default_value_t = 0.8)]
    pub max_density: f64,
    /// Coupled tasks as `a,gap,b` triples separated by `;`.
    #[arg(long)]
    pub tasks: Option<String>,
    #[arg(long)]
    pub makespan: Option<u64>,
    #[arg(long)]
    pub vertices: Option<usize>,
    /// Edges as `a-b` pairs separated by commas.
    #[arg(long, default_value = "")]
    pub edges: String,
    #[arg(long)]
    pub k: Option<usize>,
    /// Largest tile length the clique reduction may emit.
    #[arg(long, default_value_t = 1 << 22)]
    pub budget: u64,
    /// Base instance file for the gap gadget.
    #[arg(long)]
    pub base: Option<PathBuf>,
    #[arg(long)]
    pub rho: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the family's reference layout as a placement file.
    #[arg(long)]
    pub layout: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub family: crate::bench::BenchFamily,
    /// Sweep lists: `2,4,6`, `2..10` or `2..10:2`.
    #[arg(long, default_value = "")]
    pub c: String,
    #[arg(long, default_value = "")]
    pub g: String,
    #[arg(long, default_value = "")]
    pub n: String,
    #[arg(long, default_value = "")]
    pub delta: String,
    #[arg(long, default_value = "0")]
    pub seeds: String,
    #[arg(long, default_value_t = tilepack::heuristics::DEFAULT_RESTARTS)]
    pub restarts: usize,
    #[arg(long, default_value = "balanced")]
    pub y_shape: YShape,
    /// Add a row with the exact optimum for every point.
    #[arg(long)]
    pub with_exact: bool,
    #[arg(long)]
    pub state_cap: Option<u64>,
    /// Write 0 for every runtime so repeated runs give identical files.
    #[arg(long)]
    pub no_timing: bool,
    /// CSV output; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Long-format per-point series for plotting.
    #[arg(long)]
    pub plot_data: Option<PathBuf>,
}
