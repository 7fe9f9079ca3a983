use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "hypermix",
    version,
    about = "Glauber dynamics, coupling certificates and counting for independent sets in hypergraphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Serialize)]
pub struct Global {
    /// Worker threads (defaults to all cores)
    #[arg(long, global = true, env = "HYPERMIX_THREADS")]
    pub threads: Option<usize>,

    /// Seed for randomized subcommands; a fresh one is drawn and reported if absent
    #[arg(long, global = true, env = "HYPERMIX_SEED")]
    pub seed: Option<u64>,

    /// Output format (each subcommand has its own default)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a random d-regular k-uniform hypergraph
    Gen(GenArgs),
    /// Check a hypergraph file and report every defect
    Validate(InputArgs),
    /// Count independent sets exactly
    CountExact(CountExactArgs),
    /// Approximate the number of independent sets by sampling
    CountFpras(CountFprasArgs),
    /// Draw configurations from the discrete-time Glauber dynamics
    Sample(SampleArgs),
    /// Certified (and optionally exact) coupling time of one update stream
    Couple(CoupleArgs),
    /// Classify every space-time site as active, susceptible and bad
    PercClassify(PercArgs),
    /// Search for an all-bad oriented path from row 0 to row M
    PercPath(PercPathArgs),
    /// Activation and susceptibility frequencies against their bounds
    PercSweep(PercSweepArgs),
    /// Expected visits of the lazy random walk to the all-ones corner
    Lsrw(LsrwArgs),
    /// Percolation threshold series p_c(r) and the radius R*
    Pc(PcArgs),
    /// Certified coupling time growth over a grid of n
    MixScaling(MixScalingArgs),
    /// Exact worst-case total-variation distance to uniform
    TvExact(TvExactArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct InputArgs {
    /// Hypergraph file (`n m k` header, one edge per line, 1-based ids)
    #[arg(long = "in", value_name = "PATH")]
    pub input: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct GenArgs {
    /// Number of vertices
    #[arg(long)]
    pub n: usize,
    /// Degree of every vertex
    #[arg(long)]
    pub d: usize,
    /// Edge size
    #[arg(long)]
    pub k: usize,
    /// Rejection-sampling budget
    #[arg(long, default_value_t = 10_000)]
    pub max_attempts: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct CountExactArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub input: InputArgs,
    /// Largest vertex count accepted
    #[arg(long, default_value_t = hypermix_core::counting::DEFAULT_EXACT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct CountFprasArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub input: InputArgs,
    /// Target relative accuracy, in (0, 1)
    #[arg(long)]
    pub eps: f64,
    /// C in the per-sample run length M * ceil(C n ln(n + 1))
    #[arg(long, default_value_t = 20.0)]
    pub burn_in_constant: f64,
}

#[derive(Debug, Args, Serialize)]
pub struct SampleArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub input: InputArgs,
    /// Discrete steps per sample [default: ceil(20 n ln(n + 1))]
    #[arg(long)]
    pub steps: Option<u64>,
    /// Number of independent samples
    #[arg(long, default_value_t = 1)]
    pub samples: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct StreamArgs {
    /// Replay this update stream (`v t mark` lines) instead of sampling one
    #[arg(long, value_name = "PATH")]
    pub stream: Option<PathBuf>,
    /// Save the update stream used
    #[arg(long, value_name = "PATH")]
    pub stream_out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct CoupleArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub stream: StreamArgs,
    /// Length of the sampled stream [default: 20 ln(n + 1) + 40]
    #[arg(long)]
    pub horizon: Option<f64>,
    /// Also run the exhaustive oracle when there are at most this many independent sets
    #[arg(long)]
    pub exhaustive_cap: Option<usize>,
}

#[derive(Debug, Args, Serialize)]
pub struct PercArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub stream: StreamArgs,
    /// Highest block index M; the stream must cover [0, (M + 1) k]
    #[arg(long)]
    pub blocks: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    General,
    Linear,
}

#[derive(Debug, Args, Serialize)]
pub struct PercPathArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub perc: PercArgs,
    /// Site adjacency used for the search
    #[arg(long, value_enum, default_value_t = Variant::General)]
    pub variant: Variant,
    /// Delete sites until the path has no shortcuts
    #[arg(long)]
    pub minimize: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct PercSweepArgs {
    /// Edge sizes to sweep
    #[arg(long, value_delimiter = ',', default_value = "3,4,5,6,7,8")]
    pub k: Vec<usize>,
    /// Degrees to sweep
    #[arg(long, value_delimiter = ',', default_value = "2,3")]
    pub degrees: Vec<usize>,
    /// Streams per cell
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    /// Block index of the probed site (at least 1)
    #[arg(long, default_value_t = 1)]
    pub block: usize,
    /// With csv output, also write the JSON summary here
    #[arg(long, value_name = "PATH")]
    pub summary: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Start {
    AllOnes,
    OneZero,
}

#[derive(Debug, Args, Serialize)]
pub struct LsrwArgs {
    /// Dimension of the hypercube
    #[arg(long)]
    pub m: u32,
    /// Starting corner
    #[arg(long, value_enum, default_value_t = Start::AllOnes)]
    pub start: Start,
    /// Monte Carlo trials; the closed form is used when absent
    #[arg(long)]
    pub trials: Option<u64>,
}

#[derive(Debug, Args, Serialize)]
pub struct PcArgs {
    /// Maximum degree
    #[arg(long)]
    pub max_degree: u64,
    /// Edge size
    #[arg(long)]
    pub k: u64,
    /// Cycle length threshold r [default: R*]
    #[arg(long)]
    pub r: Option<u64>,
}

#[derive(Debug, Args, Serialize)]
pub struct MixScalingArgs {
    /// Edge size
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    /// Degree of the generated instances
    #[arg(long, default_value_t = 2)]
    pub max_degree: usize,
    /// Vertex counts
    #[arg(long, value_delimiter = ',', default_value = "50,100,200,400")]
    pub n_grid: Vec<usize>,
    /// Replicas per vertex count
    #[arg(long, default_value_t = 30)]
    pub replicas: usize,
    /// Fixed stream length [default: 20 ln(n + 1) + 40]
    #[arg(long)]
    pub horizon: Option<f64>,
    /// Also run the exhaustive oracle up to this many independent sets
    #[arg(long)]
    pub exhaustive_cap: Option<usize>,
    /// With csv output, also write the JSON summary here
    #[arg(long, value_name = "PATH")]
    pub summary: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct TvExactArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub input: InputArgs,
    /// Step counts at which to report the distance
    #[arg(long, value_delimiter = ',', default_value = "0,1,2,5,10,20,50,100")]
    pub t_grid: Vec<u64>,
}
