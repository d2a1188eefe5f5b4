use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hierarchyrank::network::YearRange;

#[derive(Debug, Parser)]
#[command(
    name = "hierarchyrank",
    version,
    about = "Prestige hierarchies in hiring networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Infer a consensus minimum-violation ranking.
    Rank(RankArgs),
    /// Compare the hierarchy strength against degree-preserving null networks.
    Null(NullArgs),
    /// Production inequality and placement mobility.
    Metrics(MetricsArgs),
    /// Generate a network with a planted hierarchy.
    Synth(SynthArgs),
    /// Exact minimum-violation rankings of a small edge list.
    Oracle(OracleArgs),
    /// Re-run the command recorded in a manifest.
    Replay(ReplayArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Person-level hiring records CSV.
    #[arg(long)]
    pub records: Option<PathBuf>,
    /// Edge-list CSV (`src,dst,weight`).
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Args, Default)]
pub struct FilterArgs {
    /// Keep records with doctoral year in the half-open range A:B.
    #[arg(long, value_name = "A:B", value_parser = parse_years)]
    pub years: Option<YearRange>,
    /// Keep records from this discipline (repeatable).
    #[arg(long = "discipline", value_name = "NAME")]
    pub disciplines: Vec<String>,
    /// Keep records whose two institutions are both listed in FILE.
    #[arg(long, value_name = "FILE")]
    pub whitelist: Option<PathBuf>,
}

impl FilterArgs {
    pub fn is_empty(&self) -> bool {
        self.years.is_none() && self.disciplines.is_empty() && self.whitelist.is_none()
    }
}

#[derive(Debug, Args, Default)]
pub struct SamplerArgs {
    /// Proposals per chain [default: 100000].
    #[arg(long)]
    pub iters: Option<u64>,
    /// Proposals before recording starts [default: 20000].
    #[arg(long)]
    pub burnin: Option<u64>,
    /// Proposals between recorded rankings [default: 100].
    #[arg(long)]
    pub interval: Option<u64>,
    /// Independent chains [default: 10].
    #[arg(long)]
    pub restarts: Option<u32>,
    /// Flat key=value sampler file; explicit flags override it.
    #[arg(long, value_name = "FILE")]
    pub sampler_config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub filter: FilterArgs,
    #[command(flatten)]
    pub sampler: SamplerArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print only the top K institutions (the CSV always has all of them).
    #[arg(long, value_name = "K")]
    pub top: Option<usize>,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct NullArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub filter: FilterArgs,
    #[command(flatten)]
    pub sampler: SamplerArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Bootstrap and null replicates, each.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(2..))]
    pub replicates: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricKind {
    Gini,
    Lorenz,
    Rankchange,
    Ks,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    pub metric: MetricKind,
    #[arg(long)]
    pub records: PathBuf,
    /// Ranking CSV from `rank`; required for rankchange and ks.
    #[arg(long)]
    pub ranking: Option<PathBuf>,
    /// Cohort year range A:B; ks takes exactly two.
    #[arg(long = "cohort", value_name = "A:B", value_parser = parse_years)]
    pub cohorts: Vec<YearRange>,
    #[command(flatten)]
    pub filter: FilterArgs,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub nodes: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub edges: u64,
    #[arg(long, value_parser = parse_p_down)]
    pub pdown: f64,
    #[arg(long, default_value_t = 1.0, value_parser = parse_skew)]
    pub skew: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Edge-list CSV with at most 10 institutions.
    #[arg(long)]
    pub edges: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
    /// Write outputs here instead of the recorded directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_years(s: &str) -> Result<YearRange, String> {
    s.parse().map_err(|e: hierarchyrank::Error| e.to_string())
}

fn parse_p_down(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if (0.5..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("{p} is outside [0.5, 1]"))
    }
}

fn parse_skew(s: &str) -> Result<f64, String> {
    let k: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if k >= 0.0 && k.is_finite() {
        Ok(k)
    } else {
        Err(format!("{k} must be finite and non-negative"))
    }
}
