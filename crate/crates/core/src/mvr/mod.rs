//! Minimum violation rankings.
//!
//! [`sample_mvr`] explores rankings with zero-temperature Metropolis-Hastings
//! chains, keeps the samples with the highest score and turns them into
//! per-node prestige scores (mean sampled rank). [`brute_force_mvr`] is the
//! exact answer for small networks.

mod io;
mod objective;
mod oracle;
mod ranking;
mod sampler;

pub use io::{load_ranking_csv, load_sampler_config, write_ranking_csv, RANKING_COLUMNS};
pub use objective::{delta_swap, directed_weights, net_score, rho, rho_from_score};
pub use oracle::{brute_force_mvr, ExactMvr, MAX_EXHAUSTIVE_NODES};
pub use ranking::Ranking;
pub use sampler::{
    initial_ranking, run_chain, sample_mvr, Chain, ChainRun, MvrResult, SamplerConfig, Step,
};
