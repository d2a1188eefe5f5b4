use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mvr::objective::{net_score, rho_from_score, swap_delta};
use crate::mvr::Ranking;
use crate::network::HiringNetwork;

/// Zero-temperature sampler settings. Iterations count proposals, accepted
/// or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub total_iterations: u64,
    pub burn_in: u64,
    pub sample_interval: u64,
    pub restarts: u32,
    pub seed: u64,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            total_iterations: 100_000,
            burn_in: 20_000,
            sample_interval: 100,
            restarts: 10,
            seed: 0,
        }
    }
}

impl SamplerConfig {
    pub fn validate(&self) -> Result<()> {
        if self.total_iterations == 0
            || self.burn_in == 0
            || self.sample_interval == 0
            || self.restarts == 0
        {
            return Err(Error::contract(
                "sampler iterations, burn-in, interval and restarts must be positive",
            ));
        }
        if self.burn_in.saturating_add(self.sample_interval) > self.total_iterations {
            return Err(Error::contract(format!(
                "burn_in ({}) + sample_interval ({}) exceeds total_iterations ({})",
                self.burn_in, self.sample_interval, self.total_iterations
            )));
        }
        Ok(())
    }

    /// Number of rankings one chain records.
    pub fn samples_per_chain(&self) -> u64 {
        (self.total_iterations - self.burn_in) / self.sample_interval
    }
}

fn check_network(net: &HiringNetwork) -> Result<()> {
    if net.n_nodes() < 2 {
        return Err(Error::contract("ranking needs at least two nodes"));
    }
    if net.directed_weight() == 0 {
        return Err(Error::UndefinedRho);
    }
    Ok(())
}

/// Starting point for the first chain: descending out-degree, ties by node id.
pub fn initial_ranking(net: &HiringNetwork) -> Ranking {
    let out = net.out_degree();
    let mut order: Vec<usize> = (0..net.n_nodes()).collect();
    order.sort_by(|&a, &b| out[b].cmp(&out[a]).then(a.cmp(&b)));
    Ranking::from_order(order).expect("sorted ids form a permutation")
}

/// Outcome of a single proposal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub a: usize,
    pub b: usize,
    pub delta: i64,
    pub accepted: bool,
}

/// One zero-temperature Metropolis-Hastings chain over rankings. A proposal
/// exchanges the ranks of a uniformly chosen pair of distinct nodes and is
/// accepted iff it does not lower the score.
pub struct Chain<'a> {
    net: &'a HiringNetwork,
    ranking: Ranking,
    score: i64,
    rng: ChaCha8Rng,
}

impl<'a> Chain<'a> {
    pub fn new(net: &'a HiringNetwork, seed: u64) -> Result<Self> {
        check_network(net)?;
        let ranking = initial_ranking(net);
        let score = net_score(net, &ranking)?;
        Ok(Chain {
            net,
            ranking,
            score,
            rng: ChaCha8Rng::seed_from_u64(seed),
        })
    }

    /// Like [`Chain::new`] but starting from a uniformly random ranking drawn
    /// from the chain's own generator.
    pub fn scrambled(net: &'a HiringNetwork, seed: u64) -> Result<Self> {
        check_network(net)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..net.n_nodes()).collect();
        order.shuffle(&mut rng);
        let ranking = Ranking::from_order(order)?;
        let score = net_score(net, &ranking)?;
        Ok(Chain {
            net,
            ranking,
            score,
            rng,
        })
    }

    pub fn ranking(&self) -> &Ranking {
        &self.ranking
    }

    pub fn score(&self) -> i64 {
        self.score
    }

    pub fn step(&mut self) -> Step {
        let n = self.ranking.len();
        let a = self.rng.random_range(0..n);
        let mut b = self.rng.random_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        let delta = swap_delta(self.net, self.ranking.ranks(), a, b);
        let accepted = delta >= 0;
        if accepted {
            self.ranking.swap_nodes(a, b);
            self.score += delta;
        }
        Step {
            a,
            b,
            delta,
            accepted,
        }
    }
}

/// Rankings recorded by one chain.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainRun {
    pub samples: Vec<Ranking>,
    /// Score of each recorded sample, parallel to `samples`.
    pub scores: Vec<i64>,
    pub best_score: i64,
    pub best_rho: f64,
}

/// Runs one chain for `cfg.total_iterations` proposals. After `burn_in`
/// proposals the current ranking is recorded every `sample_interval`.
pub fn run_chain(net: &HiringNetwork, cfg: &SamplerConfig, chain_seed: u64) -> Result<ChainRun> {
    cfg.validate()?;
    record_chain(net, cfg, Chain::new(net, chain_seed)?)
}

fn record_chain(net: &HiringNetwork, cfg: &SamplerConfig, mut chain: Chain) -> Result<ChainRun> {
    let mut samples = Vec::with_capacity(cfg.samples_per_chain() as usize);
    let mut scores = Vec::with_capacity(samples.capacity());
    for t in 1..=cfg.total_iterations {
        chain.step();
        if t > cfg.burn_in && (t - cfg.burn_in).is_multiple_of(cfg.sample_interval) {
            samples.push(chain.ranking().clone());
            scores.push(chain.score());
        }
    }
    let best_score = *scores.iter().max().expect("at least one sample");
    Ok(ChainRun {
        samples,
        scores,
        best_score,
        best_rho: rho_from_score(net, best_score)?,
    })
}

/// Pooled output of [`sample_mvr`].
#[derive(Debug, Clone, PartialEq)]
pub struct MvrResult {
    /// Recorded rankings attaining `best_score`, in chain order.
    pub samples: Vec<Ranking>,
    pub best_rho: f64,
    pub best_score: i64,
    /// Mean rank of each node over `samples`.
    pub prestige_score: Vec<f64>,
    /// 2.5th and 97.5th percentiles of each node's sampled ranks.
    pub ci95: Vec<(f64, f64)>,
    pub consensus: Ranking,
    /// Rankings recorded across all chains before the best-score filter.
    pub pooled_samples: usize,
}

/// Samples minimum-violation rankings with `cfg.restarts` independent chains
/// (chain `k` is seeded with `cfg.seed + k`) and combines the best-scoring
/// samples into a consensus.
///
/// Chain 0 starts from [`initial_ranking`]; the others start from random
/// rankings, so restarts can leave a basin the out-degree start falls into.
///
/// The consensus orders nodes by ascending mean rank; ties go to the larger
/// out-degree, then the smaller node id.
pub fn sample_mvr(net: &HiringNetwork, cfg: &SamplerConfig) -> Result<MvrResult> {
    cfg.validate()?;
    check_network(net)?;
    let runs: Vec<ChainRun> = (0..cfg.restarts)
        .into_par_iter()
        .map(|k| {
            let seed = cfg.seed.wrapping_add(k as u64);
            let chain = if k == 0 {
                Chain::new(net, seed)?
            } else {
                Chain::scrambled(net, seed)?
            };
            record_chain(net, cfg, chain)
        })
        .collect::<Result<_>>()?;

    let best_score = runs
        .iter()
        .map(|r| r.best_score)
        .max()
        .expect("restarts > 0");
    let pooled_samples = runs.iter().map(|r| r.samples.len()).sum();
    let samples: Vec<Ranking> = runs
        .into_iter()
        .flat_map(|run| {
            run.samples
                .into_iter()
                .zip(run.scores)
                .filter(|&(_, s)| s == best_score)
                .map(|(r, _)| r)
        })
        .collect();

    let n = net.n_nodes();
    let m = samples.len();
    let mut prestige_score = Vec::with_capacity(n);
    let mut ci95 = Vec::with_capacity(n);
    let mut ranks = vec![0usize; m];
    for node in 0..n {
        for (slot, s) in ranks.iter_mut().zip(&samples) {
            *slot = s.rank(node);
        }
        let sum: usize = ranks.iter().sum();
        prestige_score.push(sum as f64 / m as f64);
        ranks.sort_unstable();
        ci95.push((percentile(&ranks, 2.5), percentile(&ranks, 97.5)));
    }

    let out = net.out_degree();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        prestige_score[a]
            .total_cmp(&prestige_score[b])
            .then(out[b].cmp(&out[a]))
            .then(a.cmp(&b))
    });

    Ok(MvrResult {
        samples,
        best_rho: rho_from_score(net, best_score)?,
        best_score,
        prestige_score,
        ci95,
        consensus: Ranking::from_order(order)?,
        pooled_samples,
    })
}

/// Percentile `q` (0-100) of sorted values, interpolating linearly between
/// order statistics.
fn percentile(sorted: &[usize], q: f64) -> f64 {
    let pos = q / 100.0 * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    let frac = pos - lo as f64;
    sorted[lo] as f64 + (sorted[hi] as f64 - sorted[lo] as f64) * frac
}
