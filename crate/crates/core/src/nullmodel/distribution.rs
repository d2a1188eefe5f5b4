use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mvr::{sample_mvr, SamplerConfig};
use crate::network::HiringNetwork;
use crate::nullmodel::rewire::degree_preserving_rewire;

/// Redraws allowed per replicate when a draw leaves only self-loops.
pub const MAX_REDRAWS: u32 = 100;

/// Swaps per unit edge used by [`null_rho_distribution`].
pub const SWAPS_PER_EDGE: u64 = 20;

/// Hierarchy strengths from independent replicates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RhoDistribution {
    pub values: Vec<f64>,
    pub mean: f64,
    /// Sample standard deviation (n - 1 denominator).
    pub std: f64,
    pub n: usize,
}

impl RhoDistribution {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        if n < 2 {
            return Err(Error::contract(format!(
                "a distribution needs at least 2 values, got {n}"
            )));
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
        Ok(RhoDistribution {
            values,
            mean,
            std: var.sqrt(),
            n,
        })
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Seed for replicate `index` of a run seeded with `base` (SplitMix64).
pub fn replicate_seed(base: u64, index: u64) -> u64 {
    let mut z = base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn check_replicates(replicates: usize) -> Result<()> {
    if replicates < 2 {
        return Err(Error::contract(format!(
            "at least 2 replicates are required, got {replicates}"
        )));
    }
    Ok(())
}

/// Runs `replicates` independent draws in parallel, ordered by index. Each
/// draw gets up to [`MAX_REDRAWS`] attempts to produce a network with some
/// non-self-loop weight before the replicate fails.
fn replicate_rhos<F>(
    replicates: usize,
    sampler: &SamplerConfig,
    seed: u64,
    draw: F,
) -> Result<Vec<f64>>
where
    F: Fn(u64) -> Result<HiringNetwork> + Sync,
{
    (0..replicates as u64)
        .into_par_iter()
        .map(|r| {
            let rep_seed = replicate_seed(seed, r);
            for attempt in 0..MAX_REDRAWS as u64 {
                let net = draw(replicate_seed(rep_seed, attempt))?;
                if net.directed_weight() == 0 {
                    continue;
                }
                let cfg = SamplerConfig {
                    seed: replicate_seed(sampler.seed, r),
                    ..*sampler
                };
                return Ok(sample_mvr(&net, &cfg)?.best_rho);
            }
            Err(Error::contract(format!(
                "replicate {r} drew only self-loops {MAX_REDRAWS} times"
            )))
        })
        .collect()
}

/// Bootstraps the MVR hierarchy strength by resampling placements (unit
/// edges) with replacement. Replicate networks keep the input's node set.
pub fn bootstrap_rho(
    net: &HiringNetwork,
    replicates: usize,
    sampler: &SamplerConfig,
    seed: u64,
) -> Result<RhoDistribution> {
    check_replicates(replicates)?;
    sampler.validate()?;
    let units = net.unit_edges();
    let values = replicate_rhos(replicates, sampler, seed, |draw_seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(draw_seed);
        let resampled: Vec<(usize, usize)> = (0..units.len())
            .map(|_| units[rng.random_range(0..units.len())])
            .collect();
        HiringNetwork::from_unit_edges(net.registry().clone(), &resampled)
    })?;
    RhoDistribution::new(values)
}

/// MVR hierarchy strength over degree-preserving randomizations, each with
/// `SWAPS_PER_EDGE` swaps per unit edge.
pub fn null_rho_distribution(
    net: &HiringNetwork,
    replicates: usize,
    sampler: &SamplerConfig,
    seed: u64,
) -> Result<RhoDistribution> {
    check_replicates(replicates)?;
    sampler.validate()?;
    let n_swaps = SWAPS_PER_EDGE * net.total_weight();
    let values = replicate_rhos(replicates, sampler, seed, |draw_seed| {
        degree_preserving_rewire(net, n_swaps, draw_seed)
    })?;
    RhoDistribution::new(values)
}
