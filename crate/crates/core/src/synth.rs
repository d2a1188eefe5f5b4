//! Synthetic hiring networks with a planted prestige order.
//!
//! Node `inst_0001` is the most prestigious. Each placement first decides
//! its direction: down with probability `p_down`, up otherwise. The producer
//! is then drawn with probability proportional to `rank^-producer_skew` among
//! the nodes that have somewhere to send in that direction (every node but
//! the last for down, every node but the first for up), and the employer is
//! uniform among the nodes strictly below (or above) it. The downward count
//! is therefore exactly Binomial(E, p_down).

use std::io::Write;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mvr::Ranking;
use crate::network::{HiringNetwork, NodeRegistry};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlantedConfig {
    pub n_nodes: usize,
    pub n_edges: u64,
    pub p_down: f64,
    pub producer_skew: f64,
    pub seed: u64,
}

impl PlantedConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_nodes < 2 {
            return Err(Error::contract("planted network needs at least 2 nodes"));
        }
        if self.n_edges == 0 {
            return Err(Error::contract("planted network needs at least 1 edge"));
        }
        if !(0.5..=1.0).contains(&self.p_down) {
            return Err(Error::contract(format!(
                "p_down {} is outside [0.5, 1]",
                self.p_down
            )));
        }
        if !(self.producer_skew >= 0.0 && self.producer_skew.is_finite()) {
            return Err(Error::contract(format!(
                "producer_skew {} must be finite and non-negative",
                self.producer_skew
            )));
        }
        Ok(())
    }
}

/// Name of the node at 1-based planted `rank`, zero-padded so that name order
/// equals rank order.
pub fn planted_name(rank: usize, n_nodes: usize) -> String {
    let width = n_nodes.to_string().len().max(4);
    format!("inst_{rank:0width$}")
}

/// Generates a network and its planted ranking (the identity over node ids).
pub fn generate_planted(cfg: &PlantedConfig) -> Result<(HiringNetwork, Ranking)> {
    cfg.validate()?;
    let n = cfg.n_nodes;
    let registry = NodeRegistry::from_names((1..=n).map(|r| planted_name(r, n)));
    // node id == rank - 1
    let weight = |id: usize| ((id + 1) as f64).powf(-cfg.producer_skew);
    let index = |ids: std::ops::Range<usize>| {
        WeightedIndex::new(ids.map(weight))
            .map_err(|e| Error::contract(format!("producer weights: {e}")))
    };
    let down_producers = index(0..n - 1)?;
    let up_producers = index(1..n)?;

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut edges = Vec::with_capacity(cfg.n_edges as usize);
    for _ in 0..cfg.n_edges {
        let edge = if rng.random_bool(cfg.p_down) {
            let src = down_producers.sample(&mut rng);
            (src, rng.random_range(src + 1..n))
        } else {
            let src = up_producers.sample(&mut rng) + 1;
            (src, rng.random_range(0..src))
        };
        edges.push(edge);
    }
    let net = HiringNetwork::from_unit_edges(registry, &edges)?;
    Ok((net, Ranking::identity(n)))
}

/// Writes `institution,true_rank` rows, best first.
pub fn write_truth_csv<W: Write>(registry: &NodeRegistry, truth: &Ranking, sink: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record(["institution", "true_rank"])?;
    for (pos, &node) in truth.order().iter().enumerate() {
        writer.write_record([registry.name(node), &(pos + 1).to_string()])?;
    }
    writer.flush()?;
    Ok(())
}
