use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::network::HiringNetwork;

/// Randomizes a network while keeping every node's weighted in- and
/// out-degree.
///
/// The weights are expanded into unit edges and `n_swaps` double-edge swaps
/// are applied: two distinct unit edges `a->b`, `c->d` become `a->d`, `c->b`.
/// Swaps are never rejected, so multi-edges and self-loops can appear.
pub fn degree_preserving_rewire(
    net: &HiringNetwork,
    n_swaps: u64,
    seed: u64,
) -> Result<HiringNetwork> {
    let mut edges = net.unit_edges();
    let m = edges.len();
    if m < 2 {
        return Err(Error::contract(format!(
            "rewiring needs at least 2 unit edges, network has {m}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..n_swaps {
        let x = rng.random_range(0..m);
        let mut y = rng.random_range(0..m - 1);
        if y >= x {
            y += 1;
        }
        let dx = edges[x].1;
        edges[x].1 = edges[y].1;
        edges[y].1 = dx;
    }
    HiringNetwork::from_unit_edges(net.registry().clone(), &edges)
}
