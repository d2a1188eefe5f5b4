//! The violation objective and the hierarchy strength of a ranking.
//!
//! An edge `i -> j` points down when `i` is ranked above `j` (smaller rank
//! number) and up otherwise. The score is the down weight minus the up
//! weight, so maximizing it minimizes violations. Self-loops are neither.

use crate::error::{Error, Result};
use crate::mvr::Ranking;
use crate::network::HiringNetwork;

fn check_cover(net: &HiringNetwork, r: &Ranking) -> Result<()> {
    if r.len() != net.n_nodes() {
        return Err(Error::contract(format!(
            "ranking covers {} nodes but the network has {}",
            r.len(),
            net.n_nodes()
        )));
    }
    Ok(())
}

/// Total weight on (downward, upward) edges, self-loops excluded.
pub fn directed_weights(net: &HiringNetwork, r: &Ranking) -> Result<(u64, u64)> {
    check_cover(net, r)?;
    let (mut down, mut up) = (0, 0);
    for (i, j, w) in net.edges() {
        match r.rank(i).cmp(&r.rank(j)) {
            std::cmp::Ordering::Less => down += w,
            std::cmp::Ordering::Greater => up += w,
            std::cmp::Ordering::Equal => {}
        }
    }
    Ok((down, up))
}

/// `S = sum_ij m_ij * sign(rank(j) - rank(i))`.
pub fn net_score(net: &HiringNetwork, r: &Ranking) -> Result<i64> {
    let (down, up) = directed_weights(net, r)?;
    Ok(down as i64 - up as i64)
}

/// Fraction of non-self-loop weight pointing down.
pub fn rho(net: &HiringNetwork, r: &Ranking) -> Result<f64> {
    let (down, up) = directed_weights(net, r)?;
    if down + up == 0 {
        return Err(Error::UndefinedRho);
    }
    Ok(down as f64 / (down + up) as f64)
}

/// Converts a score into ρ using the network's fixed directed weight.
pub fn rho_from_score(net: &HiringNetwork, score: i64) -> Result<f64> {
    let total = net.directed_weight();
    if total == 0 {
        return Err(Error::UndefinedRho);
    }
    // down - up = score, down + up = total
    Ok((total as i64 + score) as f64 / (2 * total) as f64)
}

/// Change in score if the ranks of `a` and `b` were exchanged.
pub fn delta_swap(net: &HiringNetwork, r: &Ranking, a: usize, b: usize) -> Result<i64> {
    check_cover(net, r)?;
    if a == b {
        return Err(Error::contract("delta_swap needs two distinct nodes"));
    }
    if a >= r.len() || b >= r.len() {
        return Err(Error::contract("delta_swap node out of range"));
    }
    Ok(swap_delta(net, r.ranks(), a, b))
}

/// Unchecked swap delta over `rank_of`. Only pairs involving `a` or `b`
/// can change sign; with the net pair weight `d_uv = m_uv - m_vu` the
/// contribution of a pair is `d_uv * sign(rank(v) - rank(u))`.
#[inline]
pub(crate) fn swap_delta(net: &HiringNetwork, rank_of: &[usize], a: usize, b: usize) -> i64 {
    let ra = rank_of[a] as i64;
    let rb = rank_of[b] as i64;
    let mut delta = 0i64;
    let mut d_ab = 0i64;
    for &(c, d) in net.net_neighbors(a) {
        if c == b {
            d_ab = d;
            continue;
        }
        let rc = rank_of[c] as i64;
        delta += d * ((rc - rb).signum() - (rc - ra).signum());
    }
    for &(c, d) in net.net_neighbors(b) {
        if c == a {
            continue;
        }
        let rc = rank_of[c] as i64;
        delta += d * ((rc - ra).signum() - (rc - rb).signum());
    }
    delta - 2 * d_ab * (rb - ra).signum()
}
