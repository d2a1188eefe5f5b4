use crate::error::{Error, Result};
use crate::mvr::objective::rho_from_score;
use crate::mvr::Ranking;
use crate::network::HiringNetwork;

/// Largest network [`brute_force_mvr`] will enumerate (10! permutations).
pub const MAX_EXHAUSTIVE_NODES: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct ExactMvr {
    pub optimal_score: i64,
    pub optimal_rho: f64,
    /// Every ranking attaining `optimal_score`, in lexicographic order of
    /// their best-to-worst node sequence.
    pub optima: Vec<Ranking>,
}

/// Exhaustive minimum-violation ranking by enumerating all `N!` orders.
///
/// The optima list can itself be factorial in size when many nodes are
/// interchangeable.
pub fn brute_force_mvr(net: &HiringNetwork) -> Result<ExactMvr> {
    let n = net.n_nodes();
    if n > MAX_EXHAUSTIVE_NODES {
        return Err(Error::SizeLimit {
            n,
            max: MAX_EXHAUSTIVE_NODES,
        });
    }
    if net.directed_weight() == 0 {
        return Err(Error::UndefinedRho);
    }

    let edges: Vec<(usize, usize, i64)> = net
        .edges()
        .filter(|&(i, j, _)| i != j)
        .map(|(i, j, w)| (i, j, w as i64))
        .collect();

    let mut order: Vec<usize> = (0..n).collect();
    let mut rank_of = vec![0usize; n];
    let mut best = i64::MIN;
    let mut optima: Vec<Vec<usize>> = Vec::new();
    loop {
        for (pos, &node) in order.iter().enumerate() {
            rank_of[node] = pos;
        }
        let score: i64 = edges
            .iter()
            .map(|&(i, j, w)| w * (rank_of[j] as i64 - rank_of[i] as i64).signum())
            .sum();
        if score > best {
            best = score;
            optima.clear();
        }
        if score == best {
            optima.push(order.clone());
        }
        if !next_permutation(&mut order) {
            break;
        }
    }

    Ok(ExactMvr {
        optimal_score: best,
        optimal_rho: rho_from_score(net, best)?,
        optima: optima
            .into_iter()
            .map(|o| Ranking::from_order(o).expect("permutation"))
            .collect(),
    })
}

/// Advances to the next lexicographic permutation; false after the last.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::NodeRegistry;

    fn net(n: usize, edges: &[((usize, usize), u64)]) -> HiringNetwork {
        let reg = NodeRegistry::from_names((0..n).map(|i| format!("n{i}")));
        HiringNetwork::from_weights(reg, edges.iter().copied()).unwrap()
    }

    #[test]
    fn permutation_count() {
        let mut v = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(v, vec![3, 2, 1, 0]);
    }

    #[test]
    fn three_cycle_has_three_rotations() {
        let g = net(3, &[((0, 1), 1), ((1, 2), 1), ((2, 0), 1)]);
        let exact = brute_force_mvr(&g).unwrap();
        assert_eq!(exact.optimal_score, 1);
        assert!((exact.optimal_rho - 2.0 / 3.0).abs() < 1e-15);
        let orders: Vec<&[usize]> = exact.optima.iter().map(|r| r.order()).collect();
        assert_eq!(orders, vec![&[0, 1, 2][..], &[1, 2, 0], &[2, 0, 1]]);
    }

    #[test]
    fn single_edge() {
        let exact = brute_force_mvr(&net(2, &[((0, 1), 1)])).unwrap();
        assert_eq!(exact.optimal_score, 1);
        assert_eq!(exact.optima.len(), 1);
    }

    #[test]
    fn reciprocal_pair_is_flat() {
        let exact = brute_force_mvr(&net(2, &[((0, 1), 1), ((1, 0), 1)])).unwrap();
        assert_eq!(exact.optimal_score, 0);
        assert_eq!(exact.optima.len(), 2);
    }

    #[test]
    fn size_limit() {
        let g = net(11, &[((0, 1), 1)]);
        assert!(matches!(
            brute_force_mvr(&g),
            Err(Error::SizeLimit { n: 11, max: 10 })
        ));
    }
}
