use crate::error::{Error, Result};

/// A permutation of nodes. Ranks are 1-based and rank 1 is the most
/// prestigious position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ranking {
    rank_of: Vec<usize>,
    node_at: Vec<usize>,
}

impl Ranking {
    pub fn identity(n: usize) -> Self {
        Ranking {
            rank_of: (1..=n).collect(),
            node_at: (0..n).collect(),
        }
    }

    /// Builds a ranking from the node listed at each position, best first.
    pub fn from_order(node_at: Vec<usize>) -> Result<Self> {
        let n = node_at.len();
        let mut rank_of = vec![0usize; n];
        for (pos, &node) in node_at.iter().enumerate() {
            if node >= n || rank_of[node] != 0 {
                return Err(Error::contract(format!(
                    "order is not a permutation of 0..{n} (node {node})"
                )));
            }
            rank_of[node] = pos + 1;
        }
        Ok(Ranking { rank_of, node_at })
    }

    /// Builds a ranking from each node's 1-based rank.
    pub fn from_ranks(rank_of: Vec<usize>) -> Result<Self> {
        let n = rank_of.len();
        let mut node_at = vec![usize::MAX; n];
        for (node, &rank) in rank_of.iter().enumerate() {
            if rank == 0 || rank > n || node_at[rank - 1] != usize::MAX {
                return Err(Error::contract(format!(
                    "ranks are not a permutation of 1..={n} (rank {rank})"
                )));
            }
            node_at[rank - 1] = node;
        }
        Ok(Ranking { rank_of, node_at })
    }

    pub fn len(&self) -> usize {
        self.rank_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank_of.is_empty()
    }

    /// 1-based rank of `node`.
    pub fn rank(&self, node: usize) -> usize {
        self.rank_of[node]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank_of
    }

    /// Nodes from best to worst.
    pub fn order(&self) -> &[usize] {
        &self.node_at
    }

    /// Node holding 1-based `rank`.
    pub fn node_at(&self, rank: usize) -> usize {
        self.node_at[rank - 1]
    }

    pub fn reversed(&self) -> Self {
        let node_at: Vec<usize> = self.node_at.iter().rev().copied().collect();
        let n = self.len();
        let rank_of = self.rank_of.iter().map(|&r| n + 1 - r).collect();
        Ranking { rank_of, node_at }
    }

    /// Exchanges the positions of nodes `a` and `b`.
    pub fn swap_nodes(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.rank_of[a], self.rank_of[b]);
        self.rank_of.swap(a, b);
        self.node_at[ra - 1] = b;
        self.node_at[rb - 1] = a;
    }
}
