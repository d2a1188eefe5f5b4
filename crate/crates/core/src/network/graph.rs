use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::network::filter::NetworkFilter;
use crate::network::records::HiringRecord;

/// Dense ids for institution names, assigned in lexicographic name order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NodeRegistry {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl NodeRegistry {
    pub fn from_names<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let sorted: BTreeSet<String> = names.into_iter().map(Into::into).collect();
        let names: Vec<String> = sorted.into_iter().collect();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        NodeRegistry { names, index }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// Weighted directed hiring network. `m_ij` counts Ph.D.s produced by `i` and
/// hired by `j`; zero entries are never stored.
///
/// Immutable after construction. Besides the sparse weights it keeps the
/// per-node degree sums and, for every node, the list of neighbours with the
/// net pair weight `m_uv - m_vu`, which is all the ranking objective needs.
#[derive(Debug, Clone)]
pub struct HiringNetwork {
    registry: NodeRegistry,
    weights: BTreeMap<(usize, usize), u64>,
    total_weight: u64,
    self_loop_weight: u64,
    out_degree: Vec<u64>,
    in_degree: Vec<u64>,
    net_neighbors: Vec<Vec<(usize, i64)>>,
}

impl PartialEq for HiringNetwork {
    fn eq(&self, other: &Self) -> bool {
        self.registry == other.registry && self.weights == other.weights
    }
}

impl Eq for HiringNetwork {}

impl HiringNetwork {
    /// Builds a network from explicit weights. Zero weights are dropped.
    pub fn from_weights(
        registry: NodeRegistry,
        weights: impl IntoIterator<Item = ((usize, usize), u64)>,
    ) -> Result<Self> {
        let n = registry.len();
        let mut map = BTreeMap::new();
        for ((i, j), w) in weights {
            if i >= n || j >= n {
                return Err(Error::contract(format!(
                    "edge ({i}, {j}) references a node outside 0..{n}"
                )));
            }
            if w > 0 {
                *map.entry((i, j)).or_insert(0) += w;
            }
        }
        Ok(Self::assemble(registry, map))
    }

    /// Aggregates unit edges (one per placement) into weights.
    pub fn from_unit_edges(registry: NodeRegistry, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_weights(registry, edges.iter().map(|&e| (e, 1)))
    }

    fn assemble(registry: NodeRegistry, weights: BTreeMap<(usize, usize), u64>) -> Self {
        let n = registry.len();
        let mut out_degree = vec![0u64; n];
        let mut in_degree = vec![0u64; n];
        let mut total_weight = 0;
        let mut self_loop_weight = 0;
        let mut pair_net: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (&(i, j), &w) in &weights {
            out_degree[i] += w;
            in_degree[j] += w;
            total_weight += w;
            if i == j {
                self_loop_weight += w;
                continue;
            }
            let (key, signed) = if i < j {
                ((i, j), w as i64)
            } else {
                ((j, i), -(w as i64))
            };
            *pair_net.entry(key).or_insert(0) += signed;
        }
        let mut net_neighbors = vec![Vec::new(); n];
        for (&(u, v), &d) in &pair_net {
            if d != 0 {
                net_neighbors[u].push((v, d));
                net_neighbors[v].push((u, -d));
            }
        }
        HiringNetwork {
            registry,
            weights,
            total_weight,
            self_loop_weight,
            out_degree,
            in_degree,
            net_neighbors,
        }
    }

    pub fn registry(&self) -> &NodeRegistry {
        &self.registry
    }

    pub fn n_nodes(&self) -> usize {
        self.registry.len()
    }

    /// Number of distinct (i, j) pairs with positive weight.
    pub fn n_edges(&self) -> usize {
        self.weights.len()
    }

    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    pub fn self_loop_weight(&self) -> u64 {
        self.self_loop_weight
    }

    /// Weight that can point up or down under a ranking.
    pub fn directed_weight(&self) -> u64 {
        self.total_weight - self.self_loop_weight
    }

    pub fn weight(&self, i: usize, j: usize) -> u64 {
        self.weights.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Stored edges in ascending (src, dst) order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.weights.iter().map(|(&(i, j), &w)| (i, j, w))
    }

    pub fn out_degree(&self) -> &[u64] {
        &self.out_degree
    }

    pub fn in_degree(&self) -> &[u64] {
        &self.in_degree
    }

    /// Neighbours of `u` with the net pair weight `m_uv - m_vu` (nonzero only).
    pub fn net_neighbors(&self, u: usize) -> &[(usize, i64)] {
        &self.net_neighbors[u]
    }

    /// Expands weights into one `(src, dst)` pair per placement, in edge order.
    pub fn unit_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.total_weight as usize);
        for (i, j, w) in self.edges() {
            out.extend(std::iter::repeat_n((i, j), w as usize));
        }
        out
    }
}

/// Builds the hiring network from the records that pass `filter`.
pub fn build_network(records: &[HiringRecord], filter: &NetworkFilter) -> Result<HiringNetwork> {
    let kept: Vec<&HiringRecord> = records.iter().filter(|r| filter.accepts(r)).collect();
    if kept.is_empty() {
        return Err(Error::EmptyNetwork);
    }
    let registry = NodeRegistry::from_names(
        kept.iter()
            .flat_map(|r| [r.phd_institution.as_str(), r.hire_institution.as_str()]),
    );
    let edges: Vec<(usize, usize)> = kept
        .iter()
        .map(|r| {
            (
                registry.id(&r.phd_institution).expect("registered"),
                registry.id(&r.hire_institution).expect("registered"),
            )
        })
        .collect();
    HiringNetwork::from_unit_edges(registry, &edges)
}

/// Weighted (out_degree, in_degree) sequences indexed by node id.
pub fn degree_sequences(net: &HiringNetwork) -> (Vec<u64>, Vec<u64>) {
    (net.out_degree.clone(), net.in_degree.clone())
}
