use crate::error::{Error, Result};
use crate::mvr::Ranking;
use crate::network::{HiringRecord, NodeRegistry};

/// One scored placement.
#[derive(Debug, Clone, PartialEq)]
pub struct RankChange {
    pub person_id: String,
    pub phd_rank: usize,
    pub hire_rank: usize,
    pub relative_change: f64,
}

/// Relative rank changes of placements against one ranking.
///
/// A value is `(rank(hire) - rank(phd)) / N`: positive moves down the
/// hierarchy, negative moves up. Self-hires score 0.
#[derive(Debug, Clone, PartialEq)]
pub struct RankChangeSample {
    pub entries: Vec<RankChange>,
    pub values: Vec<f64>,
    pub n_total: usize,
    /// Strictly upward placements (negative values).
    pub n_up: usize,
    /// Records skipped because an institution is not in the ranking.
    pub n_dropped: usize,
    /// Size of the ranking used for normalization.
    pub n_ranked: usize,
}

impl RankChangeSample {
    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }
}

pub fn relative_rank_change(
    records: &[HiringRecord],
    registry: &NodeRegistry,
    consensus: &Ranking,
) -> Result<RankChangeSample> {
    if registry.len() != consensus.len() {
        return Err(Error::contract(format!(
            "ranking covers {} nodes but the registry has {}",
            consensus.len(),
            registry.len()
        )));
    }
    let n = consensus.len() as f64;
    let mut entries = Vec::with_capacity(records.len());
    let mut n_dropped = 0;
    for rec in records {
        let (Some(phd), Some(hire)) = (
            registry.id(&rec.phd_institution),
            registry.id(&rec.hire_institution),
        ) else {
            n_dropped += 1;
            continue;
        };
        let (phd_rank, hire_rank) = (consensus.rank(phd), consensus.rank(hire));
        entries.push(RankChange {
            person_id: rec.person_id.clone(),
            phd_rank,
            hire_rank,
            relative_change: (hire_rank as f64 - phd_rank as f64) / n,
        });
    }
    if entries.is_empty() {
        return Err(Error::contract(
            "no record has both institutions in the ranking",
        ));
    }
    let values: Vec<f64> = entries.iter().map(|e| e.relative_change).collect();
    let n_up = values.iter().filter(|&&v| v < 0.0).count();
    Ok(RankChangeSample {
        n_total: values.len(),
        values,
        entries,
        n_up,
        n_dropped,
        n_ranked: consensus.len(),
    })
}

/// Fraction of placements at a strictly more prestigious institution.
pub fn upward_fraction(sample: &RankChangeSample) -> Result<f64> {
    if sample.n_total == 0 {
        return Err(Error::contract("rank-change sample is empty"));
    }
    Ok(sample.n_up as f64 / sample.n_total as f64)
}
