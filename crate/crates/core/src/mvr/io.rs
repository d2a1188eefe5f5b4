use std::io::{BufRead, BufReader, Read, Write};

use crate::error::{Error, Result};
use crate::mvr::{MvrResult, Ranking, SamplerConfig};
use crate::network::NodeRegistry;

pub const RANKING_COLUMNS: [&str; 5] =
    ["rank", "institution", "prestige_score", "ci_low", "ci_high"];

/// Writes the consensus ranking, best first, with scores to 4 decimals.
pub fn write_ranking_csv<W: Write>(
    registry: &NodeRegistry,
    result: &MvrResult,
    sink: W,
) -> Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record(RANKING_COLUMNS)?;
    for (pos, &node) in result.consensus.order().iter().enumerate() {
        let (lo, hi) = result.ci95[node];
        writer.write_record([
            (pos + 1).to_string(),
            registry.name(node).to_string(),
            format!("{:.4}", result.prestige_score[node]),
            format!("{lo:.4}"),
            format!("{hi:.4}"),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

/// Reads a ranking CSV back as a registry over its institutions and the
/// ranking given by the `rank` column. Only `rank` and `institution` are
/// required.
pub fn load_ranking_csv<R: Read>(source: R) -> Result<(NodeRegistry, Ranking)> {
    let mut reader = csv::Reader::from_reader(source);
    let headers = reader.headers()?.clone();
    let find = |name: &str| {
        headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| Error::Format(format!("missing column `{name}` in header")))
    };
    let (rank_col, name_col) = (find("rank")?, find("institution")?);

    let mut rows = Vec::new();
    for row in reader.records() {
        let row = row?;
        let line = row.position().map(|p| p.line()).unwrap_or(0);
        let name = row.get(name_col).unwrap_or("").trim();
        if name.is_empty() {
            return Err(Error::Row {
                line,
                message: "institution name is empty".into(),
            });
        }
        let rank_text = row.get(rank_col).unwrap_or("").trim();
        let rank = rank_text.parse::<usize>().map_err(|_| Error::Row {
            line,
            message: format!("rank `{rank_text}` is not a positive integer"),
        })?;
        rows.push((name.to_string(), rank));
    }

    let registry = NodeRegistry::from_names(rows.iter().map(|(n, _)| n.clone()));
    if registry.len() != rows.len() {
        return Err(Error::Format("ranking lists an institution twice".into()));
    }
    let mut rank_of = vec![0usize; rows.len()];
    for (name, rank) in &rows {
        rank_of[registry.id(name).expect("registered")] = *rank;
    }
    let ranking = Ranking::from_ranks(rank_of)
        .map_err(|_| Error::Format("rank column is not a permutation of 1..N".into()))?;
    Ok((registry, ranking))
}

/// Applies a flat `key=value` sampler file on top of `base`. Recognized keys:
/// `total_iterations`, `burn_in`, `sample_interval`, `restarts`, `seed`.
/// Blank lines and `#` comments are skipped.
pub fn load_sampler_config<R: Read>(source: R, base: SamplerConfig) -> Result<SamplerConfig> {
    let mut cfg = base;
    for (idx, line) in BufReader::new(source).lines().enumerate() {
        let line = line?;
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row_err = |message: String| Error::Row {
            line: idx as u64 + 1,
            message,
        };
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| row_err(format!("expected key=value, got `{line}`")))?;
        let (key, value) = (key.trim(), value.trim());
        let num = value
            .parse::<u64>()
            .map_err(|_| row_err(format!("`{key}` needs a non-negative integer")))?;
        match key {
            "total_iterations" => cfg.total_iterations = num,
            "burn_in" => cfg.burn_in = num,
            "sample_interval" => cfg.sample_interval = num,
            "restarts" => {
                cfg.restarts =
                    u32::try_from(num).map_err(|_| row_err("restarts is too large".into()))?
            }
            "seed" => cfg.seed = num,
            other => return Err(row_err(format!("unknown sampler key `{other}`"))),
        }
    }
    Ok(cfg)
}
