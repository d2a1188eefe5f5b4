//! Production inequality and placement mobility.
//!
//! Relative rank change is normalized by the number of ranked institutions,
//! so values lie in `[-(N-1)/N, (N-1)/N]`.

mod inequality;
mod ks;
mod mobility;

pub use inequality::{gini, lorenz, LorenzCurve};
pub use ks::{kolmogorov_survival, ks_two_sample, KsResult};
pub use mobility::{relative_rank_change, upward_fraction, RankChange, RankChangeSample};

use std::io::Write;

use crate::error::Result;

/// Writes `cum_institutions,cum_production` rows.
pub fn write_lorenz_csv<W: Write>(curve: &LorenzCurve, sink: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record(["cum_institutions", "cum_production"])?;
    for (x, y) in &curve.points {
        writer.write_record([x.to_string(), y.to_string()])?;
    }
    writer.flush()?;
    Ok(())
}

/// Writes `person_id,phd_rank,hire_rank,relative_change` rows in record order.
pub fn write_rank_change_csv<W: Write>(sample: &RankChangeSample, sink: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record(["person_id", "phd_rank", "hire_rank", "relative_change"])?;
    for e in &sample.entries {
        writer.write_record([
            e.person_id.clone(),
            e.phd_rank.to_string(),
            e.hire_rank.to_string(),
            e.relative_change.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}
