//! Significance of a hierarchy against degree-preserving randomizations.

mod distribution;
mod rewire;
mod significance;

pub use distribution::{
    bootstrap_rho, null_rho_distribution, replicate_seed, RhoDistribution, MAX_REDRAWS,
    SWAPS_PER_EDGE,
};
pub use rewire::degree_preserving_rewire;
pub use significance::{empirical_p_value, significance, SignificanceReport};

use std::io::Write;

use crate::error::Result;

/// Writes `replicate,rho` rows, replicates numbered from 0.
pub fn write_distribution_csv<W: Write>(dist: &RhoDistribution, sink: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record(["replicate", "rho"])?;
    for (i, v) in dist.values.iter().enumerate() {
        writer.write_record([i.to_string(), v.to_string()])?;
    }
    writer.flush()?;
    Ok(())
}
