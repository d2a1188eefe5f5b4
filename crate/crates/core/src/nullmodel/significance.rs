use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::error::{Error, Result};
use crate::nullmodel::RhoDistribution;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignificanceReport {
    pub t_statistic: f64,
    /// Welch-Satterthwaite degrees of freedom.
    pub degrees_of_freedom: f64,
    /// One-sided, alternative: empirical mean > null mean.
    pub p_value_t: f64,
    /// `(1 + #{null >= min(empirical)}) / (n_null + 1)`.
    pub p_value_empirical: f64,
    pub empirical_mean: f64,
    pub null_mean: f64,
}

/// One-sided Welch t-test plus a rank-free empirical p-value for
/// "the empirical hierarchy is stronger than the null".
pub fn significance(
    empirical: &RhoDistribution,
    null: &RhoDistribution,
) -> Result<SignificanceReport> {
    if empirical.n < 2 || null.n < 2 {
        return Err(Error::contract("both distributions need at least 2 values"));
    }
    let (n1, n2) = (empirical.n as f64, null.n as f64);
    let a = empirical.std.powi(2) / n1;
    let b = null.std.powi(2) / n2;
    let diff = empirical.mean - null.mean;

    let (t_statistic, degrees_of_freedom, p_value_t) = if a + b == 0.0 {
        if diff == 0.0 {
            return Err(Error::DegenerateTest);
        }
        // No spread on either side: the separation is certain.
        let p = if diff > 0.0 { 0.0 } else { 1.0 };
        (diff.signum() * f64::INFINITY, n1 + n2 - 2.0, p)
    } else {
        let t = diff / (a + b).sqrt();
        let df = (a + b).powi(2) / (a * a / (n1 - 1.0) + b * b / (n2 - 1.0));
        let dist = StudentsT::new(0.0, 1.0, df)
            .map_err(|e| Error::contract(format!("t distribution: {e}")))?;
        (t, df, dist.sf(t))
    };

    Ok(SignificanceReport {
        t_statistic,
        degrees_of_freedom,
        p_value_t,
        p_value_empirical: empirical_p_value(empirical, null),
        empirical_mean: empirical.mean,
        null_mean: null.mean,
    })
}

/// Share of null replicates at least as strong as the weakest empirical
/// replicate, with the +1 correction: `(1 + #{null >= min(empirical)}) / (n_null + 1)`.
pub fn empirical_p_value(empirical: &RhoDistribution, null: &RhoDistribution) -> f64 {
    let threshold = empirical.min();
    let exceed = null.values.iter().filter(|&&v| v >= threshold).count();
    (1 + exceed) as f64 / (null.n + 1) as f64
}
