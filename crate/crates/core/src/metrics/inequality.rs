use crate::error::{Error, Result};

fn sorted_production(production: &[f64]) -> Result<(Vec<f64>, f64)> {
    if production.is_empty() {
        return Err(Error::contract("production vector is empty"));
    }
    if production.iter().any(|x| !(x.is_finite() && *x >= 0.0)) {
        return Err(Error::contract(
            "production values must be finite and non-negative",
        ));
    }
    let mut sorted = production.to_vec();
    sorted.sort_by(f64::total_cmp);
    let total: f64 = sorted.iter().sum();
    if total <= 0.0 {
        return Err(Error::UndefinedGini);
    }
    Ok((sorted, total))
}

/// Population Gini coefficient, `sum_ij |x_i - x_j| / (2 n^2 mean)`, evaluated
/// in O(n log n) from the sorted values.
pub fn gini(production: &[f64]) -> Result<f64> {
    let (sorted, total) = sorted_production(production)?;
    let n = sorted.len() as f64;
    let weighted: f64 = sorted
        .iter()
        .enumerate()
        .map(|(i, x)| (2.0 * (i as f64 + 1.0) - n - 1.0) * x)
        .sum();
    Ok(weighted / (n * total))
}

/// Cumulative share of production held by the smallest producers.
#[derive(Debug, Clone, PartialEq)]
pub struct LorenzCurve {
    /// `(population fraction, production fraction)`, from (0,0) to (1,1).
    pub points: Vec<(f64, f64)>,
}

impl LorenzCurve {
    /// Trapezoidal area under the curve.
    pub fn area(&self) -> f64 {
        self.points
            .windows(2)
            .map(|w| (w[1].0 - w[0].0) * (w[1].1 + w[0].1) / 2.0)
            .sum()
    }

    pub fn gini(&self) -> f64 {
        1.0 - 2.0 * self.area()
    }
}

pub fn lorenz(production: &[f64]) -> Result<LorenzCurve> {
    let (sorted, total) = sorted_production(production)?;
    let n = sorted.len();
    let mut points = Vec::with_capacity(n + 1);
    points.push((0.0, 0.0));
    let mut cum = 0.0;
    for (k, x) in sorted.iter().enumerate() {
        cum += x;
        points.push(((k + 1) as f64 / n as f64, cum / total));
    }
    // Guard the endpoint against summation round-off.
    points[n] = (1.0, 1.0);
    Ok(LorenzCurve { points })
}
