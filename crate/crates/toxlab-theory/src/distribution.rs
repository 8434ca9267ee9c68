//! Empirical distributions on `[0, 1]` and the exact relations between their
//! means, tail integrals, and Wasserstein-1 distance.

use crate::error::TheoryError;

/// A non-empty, sorted set of samples in `[0, 1]` with uniform weights.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalDistribution {
    samples: Vec<f64>,
}

impl EmpiricalDistribution {
    /// Builds a distribution from samples in any order.
    pub fn new(mut samples: Vec<f64>) -> Result<Self, TheoryError> {
        if samples.is_empty() {
            return Err(TheoryError::InvalidArgument(
                "empirical distribution needs at least one sample".into(),
            ));
        }
        if samples
            .iter()
            .any(|s| !s.is_finite() || !(0.0..=1.0).contains(s))
        {
            return Err(TheoryError::InvalidArgument(
                "samples must lie in [0, 1]".into(),
            ));
        }
        samples.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(EmpiricalDistribution { samples })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }

    pub fn mean(&self) -> f64 {
        self.samples.iter().sum::<f64>() / self.len() as f64
    }

    /// `P(X <= t)`.
    pub fn cdf(&self, t: f64) -> f64 {
        self.samples.partition_point(|&s| s <= t) as f64 / self.len() as f64
    }

    /// `P(X > t)`.
    pub fn survival(&self, t: f64) -> f64 {
        1.0 - self.cdf(t)
    }
}

/// Exact Wasserstein-1 distance between two empirical distributions on `[0, 1]`,
/// computed as the integral of `|F_X - F_Y|` over the merged piecewise-constant
/// CDFs. Symmetric and non-negative.
pub fn wasserstein1(x: &EmpiricalDistribution, y: &EmpiricalDistribution) -> f64 {
    let mut breakpoints: Vec<f64> = Vec::with_capacity(x.len() + y.len() + 2);
    breakpoints.push(0.0);
    breakpoints.extend_from_slice(x.samples());
    breakpoints.extend_from_slice(y.samples());
    breakpoints.push(1.0);
    breakpoints.sort_by(|a, b| a.partial_cmp(b).unwrap());
    breakpoints.dedup();

    let mut total = 0.0;
    for window in breakpoints.windows(2) {
        let (a, b) = (window[0], window[1]);
        // Both CDFs are constant on (a, b): no sample lies strictly inside.
        total += (b - a) * (x.cdf(a) - y.cdf(a)).abs();
    }
    total
}

/// Riemann approximation `(1/M) * sum_m P(X > tau_m)` on the uniform grid
/// `tau_m = (m-1)/M`. Converges to the sample mean as `M` grows, with error
/// at most `1/M`.
pub fn tail_integral_mean(x: &EmpiricalDistribution, grid_m: usize) -> Result<f64, TheoryError> {
    if grid_m == 0 {
        return Err(TheoryError::InvalidArgument(
            "grid size must be at least 1".into(),
        ));
    }
    let m = grid_m as f64;
    let sum: f64 = (0..grid_m).map(|j| x.survival(j as f64 / m)).sum();
    Ok(sum / m)
}

/// Outcome of the Markov-style bound check at one threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarkovGap {
    /// `delta * P(X > delta) - E[Y]`.
    pub lower: f64,
    /// `E[X] - E[Y]`, the grid-limit value the metric converges to.
    pub upper_proxy: f64,
    pub holds: bool,
}

/// Checks `delta * P(X > delta) - E[Y] <= E[X] - E[Y]`, the Markov inequality
/// applied to the input distribution.
pub fn markov_gap(
    x: &EmpiricalDistribution,
    y: &EmpiricalDistribution,
    delta: f64,
) -> Result<MarkovGap, TheoryError> {
    if !delta.is_finite() || !(0.0..=1.0).contains(&delta) {
        return Err(TheoryError::InvalidArgument(format!(
            "delta {delta} outside [0, 1]"
        )));
    }
    let lower = delta * x.survival(delta) - y.mean();
    let upper_proxy = x.mean() - y.mean();
    Ok(MarkovGap {
        lower,
        upper_proxy,
        holds: lower <= upper_proxy + 1e-12,
    })
}

/// Expected per-record TP under `k` independent outputs that are each toxic
/// with probability `p`: `1 - (1 - p)^k`.
pub fn tp_growth_expected(p: f64, k: u32) -> f64 {
    debug_assert!((0.0..=1.0).contains(&p));
    debug_assert!(k >= 1);
    1.0 - (1.0 - p).powi(k as i32)
}
