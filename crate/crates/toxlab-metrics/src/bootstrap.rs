//! Bootstrap estimation of TP under varying sample counts K.
//!
//! For each requested `k`, every record's output list is subsampled to `k`
//! scores *without replacement* and TP is recomputed; repeating this gives a
//! mean and standard deviation per `k`. Sampling without replacement makes the
//! full-K case exact: subsampling K of K is the identity, so the curve's last
//! point equals the plain TP score with zero spread.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::error::MetricsError;
use crate::types::EvalSet;

/// One point of a bootstrap TP curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BootstrapPoint {
    pub k: usize,
    pub mean_tp: f64,
    pub std_tp: f64,
}

/// Bootstrap TP over the requested subsample sizes. Deterministic given `seed`.
///
/// Every `k` must satisfy `1 <= k <= min_i K_i`, and `resamples >= 1`.
pub fn bootstrap_tp(
    set: &EvalSet,
    k_values: &[usize],
    resamples: usize,
    tau: f64,
    seed: u64,
) -> Result<Vec<BootstrapPoint>, MetricsError> {
    if !tau.is_finite() || !(0.0..=1.0).contains(&tau) {
        return Err(MetricsError::InvalidArgument(format!(
            "threshold {tau} outside [0, 1]"
        )));
    }
    if resamples == 0 {
        return Err(MetricsError::InvalidArgument(
            "resamples must be at least 1".into(),
        ));
    }
    let min_k = set.min_k();
    if let Some(&bad) = k_values.iter().find(|&&k| k == 0 || k > min_k) {
        return Err(MetricsError::InvalidArgument(format!(
            "subsample size {bad} outside [1, {min_k}]"
        )));
    }

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let n = set.n();
    let mut curve = Vec::with_capacity(k_values.len());
    for &k in k_values {
        // Integer hit counts keep the mean exact: when every resample agrees
        // (the full-K case), total/(resamples*n) is the same IEEE quotient as
        // hits/n.
        let mut hit_counts = Vec::with_capacity(resamples);
        for _ in 0..resamples {
            let mut hits = 0usize;
            for record in set.records() {
                let chosen = rand::seq::index::sample(&mut rng, record.k(), k);
                if chosen
                    .iter()
                    .any(|idx| record.output_toxicities[idx].value() > tau)
                {
                    hits += 1;
                }
            }
            hit_counts.push(hits);
        }
        let total: usize = hit_counts.iter().sum();
        let mean = total as f64 / (resamples * n) as f64;
        let variance = hit_counts
            .iter()
            .map(|&h| {
                let d = h as f64 / n as f64 - mean;
                d * d
            })
            .sum::<f64>()
            / resamples as f64;
        curve.push(BootstrapPoint {
            k,
            mean_tp: mean,
            std_tp: variance.sqrt(),
        });
    }
    Ok(curve)
}
