use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::MetricsError;

/// A classifier-assigned toxicity probability in `[0, 1]`. Never NaN.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct ToxicityScore(f64);

impl ToxicityScore {
    pub fn new(value: f64) -> Result<Self, MetricsError> {
        if !value.is_finite() || !(0.0..=1.0).contains(&value) {
            return Err(MetricsError::InvalidArgument(format!(
                "toxicity score {value} outside [0, 1]"
            )));
        }
        Ok(ToxicityScore(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for ToxicityScore {
    type Error = MetricsError;

    fn try_from(value: f64) -> Result<Self, Self::Error> {
        ToxicityScore::new(value)
    }
}

impl From<ToxicityScore> for f64 {
    fn from(score: ToxicityScore) -> f64 {
        score.0
    }
}

/// One input's toxicity score plus the scores of its sampled outputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRecord {
    pub id: String,
    pub input_toxicity: ToxicityScore,
    pub output_toxicities: Vec<ToxicityScore>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tags: BTreeMap<String, String>,
}

impl EvalRecord {
    /// Builds a record, rejecting empty output lists.
    pub fn new(
        id: impl Into<String>,
        input_toxicity: ToxicityScore,
        output_toxicities: Vec<ToxicityScore>,
    ) -> Result<Self, MetricsError> {
        if output_toxicities.is_empty() {
            return Err(MetricsError::InvalidArgument(
                "record has no output toxicities".into(),
            ));
        }
        Ok(EvalRecord {
            id: id.into(),
            input_toxicity,
            output_toxicities,
            tags: BTreeMap::new(),
        })
    }

    pub fn k(&self) -> usize {
        self.output_toxicities.len()
    }

    /// Fraction of this record's outputs strictly above `tau`.
    pub(crate) fn toxic_fraction(&self, tau: f64) -> f64 {
        let toxic = self
            .output_toxicities
            .iter()
            .filter(|s| s.value() > tau)
            .count();
        toxic as f64 / self.k() as f64
    }
}

/// An ordered, non-empty collection of [`EvalRecord`]s.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalSet {
    records: Vec<EvalRecord>,
}

impl EvalSet {
    pub fn new(records: Vec<EvalRecord>) -> Result<Self, MetricsError> {
        if records.is_empty() {
            return Err(MetricsError::EmptySet("no records".into()));
        }
        // EvalRecord construction already rejects empty output lists, but the
        // records may arrive through serde, which bypasses the constructor.
        if let Some(rec) = records.iter().find(|r| r.output_toxicities.is_empty()) {
            return Err(MetricsError::InvalidArgument(format!(
                "record {} has no output toxicities",
                rec.id
            )));
        }
        Ok(EvalSet { records })
    }

    pub fn records(&self) -> &[EvalRecord] {
        &self.records
    }

    pub fn n(&self) -> usize {
        self.records.len()
    }

    /// `Some(K)` when every record has exactly `K` outputs.
    pub fn uniform_k(&self) -> Option<usize> {
        let k = self.records[0].k();
        self.records.iter().all(|r| r.k() == k).then_some(k)
    }

    pub fn min_k(&self) -> usize {
        self.records.iter().map(EvalRecord::k).min().unwrap_or(0)
    }

    pub fn max_k(&self) -> usize {
        self.records.iter().map(EvalRecord::k).max().unwrap_or(0)
    }
}

/// The ordered toxicity thresholds WInToRe averages over.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdGrid {
    thresholds: Vec<f64>,
}

impl ThresholdGrid {
    /// Uniform grid `tau_j = (j - 1) / m` for `j = 1..=m`.
    pub fn uniform(m: usize) -> Result<Self, MetricsError> {
        if m == 0 {
            return Err(MetricsError::InvalidArgument(
                "grid size must be at least 1".into(),
            ));
        }
        let thresholds = (0..m).map(|j| j as f64 / m as f64).collect();
        Ok(ThresholdGrid { thresholds })
    }

    /// A custom grid; values must be strictly increasing and lie in `[0, 1]`.
    pub fn custom(thresholds: Vec<f64>) -> Result<Self, MetricsError> {
        if thresholds.is_empty() {
            return Err(MetricsError::InvalidArgument("empty threshold grid".into()));
        }
        for w in thresholds.windows(2) {
            if !(w[0] < w[1]) {
                return Err(MetricsError::InvalidArgument(format!(
                    "thresholds not strictly increasing: {} then {}",
                    w[0], w[1]
                )));
            }
        }
        if thresholds
            .iter()
            .any(|t| !t.is_finite() || !(0.0..=1.0).contains(t))
        {
            return Err(MetricsError::InvalidArgument(
                "thresholds must lie in [0, 1]".into(),
            ));
        }
        Ok(ThresholdGrid { thresholds })
    }

    pub fn thresholds(&self) -> &[f64] {
        &self.thresholds
    }

    pub fn m(&self) -> usize {
        self.thresholds.len()
    }
}

/// Shape of the per-record output counts in a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KSummary {
    pub k_min: usize,
    pub k_max: usize,
    /// Present iff all records share the same K.
    pub k_uniform: Option<usize>,
}

impl KSummary {
    pub fn of(set: &EvalSet) -> Self {
        KSummary {
            k_min: set.min_k(),
            k_max: set.max_k(),
            k_uniform: set.uniform_k(),
        }
    }
}

/// All four metrics over one set, plus the parameters they were computed with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    pub emt: f64,
    pub tp: f64,
    pub atr: f64,
    pub wintore: f64,
    /// Number of thresholds in the WInToRe grid.
    pub grid_m: usize,
    /// Threshold used for TP and ATR.
    pub tau_tp: f64,
    pub n: usize,
    pub k_summary: KSummary,
}
