//! Analytic verification machinery for the toxicity metrics.
//!
//! Two families live here:
//!
//! * one-dimensional empirical distributions on `[0, 1]` with an exact
//!   Wasserstein-1 distance, threshold tail integrals, and the Markov-style
//!   bound relating them ([`EmpiricalDistribution`], [`wasserstein1`],
//!   [`tail_integral_mean`], [`markov_gap`], [`tp_growth_expected`]);
//! * discrete joint distributions with squared-loss mutual information in both
//!   its defining chi-squared form and its simplified expectation form, plus
//!   the variational estimate built from a second, estimated joint
//!   ([`DiscreteJoint`], [`smi_discrete`], [`smi_chi2`], [`smi_bound_a`]).
//!
//! Everything is exact (no Monte Carlo inside the library); the stochastic
//! checks live in the test suites that consume these functions as oracles.

mod distribution;
mod error;
mod joint;

pub use distribution::{
    markov_gap, tail_integral_mean, tp_growth_expected, wasserstein1, EmpiricalDistribution,
    MarkovGap,
};
pub use error::TheoryError;
pub use joint::{smi_bound_a, smi_chi2, smi_discrete, DiscreteJoint, SmiBound};
