//! Discrete joint distributions and squared-loss mutual information (SMI).
//!
//! SMI replaces the KL divergence of mutual information with the Pearson
//! chi-squared divergence between the joint and the product of marginals.
//! With the density ratio `r(u,v) = p(u,v) / (p(u) p(v))` it has two routes:
//!
//! * the defining form  `SMI = 1/2 * sum p(u) p(v) (r - 1)^2`,
//! * the simplified form `SMI = 1/2 * E_joint[r] - 1/2`.
//!
//! Both are implemented so they can cross-check each other. [`smi_bound_a`]
//! evaluates the variational quantity `A = 2 E_joint[r_hat] - E_prod[r_hat^2] - 1`
//! built from an *estimated* joint's ratio against expectations under the true
//! joint; with a perfect estimate it equals twice the SMI.

use crate::error::TheoryError;

/// A joint probability table over two finite alphabets, with derived marginals.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteJoint {
    rows: usize,
    cols: usize,
    probs: Vec<f64>,
    row_marginals: Vec<f64>,
    col_marginals: Vec<f64>,
}

impl DiscreteJoint {
    /// Builds a joint from a rectangular table of probabilities. Entries must
    /// be non-negative and sum to 1 within `1e-12`.
    pub fn new(table: Vec<Vec<f64>>) -> Result<Self, TheoryError> {
        if table.is_empty() || table[0].is_empty() {
            return Err(TheoryError::InvalidArgument("empty joint table".into()));
        }
        let rows = table.len();
        let cols = table[0].len();
        if table.iter().any(|r| r.len() != cols) {
            return Err(TheoryError::InvalidArgument(
                "joint table is not rectangular".into(),
            ));
        }
        let probs: Vec<f64> = table.into_iter().flatten().collect();
        if probs.iter().any(|&p| !p.is_finite() || p < 0.0) {
            return Err(TheoryError::InvalidArgument(
                "joint entries must be finite and non-negative".into(),
            ));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(TheoryError::InvalidArgument(format!(
                "joint entries sum to {total}, not 1"
            )));
        }
        let mut row_marginals = vec![0.0; rows];
        let mut col_marginals = vec![0.0; cols];
        for u in 0..rows {
            for v in 0..cols {
                row_marginals[u] += probs[u * cols + v];
                col_marginals[v] += probs[u * cols + v];
            }
        }
        Ok(DiscreteJoint {
            rows,
            cols,
            probs,
            row_marginals,
            col_marginals,
        })
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn prob(&self, u: usize, v: usize) -> f64 {
        self.probs[u * self.cols + v]
    }

    pub fn row_marginal(&self, u: usize) -> f64 {
        self.row_marginals[u]
    }

    pub fn col_marginal(&self, v: usize) -> f64 {
        self.col_marginals[v]
    }

    /// Density ratio `r(u,v) = p(u,v) / (p(u) p(v))`, taken as 0 where the
    /// joint carries no mass.
    pub fn ratio(&self, u: usize, v: usize) -> Result<f64, TheoryError> {
        let p = self.prob(u, v);
        if p == 0.0 {
            return Ok(0.0);
        }
        let denom = self.row_marginal(u) * self.col_marginal(v);
        if denom == 0.0 {
            // Unreachable with marginals derived from the same table, but the
            // guard keeps ratio() total.
            return Err(TheoryError::InvalidArgument(format!(
                "joint has mass {p} at ({u},{v}) but a zero marginal"
            )));
        }
        Ok(p / denom)
    }
}

/// SMI via the simplified form `1/2 * E_joint[r] - 1/2`. Always >= 0.
pub fn smi_discrete(joint: &DiscreteJoint) -> Result<f64, TheoryError> {
    let (rows, cols) = joint.shape();
    let mut expectation = 0.0;
    for u in 0..rows {
        for v in 0..cols {
            let p = joint.prob(u, v);
            if p > 0.0 {
                expectation += p * joint.ratio(u, v)?;
            }
        }
    }
    Ok(0.5 * expectation - 0.5)
}

/// SMI via the defining chi-squared form
/// `1/2 * sum p(u) p(v) (r(u,v) - 1)^2`.
pub fn smi_chi2(joint: &DiscreteJoint) -> Result<f64, TheoryError> {
    let (rows, cols) = joint.shape();
    let mut total = 0.0;
    for u in 0..rows {
        for v in 0..cols {
            let weight = joint.row_marginal(u) * joint.col_marginal(v);
            if weight > 0.0 {
                let d = joint.ratio(u, v)? - 1.0;
                total += weight * d * d;
            }
        }
    }
    Ok(0.5 * total)
}

/// Result of evaluating the variational bound quantity `A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmiBound {
    /// `2 E_true[r_hat] - E_{true prod}[r_hat^2] - 1`.
    pub a_value: f64,
    /// SMI of the true joint.
    pub smi_true: f64,
    /// `a_value - smi_true`.
    pub gap: f64,
}

/// Evaluates `A` with the ratio taken from `joint_est` and expectations taken
/// under `joint_true` and the product of its marginals.
pub fn smi_bound_a(
    joint_true: &DiscreteJoint,
    joint_est: &DiscreteJoint,
) -> Result<SmiBound, TheoryError> {
    if joint_true.shape() != joint_est.shape() {
        return Err(TheoryError::InvalidArgument(format!(
            "alphabet mismatch: {:?} vs {:?}",
            joint_true.shape(),
            joint_est.shape()
        )));
    }
    let (rows, cols) = joint_true.shape();
    let mut e_joint = 0.0;
    let mut e_prod_sq = 0.0;
    for u in 0..rows {
        for v in 0..cols {
            let r_hat = joint_est.ratio(u, v)?;
            e_joint += joint_true.prob(u, v) * r_hat;
            e_prod_sq +=
                joint_true.row_marginal(u) * joint_true.col_marginal(v) * r_hat * r_hat;
        }
    }
    let a_value = 2.0 * e_joint - e_prod_sq - 1.0;
    let smi_true = smi_discrete(joint_true)?;
    Ok(SmiBound {
        a_value,
        smi_true,
        gap: a_value - smi_true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn joint(table: &[&[f64]]) -> DiscreteJoint {
        DiscreteJoint::new(table.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn product_joint(px: &[f64], py: &[f64]) -> DiscreteJoint {
        let table = px
            .iter()
            .map(|&a| py.iter().map(|&b| a * b).collect())
            .collect();
        DiscreteJoint::new(table).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(DiscreteJoint::new(vec![]).is_err());
        assert!(DiscreteJoint::new(vec![vec![0.5, 0.4]]).is_err());
        assert!(DiscreteJoint::new(vec![vec![1.1, -0.1]]).is_err());
        assert!(DiscreteJoint::new(vec![vec![0.5, 0.5], vec![0.0]]).is_err());
    }

    #[test]
    fn independent_joint_has_zero_smi() {
        let j = product_joint(&[0.3, 0.7], &[0.2, 0.5, 0.3]);
        assert!(smi_discrete(&j).unwrap().abs() < 1e-12);
        assert!(smi_chi2(&j).unwrap().abs() < 1e-12);
    }

    #[test]
    fn binary_identity_joint_smi_is_half() {
        // r = 2 on the diagonal, 0 off it.
        let j = joint(&[&[0.5, 0.0], &[0.0, 0.5]]);
        assert_eq!(smi_discrete(&j).unwrap(), 0.5);
        assert_eq!(smi_chi2(&j).unwrap(), 0.5);
    }

    #[test]
    fn the_two_forms_agree() {
        let j = joint(&[&[0.1, 0.25], &[0.3, 0.35]]);
        let simplified = smi_discrete(&j).unwrap();
        let chi2 = smi_chi2(&j).unwrap();
        assert!((simplified - chi2).abs() < 1e-12);
        assert!(simplified >= 0.0);
    }

    #[test]
    fn perfect_estimate_makes_a_twice_the_smi() {
        // Substituting r_hat = r collapses E_prod[r^2] to E_joint[r], so
        // A = E_joint[r] - 1 = 2 * SMI; the gap equals the SMI itself.
        let j = joint(&[&[0.5, 0.0], &[0.0, 0.5]]);
        let bound = smi_bound_a(&j, &j).unwrap();
        assert!((bound.a_value - 1.0).abs() < 1e-12);
        assert!((bound.gap - 0.5).abs() < 1e-12);

        let j = joint(&[&[0.2, 0.1], &[0.25, 0.45]]);
        let bound = smi_bound_a(&j, &j).unwrap();
        assert!((bound.a_value - 2.0 * bound.smi_true).abs() < 1e-12);
        assert!((bound.gap - bound.smi_true).abs() < 1e-12);
    }

    #[test]
    fn marginal_product_estimate_gives_zero_a() {
        // r_hat = 1 everywhere: A = 2 - 1 - 1 = 0 and the gap is -SMI.
        let j = joint(&[&[0.4, 0.1], &[0.1, 0.4]]);
        let est = product_joint(&[0.5, 0.5], &[0.5, 0.5]);
        let bound = smi_bound_a(&j, &est).unwrap();
        assert!(bound.a_value.abs() < 1e-12);
        assert!((bound.gap + bound.smi_true).abs() < 1e-12);
    }

    #[test]
    fn mismatched_alphabets_rejected() {
        let a = joint(&[&[0.5, 0.5]]);
        let b = joint(&[&[0.5], &[0.5]]);
        assert!(smi_bound_a(&a, &b).is_err());
    }
}
