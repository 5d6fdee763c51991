//! Closed-form pieces shared by both trainers.

use crate::error::{BoostError, Result};

/// Default half-width used when clamping estimated error rates away from
/// the endpoints of (0, 1), where the coefficient formula diverges.
pub const DEFAULT_CLAMP: f64 = 1e-6;

/// Default cap on exact branch enumeration; 2^cap branches are walked per
/// point, so this bounds both time and the weight-table size.
pub const DEFAULT_BRANCH_CAP: usize = 20;

/// Clamping policy for estimated error rates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClampPolicy {
    /// Rates are forced into `[width, 1 - width]`.
    pub width: f64,
}

impl Default for ClampPolicy {
    fn default() -> Self {
        Self {
            width: DEFAULT_CLAMP,
        }
    }
}

impl ClampPolicy {
    pub fn new(width: f64) -> Self {
        assert!(width > 0.0 && width < 0.5);
        Self { width }
    }

    /// The clamped rate and whether clamping fired.
    pub fn apply(&self, r: f64) -> (f64, bool) {
        if r < self.width {
            (self.width, true)
        } else if r > 1.0 - self.width {
            (1.0 - self.width, true)
        } else {
            (r, false)
        }
    }
}

/// Optimal coefficient for a weighted error rate: `0.5 * ln((1 - r) / r)`.
///
/// The caller is responsible for clamping; rates at or beyond the endpoints
/// are rejected rather than silently adjusted.
pub fn alpha_from_error(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(BoostError::RateOutOfRange(r));
    }
    Ok(0.5 * ((1.0 - r) / r).ln())
}

/// Adaptive weight update for one branch bit.
///
/// A wrong answer (`bit = 1`) divides the weight by `2 * r_hat`, a right
/// answer by `2 * (1 - r_hat)`, so the expected weight under the rate
/// `r_hat` itself is unchanged.
pub fn update_weight(w: f64, bit: u8, r_hat: f64) -> f64 {
    debug_assert!(bit <= 1);
    debug_assert!(r_hat > 0.0 && r_hat < 1.0);
    if bit == 1 {
        w / (2.0 * r_hat)
    } else {
        w / (2.0 * (1.0 - r_hat))
    }
}

/// The multiplier `update_weight` applies for a given bit.
pub fn weight_multiplier(bit: u8, r_hat: f64) -> f64 {
    update_weight(1.0, bit, r_hat)
}

/// Smallest sample size for which the two-sided concentration bound
/// `2 exp(-2 N eps^2 / c_hat^2)` drops to `failure_prob`.
pub fn sample_size_for(c_hat: f64, epsilon: f64, failure_prob: f64) -> Result<usize> {
    if c_hat < 1.0 || !c_hat.is_finite() {
        return Err(BoostError::ArgumentOutOfRange {
            name: "c_hat",
            value: c_hat,
            expected: "[1, inf)",
        });
    }
    if epsilon <= 0.0 || !epsilon.is_finite() {
        return Err(BoostError::ArgumentOutOfRange {
            name: "epsilon",
            value: epsilon,
            expected: "(0, inf)",
        });
    }
    if !(failure_prob > 0.0 && failure_prob < 1.0) {
        return Err(BoostError::ArgumentOutOfRange {
            name: "failure_prob",
            value: failure_prob,
            expected: "(0, 1)",
        });
    }
    let raw = c_hat * c_hat * (2.0 / failure_prob).ln() / (2.0 * epsilon * epsilon);
    Ok((raw.ceil() as usize).max(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn alpha_balanced_rate_is_zero() {
        assert_eq!(alpha_from_error(0.5).unwrap(), 0.0);
    }

    #[test]
    fn alpha_analytic_inversion() {
        // r = 1/(1 + e^2) makes (1 - r)/r = e^2, so alpha = 1.
        let r = 1.0 / (1.0 + std::f64::consts::E.powi(2));
        assert_abs_diff_eq!(alpha_from_error(r).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn alpha_quarter_rate() {
        // 0.5 * ln 3, evaluated independently.
        assert_abs_diff_eq!(
            alpha_from_error(0.25).unwrap(),
            0.5493061443340549,
            epsilon = 1e-12
        );
    }

    #[test]
    fn alpha_domain_errors() {
        assert!(alpha_from_error(0.0).is_err());
        assert!(alpha_from_error(1.0).is_err());
        assert!(alpha_from_error(-0.1).is_err());
        assert!(alpha_from_error(1.1).is_err());
    }

    #[test]
    fn weight_update_examples() {
        assert_abs_diff_eq!(update_weight(1.0, 1, 0.25), 2.0, epsilon = 0.0);
        assert_abs_diff_eq!(update_weight(1.0, 0, 0.25), 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(update_weight(2.0, 0, 0.5), 2.0, epsilon = 0.0);
    }

    #[test]
    fn sample_size_examples() {
        // ceil(ln(40) / 0.02) and four times that, recomputed directly.
        assert_eq!(sample_size_for(1.0, 0.1, 0.05).unwrap(), 185);
        assert_eq!(sample_size_for(2.0, 0.1, 0.05).unwrap(), 738);
    }

    #[test]
    fn sample_size_single_point_limit() {
        // epsilon at or above c_hat * sqrt(ln(2/delta)/2) needs one sample.
        let delta = 0.05;
        let eps = (2.0_f64 / delta).ln().sqrt() / 2.0_f64.sqrt() + 1e-9;
        assert_eq!(sample_size_for(1.0, eps, delta).unwrap(), 1);
        assert_eq!(sample_size_for(1.0, 1e9, delta).unwrap(), 1);
    }

    #[test]
    fn sample_size_rejects_bad_arguments() {
        assert!(sample_size_for(0.5, 0.1, 0.05).is_err());
        assert!(sample_size_for(1.0, 0.0, 0.05).is_err());
        assert!(sample_size_for(1.0, 0.1, 0.0).is_err());
        assert!(sample_size_for(1.0, 0.1, 1.0).is_err());
    }

    #[test]
    fn clamp_policy_bounds() {
        let c = ClampPolicy::default();
        assert_eq!(c.apply(0.0), (DEFAULT_CLAMP, true));
        assert_eq!(c.apply(1.0), (1.0 - DEFAULT_CLAMP, true));
        assert_eq!(c.apply(0.3), (0.3, false));
    }
}
