//! Exact branch enumeration on the empirical distribution.
//!
//! For instances small enough to walk every branch string, these routines
//! compute the weighted errors, weight tables and their maxima exactly.
//! They are the ground truth the Monte Carlo trainer estimates and the
//! quantum simulation encodes.

use crate::classifier::ClassifierHandle;
use crate::error::{BoostError, Result};
use crate::math::{weight_multiplier, ClampPolicy, DEFAULT_BRANCH_CAP};
use crate::sample::LabeledSample;

/// Per-point error probabilities for a prefix of classifiers.
///
/// `q[i][x]` is classifier `i + 1`'s probability of answering wrong on
/// point `x`. Both trainers and the simulator consult classifiers through
/// this table once a sample is fixed.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorTable {
    q: Vec<Vec<f64>>,
}

impl ErrorTable {
    pub fn build(classifiers: &[ClassifierHandle], sample: &LabeledSample) -> Self {
        let q = classifiers
            .iter()
            .map(|c| sample.iter().map(|x| c.error_prob(x)).collect())
            .collect();
        Self { q }
    }

    /// Wrap explicit probability rows (`rows[i][x]` for classifier `i+1`).
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Self {
        let width = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == width));
        Self { q: rows }
    }

    pub fn rounds(&self) -> usize {
        self.q.len()
    }

    pub fn points(&self) -> usize {
        self.q.first().map_or(0, Vec::len)
    }

    /// Probability that classifier `i` (1-based) errs on point `x`.
    pub fn error(&self, i: usize, x: usize) -> f64 {
        self.q[i - 1][x]
    }

    /// Probability of the branch outcome `bit` of classifier `i` on `x`.
    pub fn branch_prob(&self, i: usize, x: usize, bit: u8) -> f64 {
        let q = self.error(i, x);
        if bit == 1 {
            q
        } else {
            1.0 - q
        }
    }

    /// Error row of classifier `i` (1-based) across the sample.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.q[i - 1]
    }
}

/// The branch-weight function at iteration `t`, derived from the error
/// estimates of iterations `1 .. t-1`.
///
/// Weights depend only on the first `t - 1` bits of a branch string: every
/// point starts at weight 1 and each recorded bit applies the matching
/// multiplier. Entries are tracked together with whether any point reaches
/// the prefix with positive probability; the maximum over populated
/// prefixes is the rotation normaliser.
#[derive(Debug, Clone)]
pub struct WeightFunctionTable {
    iteration: usize,
    prefix_weights: Vec<f64>,
    populated: Vec<bool>,
    c_hat: f64,
}

impl WeightFunctionTable {
    /// Build the table for iteration `t = r_hats.len() + 1`.
    ///
    /// `r_hats` are the clamped estimates of previous iterations; `errors`
    /// must cover at least those iterations to decide which prefixes are
    /// reachable.
    pub fn build(r_hats: &[f64], errors: &ErrorTable, cap: usize) -> Result<Self> {
        let hist = r_hats.len();
        if hist + 1 > cap.max(1) {
            return Err(BoostError::BranchCapExceeded {
                requested: hist + 1,
                cap,
            });
        }
        if errors.rounds() < hist {
            return Err(BoostError::DimensionMismatch(
                "error table shorter than the estimate history".into(),
            ));
        }
        let size = 1usize << hist;
        let mut prefix_weights = vec![0.0; size];
        let mut populated = vec![false; size];
        for prefix in 0..size {
            let mut w = 1.0;
            for (k, &r) in r_hats.iter().enumerate() {
                let bit = ((prefix >> k) & 1) as u8;
                w *= weight_multiplier(bit, r);
            }
            prefix_weights[prefix] = w;
            populated[prefix] = (0..errors.points()).any(|x| {
                (0..hist).all(|k| errors.branch_prob(k + 1, x, ((prefix >> k) & 1) as u8) > 0.0)
            });
        }
        let c_hat = prefix_weights
            .iter()
            .zip(&populated)
            .filter(|&(_, &p)| p)
            .map(|(&w, _)| w)
            .fold(f64::MIN, f64::max);
        if !c_hat.is_finite() {
            return Err(BoostError::Precondition(
                "no populated branch prefix; sample is empty".into(),
            ));
        }
        Ok(Self {
            iteration: hist + 1,
            prefix_weights,
            populated,
            c_hat,
        })
    }

    /// Iteration this table serves (branch strings have this length).
    pub fn iteration(&self) -> usize {
        self.iteration
    }

    /// Weight of a full branch index at this iteration; only the first
    /// `t - 1` bits are read. The weight is shared by every point.
    pub fn weight(&self, branch: usize) -> f64 {
        self.prefix_weights[branch & (self.prefix_weights.len() - 1)]
    }

    /// Whether some point reaches this branch prefix with positive
    /// probability.
    pub fn is_populated(&self, branch: usize) -> bool {
        self.populated[branch & (self.prefix_weights.len() - 1)]
    }

    /// Maximum weight over populated prefixes; the rotation normaliser.
    pub fn c_hat(&self) -> f64 {
        self.c_hat
    }

    /// Raw prefix-weight array, indexed by the low `t - 1` bits of a
    /// branch index.
    pub fn prefix_weights(&self) -> &[f64] {
        &self.prefix_weights
    }

    /// Maximum weight over all prefixes, populated or not; equals the
    /// analytic product bound over the estimate history.
    pub fn c_hat_bound(&self) -> f64 {
        self.prefix_weights.iter().copied().fold(f64::MIN, f64::max)
    }
}

/// Exact weighted error at iteration `t` given the estimates used for the
/// weights of iterations `1 .. t-1`: the average over points and branch
/// strings of `weight * last bit`, under the joint branch distribution.
pub fn exact_weighted_error(
    errors: &ErrorTable,
    weights: &WeightFunctionTable,
) -> f64 {
    let t = weights.iteration();
    let n = errors.points();
    let hist = t - 1;
    let mut total = 0.0;
    for x in 0..n {
        let mut acc = 0.0;
        for prefix in 0..(1usize << hist) {
            let mut p = 1.0;
            for k in 0..hist {
                p *= errors.branch_prob(k + 1, x, ((prefix >> k) & 1) as u8);
            }
            if p > 0.0 {
                acc += p * weights.weight(prefix);
            }
        }
        total += acc * errors.error(t, x);
    }
    total / n as f64
}

/// The exact sequence of weighted errors over `rounds` iterations, where
/// each iteration's weights use the clamped exact errors of the previous
/// ones. Returns `(raw, clamped)` pairs.
pub fn exact_error_sequence(
    errors: &ErrorTable,
    rounds: usize,
    clamp: ClampPolicy,
) -> Result<Vec<(f64, f64)>> {
    if rounds > DEFAULT_BRANCH_CAP {
        return Err(BoostError::BranchCapExceeded {
            requested: rounds,
            cap: DEFAULT_BRANCH_CAP,
        });
    }
    let mut clamped_hist = Vec::with_capacity(rounds);
    let mut out = Vec::with_capacity(rounds);
    for _t in 1..=rounds {
        let table = WeightFunctionTable::build(&clamped_hist, errors, DEFAULT_BRANCH_CAP)?;
        let raw = exact_weighted_error(errors, &table);
        let (clamped, _) = clamp.apply(raw);
        clamped_hist.push(clamped);
        out.push((raw, clamped));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::TableClassifier;
    use crate::sample::{Label, LabeledPoint};
    use approx::assert_abs_diff_eq;
    use std::sync::Arc;

    fn sample_of(n: usize) -> LabeledSample {
        LabeledSample::new(
            (0..n)
                .map(|i| LabeledPoint::new(vec![i as f64], Label::Plus))
                .collect(),
        )
        .unwrap()
    }

    fn table(errs: Vec<Vec<f64>>) -> (ErrorTable, LabeledSample) {
        let n = errs[0].len();
        let sample = sample_of(n);
        let classifiers: Vec<ClassifierHandle> = errs
            .into_iter()
            .map(|e| Arc::new(TableClassifier::new(e, 0)) as ClassifierHandle)
            .collect();
        (ErrorTable::build(&classifiers, &sample), sample)
    }

    #[test]
    fn first_iteration_error_is_mean_q() {
        let (errors, _) = table(vec![vec![0.1, 0.3, 0.5, 0.7]]);
        let w = WeightFunctionTable::build(&[], &errors, 20).unwrap();
        assert_eq!(w.c_hat(), 1.0);
        assert_abs_diff_eq!(exact_weighted_error(&errors, &w), 0.4, epsilon = 1e-12);
    }

    #[test]
    fn weight_table_applies_multipliers() {
        let (errors, _) = table(vec![vec![0.5, 0.5], vec![0.5, 0.5]]);
        let w = WeightFunctionTable::build(&[0.25], &errors, 20).unwrap();
        // prefix bit 0 -> 1/(2 * 0.75); bit 1 -> 1/(2 * 0.25)
        assert_abs_diff_eq!(w.weight(0), 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(w.weight(1), 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(w.c_hat(), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn deterministic_history_populates_one_prefix_per_point() {
        // Classifier 1 errs on point 0 only.
        let (errors, _) = table(vec![vec![1.0, 0.0], vec![0.5, 0.5]]);
        let w = WeightFunctionTable::build(&[0.5], &errors, 20).unwrap();
        assert!(w.is_populated(0));
        assert!(w.is_populated(1));
        // With r = 0.5 both prefixes weigh 1, and both are reachable by
        // exactly one point each.
        assert_eq!(w.c_hat(), 1.0);
    }

    #[test]
    fn populated_max_can_undercut_bound() {
        // One deterministic classifier right everywhere: the wrong branch
        // is unpopulated, so its large weight is excluded from c_hat.
        let (errors, _) = table(vec![vec![0.0, 0.0], vec![0.5, 0.5]]);
        let clamp = ClampPolicy::default();
        let (r1, _) = clamp.apply(0.0);
        let w = WeightFunctionTable::build(&[r1], &errors, 20).unwrap();
        assert!(w.c_hat() < 1.0);
        assert!(w.c_hat_bound() > 1000.0);
    }

    #[test]
    fn sequence_respects_cap() {
        let (errors, _) = table(vec![vec![0.5]; 25]);
        assert!(matches!(
            exact_error_sequence(&errors, 25, ClampPolicy::default()),
            Err(BoostError::BranchCapExceeded { .. })
        ));
    }
}
