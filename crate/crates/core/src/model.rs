//! The boosted model and the cost functional it minimises.

use rand::Rng;

use crate::classifier::ClassifierHandle;
use crate::error::{BoostError, Result};
use crate::math::DEFAULT_BRANCH_CAP;
use crate::sample::{Label, LabeledPoint, LabeledSample};

/// An ordered ensemble of weak classifiers with trained coefficients.
///
/// All four lists share one length `T`. `r_hats` holds the clamped error
/// estimates that produced the coefficients; `c_hats` tracks the running
/// maximum adaptive weight, so it is non-decreasing and starts at 1.
#[derive(Clone)]
pub struct BoostModel {
    pub classifiers: Vec<ClassifierHandle>,
    pub alphas: Vec<f64>,
    pub r_hats: Vec<f64>,
    pub c_hats: Vec<f64>,
}

impl BoostModel {
    pub fn new(
        classifiers: Vec<ClassifierHandle>,
        alphas: Vec<f64>,
        r_hats: Vec<f64>,
        c_hats: Vec<f64>,
    ) -> Result<Self> {
        let t = classifiers.len();
        if t == 0 {
            return Err(BoostError::EmptyModel);
        }
        if alphas.len() != t || r_hats.len() != t || c_hats.len() != t {
            return Err(BoostError::DimensionMismatch(
                "classifier, alpha, r_hat and c_hat lists must share a length".into(),
            ));
        }
        if r_hats.iter().any(|&r| !(r > 0.0 && r < 1.0)) {
            return Err(BoostError::RateOutOfRange(
                *r_hats
                    .iter()
                    .find(|&&r| !(r > 0.0 && r < 1.0))
                    .expect("just checked"),
            ));
        }
        if c_hats.windows(2).any(|w| w[1] < w[0]) || c_hats.first().is_some_and(|&c| c < 1.0) {
            return Err(BoostError::Precondition(
                "c_hats must be non-decreasing and at least 1".into(),
            ));
        }
        Ok(Self {
            classifiers,
            alphas,
            r_hats,
            c_hats,
        })
    }

    /// Number of boosting rounds.
    pub fn rounds(&self) -> usize {
        self.classifiers.len()
    }
}

/// Classify `x` with the boosted ensemble.
///
/// Each probabilistic classifier's answer is realised by one draw from its
/// error probability; deterministic classifiers consume no randomness. The
/// weighted vote is signed with ties going to `+1`.
pub fn strong_classify<R: Rng + ?Sized>(
    model: &BoostModel,
    x: &LabeledPoint,
    rng: &mut R,
) -> Result<Label> {
    if model.classifiers.is_empty() {
        return Err(BoostError::EmptyModel);
    }
    let mut score = 0.0;
    for (clf, &alpha) in model.classifiers.iter().zip(&model.alphas) {
        let q = clf.error_prob(x);
        let wrong = if q <= 0.0 {
            false
        } else if q >= 1.0 {
            true
        } else {
            rng.gen::<f64>() < q
        };
        let predicted = if wrong { x.label.flipped() } else { x.label };
        score += alpha * predicted.sign();
    }
    Ok(Label::from_sign(score))
}

/// Exponential cost of the model on the empirical distribution over
/// `sample`, enumerating every branch exactly.
///
/// Refuses to enumerate past [`DEFAULT_BRANCH_CAP`] rounds; use
/// [`exponential_cost_with_cap`] to widen the cap deliberately.
pub fn exponential_cost(model: &BoostModel, sample: &LabeledSample) -> Result<f64> {
    exponential_cost_with_cap(model, sample, DEFAULT_BRANCH_CAP)
}

/// As [`exponential_cost`] with an explicit branch-enumeration cap.
pub fn exponential_cost_with_cap(
    model: &BoostModel,
    sample: &LabeledSample,
    cap: usize,
) -> Result<f64> {
    let t = model.rounds();
    if t > cap {
        return Err(BoostError::BranchCapExceeded { requested: t, cap });
    }
    if sample.is_empty() {
        return Err(BoostError::EmptySample);
    }
    // e^{-alpha_t (-1)^{s_t}}: s_t = 0 keeps the answer right (factor
    // e^{-alpha}), s_t = 1 flips it (factor e^{+alpha}).
    let right: Vec<f64> = model.alphas.iter().map(|a| (-a).exp()).collect();
    let wrong: Vec<f64> = model.alphas.iter().map(|a| a.exp()).collect();

    let n = sample.len() as f64;
    let mut total = 0.0;
    for x in sample.iter() {
        let qs: Vec<f64> = model.classifiers.iter().map(|c| c.error_prob(x)).collect();
        // Per-point branch sum factorises over rounds.
        let mut point_sum = 1.0;
        for (i, &q) in qs.iter().enumerate() {
            point_sum *= (1.0 - q) * right[i] + q * wrong[i];
        }
        total += point_sum / n;
    }
    Ok(total)
}
