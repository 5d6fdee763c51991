//! Weak classifiers characterised by their per-input error probability.

use std::sync::Arc;

use crate::sample::{Label, LabeledPoint};

/// A weak (basis) classifier.
///
/// The trainers never look at predicted labels directly; a classifier is
/// fully described by `error_prob(x)`, the probability that its output on
/// `x` disagrees with the true label. Deterministic classifiers return only
/// 0.0 or 1.0 and consume no randomness when realised.
pub trait WeakClassifier: Send + Sync {
    /// Probability in [0, 1] of misclassifying `x`.
    fn error_prob(&self, x: &LabeledPoint) -> f64;

    /// Whether `error_prob` takes only the values 0 and 1.
    fn is_deterministic(&self) -> bool {
        false
    }

    /// Short description used in traces and reports.
    fn describe(&self) -> String {
        "weak classifier".into()
    }
}

/// Shared handle to a weak classifier.
pub type ClassifierHandle = Arc<dyn WeakClassifier>;

/// An axis-aligned decision stump on real features.
///
/// Predicts `polarity` when `features[axis] < threshold` and the opposite
/// label otherwise.
#[derive(Debug, Clone)]
pub struct DecisionStump {
    pub axis: usize,
    pub threshold: f64,
    pub polarity: Label,
}

impl DecisionStump {
    pub fn new(axis: usize, threshold: f64, polarity: Label) -> Self {
        Self {
            axis,
            threshold,
            polarity,
        }
    }

    /// The stump's predicted label for `x`.
    pub fn predict(&self, x: &LabeledPoint) -> Label {
        if x.features[self.axis] < self.threshold {
            self.polarity
        } else {
            self.polarity.flipped()
        }
    }
}

impl WeakClassifier for DecisionStump {
    fn error_prob(&self, x: &LabeledPoint) -> f64 {
        if self.predict(x) == x.label {
            0.0
        } else {
            1.0
        }
    }

    fn is_deterministic(&self) -> bool {
        true
    }

    fn describe(&self) -> String {
        format!(
            "stump(axis={}, threshold={}, polarity={:+})",
            self.axis,
            self.threshold,
            self.polarity.sign() as i32
        )
    }
}

/// A deterministic base classifier whose output is flipped with probability
/// `flip_prob`, so the error probability becomes `flip_prob` where the base
/// is right and `1 - flip_prob` where it is wrong.
#[derive(Clone)]
pub struct FlipNoisy {
    base: ClassifierHandle,
    flip_prob: f64,
}

impl FlipNoisy {
    pub fn new(base: ClassifierHandle, flip_prob: f64) -> Self {
        assert!((0.0..=1.0).contains(&flip_prob));
        Self { base, flip_prob }
    }
}

impl WeakClassifier for FlipNoisy {
    fn error_prob(&self, x: &LabeledPoint) -> f64 {
        let base_err = self.base.error_prob(x);
        // flip turns a right answer wrong and vice versa
        base_err * (1.0 - self.flip_prob) + (1.0 - base_err) * self.flip_prob
    }

    fn is_deterministic(&self) -> bool {
        self.flip_prob == 0.0 || self.flip_prob == 1.0
    }

    fn describe(&self) -> String {
        format!("flip({}, eta={})", self.base.describe(), self.flip_prob)
    }
}

/// A classifier with the same error probability on every input. Test and
/// benchmark workhorse.
#[derive(Debug, Clone)]
pub struct FixedError(pub f64);

impl WeakClassifier for FixedError {
    fn error_prob(&self, _x: &LabeledPoint) -> f64 {
        self.0
    }

    fn is_deterministic(&self) -> bool {
        self.0 == 0.0 || self.0 == 1.0
    }

    fn describe(&self) -> String {
        format!("fixed(q={})", self.0)
    }
}

/// A classifier defined by an explicit per-point error table, keyed by a
/// reserved feature slot holding the point index. Used to plant exact error
/// patterns in tests and sweeps.
#[derive(Debug, Clone)]
pub struct TableClassifier {
    errors: Vec<f64>,
    index_feature: usize,
}

impl TableClassifier {
    /// `errors[i]` is the error probability on the point whose
    /// `features[index_feature]` equals `i`.
    pub fn new(errors: Vec<f64>, index_feature: usize) -> Self {
        assert!(errors.iter().all(|q| (0.0..=1.0).contains(q)));
        Self {
            errors,
            index_feature,
        }
    }
}

impl WeakClassifier for TableClassifier {
    fn error_prob(&self, x: &LabeledPoint) -> f64 {
        let idx = x.features[self.index_feature] as usize;
        self.errors[idx]
    }

    fn is_deterministic(&self) -> bool {
        self.errors.iter().all(|&q| q == 0.0 || q == 1.0)
    }

    fn describe(&self) -> String {
        format!("table({} points)", self.errors.len())
    }
}
