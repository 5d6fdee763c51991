//! Labelled samples over a feature space.

use crate::error::{BoostError, Result};

/// A binary class label, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Plus,
    Minus,
}

impl Label {
    /// Build from a signed integer in {-1, +1}.
    pub fn from_i32(v: i32) -> Result<Self> {
        match v {
            1 => Ok(Label::Plus),
            -1 => Ok(Label::Minus),
            _ => Err(BoostError::ArgumentOutOfRange {
                name: "label",
                value: v as f64,
                expected: "{-1, +1}",
            }),
        }
    }

    /// The label as a signed value.
    pub fn sign(self) -> f64 {
        match self {
            Label::Plus => 1.0,
            Label::Minus => -1.0,
        }
    }

    /// The opposite label.
    pub fn flipped(self) -> Self {
        match self {
            Label::Plus => Label::Minus,
            Label::Minus => Label::Plus,
        }
    }

    /// Sign convention used by the strong classifier: zero maps to `+1`.
    pub fn from_sign(v: f64) -> Self {
        if v < 0.0 {
            Label::Minus
        } else {
            Label::Plus
        }
    }
}

/// One data point: a real feature vector and its true label.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledPoint {
    pub features: Vec<f64>,
    pub label: Label,
}

impl LabeledPoint {
    pub fn new(features: Vec<f64>, label: Label) -> Self {
        Self { features, label }
    }
}

/// An ordered sample of labelled points.
///
/// Point indices are stable for the lifetime of a training run: index `i`
/// is the identity of `x_i` in branch tables, register layouts and traces.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledSample {
    points: Vec<LabeledPoint>,
}

impl LabeledSample {
    /// Wrap a non-empty list of points with equal feature lengths.
    pub fn new(points: Vec<LabeledPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(BoostError::EmptySample);
        }
        let width = points[0].features.len();
        if points.iter().any(|p| p.features.len() != width) {
            return Err(BoostError::DimensionMismatch(
                "feature vectors have unequal lengths".into(),
            ));
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &LabeledPoint {
        &self.points[i]
    }

    pub fn points(&self) -> &[LabeledPoint] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LabeledPoint> {
        self.points.iter()
    }
}
