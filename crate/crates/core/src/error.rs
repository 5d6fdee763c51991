//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by trainers, simulators and the shared math layer.
#[derive(Debug, Clone, Error)]
pub enum BoostError {
    /// A model with no classifiers was asked to classify.
    #[error("model holds no classifiers")]
    EmptyModel,

    /// A sample with no points was supplied where at least one is required.
    #[error("sample holds no points")]
    EmptySample,

    /// An error rate left the open interval (0, 1) where the closed forms
    /// are defined.
    #[error("error rate {0} outside the open interval (0, 1)")]
    RateOutOfRange(f64),

    /// A scalar argument left its documented range.
    #[error("argument {name} = {value} outside {expected}")]
    ArgumentOutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// Exact branch enumeration was requested past the configured cap.
    #[error("branch enumeration over {requested} iterations exceeds cap {cap}")]
    BranchCapExceeded { requested: usize, cap: usize },

    /// A statevector would exceed the configured amplitude budget.
    #[error("state of {required} amplitudes exceeds memory cap {cap}")]
    MemoryCapExceeded { required: u128, cap: usize },

    /// Two quantum states with different register layouts were combined.
    #[error("register layouts differ: {0}")]
    LayoutMismatch(String),

    /// An operator precondition on the state was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A branch weight exceeded the rotation normaliser.
    #[error("weight {weight} exceeds normaliser {c_hat} on a populated branch")]
    WeightExceedsNormaliser { weight: f64, c_hat: f64 },

    /// Matrix dimensions do not agree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A density matrix or measurement operator failed validation.
    #[error("invalid operator: {0}")]
    InvalidOperator(String),

    /// Dataset generation produced a degenerate instance.
    #[error("degenerate dataset: {0}")]
    DegenerateDataset(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, BoostError>;
