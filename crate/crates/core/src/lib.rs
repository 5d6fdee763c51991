//! Boosting of probabilistic weak classifiers, with two interchangeable
//! trainers and instrumented oracle-query accounting.
//!
//! The crate has three layers:
//!
//! - [`math`], [`sample`], [`classifier`], [`model`]: the shared closed-form
//!   machinery — optimal coefficients, adaptive weight updates, exponential
//!   cost, Hoeffding sample sizing — over samples of labelled points and
//!   weak classifiers characterised entirely by their per-input error
//!   probability.
//! - [`classical`]: the Monte Carlo trainer (one sampled branch per point per
//!   run), counting one classifier query per point per iteration.
//! - [`quantum`]: a dense statevector simulation of the amplitude-estimation
//!   trainer — superposed classifier queries, a conditional rotation against
//!   the adaptive-weight table, a reflection-based iterate, and phase
//!   estimation reading out the weighted error.
//!
//! [`povm`] supplies weak classifiers backed by two-outcome quantum
//! measurements on density matrices; they plug into both trainers through the
//! same [`classifier::WeakClassifier`] interface.
//!
//! With the default `parallel` feature the data-parallel inner loops
//! (statevector passes, Monte Carlo trials) run on rayon; disabling it
//! selects sequential fallbacks that produce identical results.

pub mod branch;
pub mod classical;
pub mod classifier;
pub mod error;
pub mod exact;
#[doc(hidden)]
pub mod kernels;
pub mod math;
pub mod model;
pub mod povm;
pub mod quantum;
pub mod rng;
pub mod sample;

pub use classifier::WeakClassifier;
pub use error::BoostError;
pub use model::BoostModel;
pub use sample::{Label, LabeledPoint, LabeledSample};
