//! Superposed classifier queries.

use crate::classifier::ClassifierHandle;
use crate::error::{BoostError, Result};
use crate::exact::ErrorTable;
use crate::kernels;
use crate::sample::LabeledSample;

use super::state::QuantumState;

/// Counts classifier-oracle applications. Every application of a single
/// query operator — forward or inverse — costs one query; nothing is ever
/// refunded.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryCounter {
    count: u64,
}

impl QueryCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, n: u64) {
        self.count += n;
    }

    pub fn total(&self) -> u64 {
        self.count
    }
}

/// The query operator of one classifier: conditioned on the data register,
/// it writes `sqrt(1-q(x)) |0> + sqrt(q(x)) |1>` onto a fresh branch qubit.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumQueryOracle {
    q_one: Vec<f64>,
}

impl QuantumQueryOracle {
    /// Tabulate a classifier's error probabilities over the sample.
    pub fn from_classifier(classifier: &ClassifierHandle, sample: &LabeledSample) -> Self {
        Self {
            q_one: sample.iter().map(|x| classifier.error_prob(x)).collect(),
        }
    }

    pub fn from_error_row(q_one: Vec<f64>) -> Self {
        assert!(q_one.iter().all(|q| (0.0..=1.0).contains(q)));
        Self { q_one }
    }

    pub fn error_probs(&self) -> &[f64] {
        &self.q_one
    }

    /// Apply to branch qubit `bit` (1-based). Counts one query either way.
    pub fn apply(
        &self,
        state: &mut QuantumState,
        bit: usize,
        inverse: bool,
        counter: &mut QueryCounter,
    ) -> Result<()> {
        let layout = state.layout();
        if bit == 0 || bit > layout.branch_bits {
            return Err(BoostError::Precondition(format!(
                "branch bit {bit} outside register of {} bits",
                layout.branch_bits
            )));
        }
        if self.q_one.len() != layout.n_data {
            return Err(BoostError::DimensionMismatch(format!(
                "oracle covers {} points, layout indexes {}",
                self.q_one.len(),
                layout.n_data
            )));
        }
        counter.add(1);
        kernels::oracle_pass(
            state.amplitudes_mut(),
            bit,
            layout.branch_bits,
            layout.n_data,
            &self.q_one,
            inverse,
        );
        Ok(())
    }
}

/// Build the per-iteration oracle set from the first `t` classifiers.
pub fn oracle_set(classifiers: &[ClassifierHandle], sample: &LabeledSample) -> Vec<QuantumQueryOracle> {
    classifiers
        .iter()
        .map(|c| QuantumQueryOracle::from_classifier(c, sample))
        .collect()
}

/// The error table corresponding to a set of oracles (for exact
/// enumeration against the same probabilities the state uses).
pub fn error_table_of(oracles: &[QuantumQueryOracle]) -> ErrorTable {
    ErrorTable::from_rows(oracles.iter().map(|o| o.q_one.clone()).collect())
}

/// Query every classifier once in superposition, populating the branch
/// register with amplitudes `sqrt(q(s_t, x) / N)`.
///
/// Requires the branch register to be zero on the state's support; counts
/// one query per classifier.
pub fn apply_query_oracles(
    state: &mut QuantumState,
    oracles: &[QuantumQueryOracle],
    counter: &mut QueryCounter,
) -> Result<()> {
    let layout = state.layout();
    if oracles.len() != layout.branch_bits {
        return Err(BoostError::DimensionMismatch(format!(
            "{} oracles for a {}-bit branch register",
            oracles.len(),
            layout.branch_bits
        )));
    }
    let dirty = state
        .amplitudes()
        .iter()
        .enumerate()
        .any(|(i, a)| a.norm_sqr() > 0.0 && layout.branch_of(i) != 0);
    if dirty {
        return Err(BoostError::Precondition(
            "branch register not zero on the state's support".into(),
        ));
    }
    for (i, oracle) in oracles.iter().enumerate() {
        oracle.apply(state, i + 1, false, counter)?;
    }
    Ok(())
}

/// Uncompute the query pass: inverse oracles in reverse order. Each inverse
/// application also counts one query.
pub fn unapply_query_oracles(
    state: &mut QuantumState,
    oracles: &[QuantumQueryOracle],
    counter: &mut QueryCounter,
) -> Result<()> {
    for (i, oracle) in oracles.iter().enumerate().rev() {
        oracle.apply(state, i + 1, true, counter)?;
    }
    Ok(())
}
