//! The conditional weight rotation and the composed search iterate.

use crate::error::{BoostError, Result};
use crate::exact::WeightFunctionTable;
use crate::kernels;

use super::oracle::{
    apply_query_oracles, unapply_query_oracles, QuantumQueryOracle, QueryCounter,
};
use super::state::{apply_ancilla_phase_flip, flip_init_component, QuantumState};

/// Rotate the ancilla of every basis state whose last branch bit is 1 to
/// `sqrt(1 - W/c_hat) |0> + sqrt(W/c_hat) |1>`, with `W` looked up from the
/// branch string. States with last bit 0 are untouched.
///
/// After this acts on a freshly queried superposition, the squared
/// amplitude of the ancilla-1 subspace is exactly `R_t / c_hat`, the
/// normalised weighted error.
pub fn apply_rotation(
    state: &mut QuantumState,
    weights: &WeightFunctionTable,
    c_hat: f64,
) -> Result<()> {
    apply_rotation_directed(state, weights, c_hat, false)
}

/// Inverse of [`apply_rotation`].
pub fn unapply_rotation(
    state: &mut QuantumState,
    weights: &WeightFunctionTable,
    c_hat: f64,
) -> Result<()> {
    apply_rotation_directed(state, weights, c_hat, true)
}

fn apply_rotation_directed(
    state: &mut QuantumState,
    weights: &WeightFunctionTable,
    c_hat: f64,
    inverse: bool,
) -> Result<()> {
    let layout = state.layout();
    if weights.iteration() != layout.branch_bits {
        return Err(BoostError::DimensionMismatch(format!(
            "weight table for iteration {} against a {}-bit branch register",
            weights.iteration(),
            layout.branch_bits
        )));
    }
    if !(c_hat > 0.0) {
        return Err(BoostError::ArgumentOutOfRange {
            name: "c_hat",
            value: c_hat,
            expected: "(0, inf)",
        });
    }
    kernels::rotation_pass(
        state.amplitudes_mut(),
        layout.branch_bits,
        weights.prefix_weights(),
        c_hat,
        inverse,
    )
}

/// The composed per-iteration operator `G_t`: query all `t` classifiers,
/// then rotate the ancilla against the weight table. Held as forward and
/// inverse maps so the search iterate can uncompute it.
pub struct GroverComposition {
    oracles: Vec<QuantumQueryOracle>,
    weights: WeightFunctionTable,
    c_hat: f64,
}

impl GroverComposition {
    /// Compose the iteration-`t` operator; the rotation normaliser is the
    /// weight table's maximum over populated branches.
    pub fn new(oracles: Vec<QuantumQueryOracle>, weights: WeightFunctionTable) -> Result<Self> {
        if weights.iteration() != oracles.len() {
            return Err(BoostError::DimensionMismatch(format!(
                "{} oracles for a weight table at iteration {}",
                oracles.len(),
                weights.iteration()
            )));
        }
        let c_hat = weights.c_hat();
        Ok(Self {
            oracles,
            weights,
            c_hat,
        })
    }

    pub fn rounds(&self) -> usize {
        self.oracles.len()
    }

    pub fn c_hat(&self) -> f64 {
        self.c_hat
    }

    pub fn weights(&self) -> &WeightFunctionTable {
        &self.weights
    }

    pub fn oracles(&self) -> &[QuantumQueryOracle] {
        &self.oracles
    }

    /// Forward map: `t` queries plus the rotation.
    pub fn apply(&self, state: &mut QuantumState, counter: &mut QueryCounter) -> Result<()> {
        apply_query_oracles(state, &self.oracles, counter)?;
        apply_rotation(state, &self.weights, self.c_hat)
    }

    /// Inverse map: rotation back, then inverse queries. Also `t` queries.
    pub fn apply_inverse(&self, state: &mut QuantumState, counter: &mut QueryCounter) -> Result<()> {
        unapply_rotation(state, &self.weights, self.c_hat)?;
        unapply_query_oracles(state, &self.oracles, counter)
    }
}

/// One application of the search iterate
/// `W_G = G_t (I - 2 |init><init|) G_t^dag Z`.
///
/// `Z` flips the sign of ancilla-1 amplitudes and the middle factor flips
/// the component along `init`. On the two-dimensional invariant subspace
/// this composition of two reflections rotates by twice the estimation
/// angle, so its eigenvalues there are `exp(+-2i theta)` with
/// `theta = arccos(sqrt(R_t / c_hat))`; phase estimation reads that angle
/// out. Consumes `2t` queries (one `G_t` and one `G_t^dag`).
pub fn grover_iterate(
    state: &mut QuantumState,
    g: &GroverComposition,
    init: &QuantumState,
    counter: &mut QueryCounter,
) -> Result<()> {
    apply_ancilla_phase_flip(state);
    g.apply_inverse(state, counter)?;
    flip_init_component(state, init)?;
    g.apply(state, counter)
}
