//! Dense statevector over a register layout.

use num_complex::Complex64;

use super::layout::RegisterLayout;
use crate::error::{BoostError, Result};
use crate::kernels;
use crate::sample::LabeledSample;

/// A complex amplitude vector over the basis of a [`RegisterLayout`].
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    layout: RegisterLayout,
    amps: Vec<Complex64>,
}

impl QuantumState {
    /// The all-zeros register.
    pub fn zeroed(layout: RegisterLayout) -> Self {
        Self {
            layout,
            amps: vec![Complex64::new(0.0, 0.0); layout.dim()],
        }
    }

    pub fn layout(&self) -> RegisterLayout {
        self.layout
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn amplitude(&self, phase: usize, x: usize, branch: usize, ancilla: usize) -> Complex64 {
        self.amps[self.layout.index(phase, x, branch, ancilla)]
    }

    /// Squared 2-norm of the state.
    pub fn norm_sqr(&self) -> f64 {
        kernels::norm_sqr(&self.amps)
    }

    /// Probability of reading 1 on the ancilla qubit.
    pub fn ancilla_one_probability(&self) -> f64 {
        // Chunked in fixed order so the result does not depend on the
        // execution strategy.
        let partials: Vec<f64> = self
            .amps
            .chunks(2 * kernels::REDUCE_CHUNK)
            .map(|c| c.chunks(2).map(|pair| pair[1].norm_sqr()).sum())
            .collect();
        partials.into_iter().sum()
    }

    /// Probability distribution over phase-register values.
    pub fn phase_distribution(&self) -> Vec<f64> {
        let d = self.layout.system_dim();
        self.amps
            .chunks(d)
            .map(|block| kernels::norm_sqr(block))
            .collect()
    }

    fn check_layout(&self, other: &QuantumState) -> Result<()> {
        if self.layout != other.layout {
            return Err(BoostError::LayoutMismatch(format!(
                "{:?} vs {:?}",
                self.layout, other.layout
            )));
        }
        Ok(())
    }
}

/// The start of one training iteration: a uniform superposition over the
/// sample with branch, ancilla and phase registers cleared.
pub fn prepare_initial(sample: &LabeledSample, layout: RegisterLayout) -> Result<QuantumState> {
    if layout.n_data != sample.len() {
        return Err(BoostError::DimensionMismatch(format!(
            "layout indexes {} data points, sample has {}",
            layout.n_data,
            sample.len()
        )));
    }
    let mut state = QuantumState::zeroed(layout);
    let amp = Complex64::new(1.0 / (sample.len() as f64).sqrt(), 0.0);
    for x in 0..sample.len() {
        let i = layout.index(0, x, 0, 0);
        state.amps[i] = amp;
    }
    Ok(state)
}

/// Reflect `state` about `init`: `(2 |init><init| - I) |state>`, computed
/// with one inner product and one fused scale-and-subtract pass.
pub fn reflect_about_init(state: &mut QuantumState, init: &QuantumState) -> Result<()> {
    state.check_layout(init)?;
    let c = kernels::inner_product(&init.amps, &state.amps);
    kernels::combine_reflect(&mut state.amps, &init.amps, 2.0 * c, 1.0);
    Ok(())
}

/// Flip the sign of the `init` component only:
/// `(I - 2 |init><init|) |state>`. This is the reflection above negated
/// globally; composing it into the search iterate orients the iterate's
/// rotation so its eigenphases are exactly the doubled estimation angle.
pub fn flip_init_component(state: &mut QuantumState, init: &QuantumState) -> Result<()> {
    state.check_layout(init)?;
    let c = kernels::inner_product(&init.amps, &state.amps);
    kernels::combine_reflect(&mut state.amps, &init.amps, 2.0 * c, -1.0);
    Ok(())
}

/// Flip the sign of every ancilla-1 amplitude (the phase oracle marking
/// wrong answers).
pub fn apply_ancilla_phase_flip(state: &mut QuantumState) {
    kernels::phase_flip_ancilla_one(&mut state.amps);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::layout::DEFAULT_MEMORY_CAP;
    use crate::sample::{Label, LabeledPoint};
    use approx::assert_abs_diff_eq;

    fn sample_of(n: usize) -> LabeledSample {
        LabeledSample::new(
            (0..n)
                .map(|i| LabeledPoint::new(vec![i as f64], Label::Plus))
                .collect(),
        )
        .unwrap()
    }

    fn layout_for(n: usize, t: usize) -> RegisterLayout {
        RegisterLayout::new(n, t, 0, DEFAULT_MEMORY_CAP).unwrap()
    }

    #[test]
    fn initial_state_single_point() {
        let s = prepare_initial(&sample_of(1), layout_for(1, 1)).unwrap();
        assert_abs_diff_eq!(s.amplitude(0, 0, 0, 0).re, 1.0, epsilon = 0.0);
        assert_abs_diff_eq!(s.norm_sqr(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn initial_state_uniform_over_four() {
        let s = prepare_initial(&sample_of(4), layout_for(4, 2)).unwrap();
        for x in 0..4 {
            assert_abs_diff_eq!(s.amplitude(0, x, 0, 0).re, 0.5, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(s.norm_sqr(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn initial_state_non_power_of_two() {
        let s = prepare_initial(&sample_of(3), layout_for(3, 1)).unwrap();
        let expect = 1.0 / 3.0f64.sqrt();
        for x in 0..3 {
            assert_abs_diff_eq!(s.amplitude(0, x, 0, 0).re, expect, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(s.norm_sqr(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn memory_cap_blocks_preparation() {
        assert!(RegisterLayout::new(64, 20, 6, 1 << 26).is_err());
    }

    #[test]
    fn reflection_fixes_init_and_negates_orthogonal() {
        let init = prepare_initial(&sample_of(2), layout_for(2, 1)).unwrap();
        let mut same = init.clone();
        reflect_about_init(&mut same, &init).unwrap();
        for (a, b) in same.amplitudes().iter().zip(init.amplitudes()) {
            assert_abs_diff_eq!((a - b).norm(), 0.0, epsilon = 1e-12);
        }

        // A state supported on ancilla 1 is orthogonal to init.
        let mut perp = QuantumState::zeroed(init.layout());
        let idx = init.layout().index(0, 1, 1, 1);
        perp.amplitudes_mut()[idx] = Complex64::new(1.0, 0.0);
        let mut reflected = perp.clone();
        reflect_about_init(&mut reflected, &init).unwrap();
        for (a, b) in reflected.amplitudes().iter().zip(perp.amplitudes()) {
            assert_abs_diff_eq!((a + b).norm(), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn ancilla_probability_reads_odd_amplitudes() {
        let layout = layout_for(2, 1);
        let mut s = QuantumState::zeroed(layout);
        s.amplitudes_mut()[layout.index(0, 0, 0, 1)] = Complex64::new(0.6, 0.0);
        s.amplitudes_mut()[layout.index(0, 1, 1, 0)] = Complex64::new(0.0, 0.8);
        assert_abs_diff_eq!(s.ancilla_one_probability(), 0.36, epsilon = 1e-12);
    }
}
