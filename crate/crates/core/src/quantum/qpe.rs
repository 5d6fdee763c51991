//! Phase estimation over the search iterate.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{BoostError, Result};
use crate::kernels;

use super::layout::RegisterLayout;
use super::ops::{grover_iterate, GroverComposition};
use super::oracle::QueryCounter;
use super::state::QuantumState;

/// Outcome of one phase-estimation run.
#[derive(Debug, Clone)]
pub struct PhaseEstimate {
    /// Width of the phase register.
    pub phase_bits: usize,
    /// Measurement distribution over the `2^m` register values.
    pub distribution: Vec<f64>,
    /// Most likely register value after folding the conjugate eigenphase
    /// pair (in `0 ..= 2^(m-1)`).
    pub ml_index: usize,
    /// Folded probability mass on `ml_index`.
    pub ml_probability: f64,
    /// Estimation angle decoded from `ml_index`, in `[0, pi/2]`.
    pub theta: f64,
    /// Iterate applications consumed: `2^m - 1`.
    pub iterate_applications: u64,
}

impl PhaseEstimate {
    /// Draw a register value from the distribution with one uniform
    /// deviate, fold it, and decode the angle.
    pub fn sample_theta(&self, u: f64) -> (usize, f64) {
        let mut acc = 0.0;
        let mut drawn = self.distribution.len() - 1;
        for (k, &p) in self.distribution.iter().enumerate() {
            acc += p;
            if u < acc {
                drawn = k;
                break;
            }
        }
        let folded = fold_phase_index(drawn, self.phase_bits);
        (folded, theta_from_index(folded, self.phase_bits))
    }
}

/// Fold a register value onto `0 ..= 2^(m-1)`: `k` and `2^m - k` encode the
/// conjugate eigenphases `+-2 theta` and decode to the same angle.
pub fn fold_phase_index(k: usize, m: usize) -> usize {
    let full = 1usize << m;
    let half = full >> 1;
    if k <= half {
        k
    } else {
        full - k
    }
}

/// Decode a folded register value: `theta = pi k / 2^m`.
pub fn theta_from_index(folded: usize, m: usize) -> f64 {
    std::f64::consts::PI * folded as f64 / (1usize << m) as f64
}

/// Textbook phase estimation of the iterate's eigenphase pair `+-2 theta`
/// on the state `prepared = G_t |init>`.
///
/// Runs the full register: `m` phase qubits in uniform superposition
/// control powers of the iterate (built by `2^m - 1` sequential
/// applications), followed by the inverse Fourier transform on the phase
/// register. Returns the exact measurement distribution and the
/// maximum-likelihood angle; queries accumulate through `counter`.
pub fn phase_estimate_theta(
    g: &GroverComposition,
    prepared: &QuantumState,
    init: &QuantumState,
    m: usize,
    memory_cap: usize,
    counter: &mut QueryCounter,
) -> Result<PhaseEstimate> {
    if m == 0 {
        return Err(BoostError::ArgumentOutOfRange {
            name: "phase_bits",
            value: 0.0,
            expected: "[1, inf)",
        });
    }
    let sys_layout = prepared.layout();
    if sys_layout.phase_bits != 0 {
        return Err(BoostError::Precondition(
            "prepared state must not already carry a phase register".into(),
        ));
    }
    let full_layout = RegisterLayout::new(sys_layout.n_data, sys_layout.branch_bits, m, memory_cap)?;
    let d = sys_layout.dim();
    let m_dim = 1usize << m;

    // Controlled powers: phase value p receives W_G^p, built incrementally,
    // with the 1/sqrt(2^m) of the Hadamard layer folded into each block.
    let mut full = QuantumState::zeroed(full_layout);
    let scale = Complex64::new(1.0 / (m_dim as f64).sqrt(), 0.0);
    let mut running = prepared.clone();
    for p in 0..m_dim {
        let block = &mut full.amplitudes_mut()[p * d..(p + 1) * d];
        for (slot, &a) in block.iter_mut().zip(running.amplitudes()) {
            *slot = a * scale;
        }
        if p + 1 < m_dim {
            grover_iterate(&mut running, g, init, counter)?;
        }
    }

    // Inverse Fourier transform along the phase axis.
    let fft = FftPlanner::new().plan_fft_forward(m_dim);
    kernels::fft_phase_axis(full.amplitudes_mut(), d, &fft);

    let distribution = full.phase_distribution();
    let mut folded = vec![0.0; (m_dim >> 1) + 1];
    for (k, &p) in distribution.iter().enumerate() {
        folded[fold_phase_index(k, m)] += p;
    }
    let (ml_index, ml_probability) =
        folded
            .iter()
            .enumerate()
            .fold((0usize, f64::MIN), |(bi, bp), (i, &p)| {
                if p > bp {
                    (i, p)
                } else {
                    (bi, bp)
                }
            });
    Ok(PhaseEstimate {
        phase_bits: m,
        distribution,
        ml_index,
        ml_probability,
        theta: theta_from_index(ml_index, m),
        iterate_applications: (m_dim - 1) as u64,
    })
}

trait IntoPair {
    fn into(self) -> (usize, f64);
}

impl IntoPair for (usize, f64) {
    fn into(self) -> (usize, f64) {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ErrorTable, WeightFunctionTable};
    use crate::math::DEFAULT_BRANCH_CAP;
    use crate::quantum::layout::DEFAULT_MEMORY_CAP;
    use crate::quantum::oracle::QuantumQueryOracle;
    use crate::quantum::state::prepare_initial;
    use crate::sample::{Label, LabeledPoint, LabeledSample};
    use approx::assert_abs_diff_eq;

    fn sample_of(n: usize) -> LabeledSample {
        LabeledSample::new(
            (0..n)
                .map(|i| LabeledPoint::new(vec![i as f64], Label::Plus))
                .collect(),
        )
        .unwrap()
    }

    fn one_round_setup(
        q_row: Vec<f64>,
    ) -> (GroverComposition, QuantumState, QuantumState) {
        let n = q_row.len();
        let sample = sample_of(n);
        let layout = RegisterLayout::new(n, 1, 0, DEFAULT_MEMORY_CAP).unwrap();
        let init = prepare_initial(&sample, layout).unwrap();
        let errors = ErrorTable::from_rows(vec![q_row.clone()]);
        let weights = WeightFunctionTable::build(&[], &errors, DEFAULT_BRANCH_CAP).unwrap();
        let oracles = vec![QuantumQueryOracle::from_error_row(q_row)];
        let g = GroverComposition::new(oracles, weights).unwrap();
        let mut counter = QueryCounter::new();
        let mut prepared = init.clone();
        g.apply(&mut prepared, &mut counter).unwrap();
        (g, prepared, init)
    }

    #[test]
    fn folding_pairs_conjugate_values() {
        assert_eq!(fold_phase_index(0, 3), 0);
        assert_eq!(fold_phase_index(2, 3), 2);
        assert_eq!(fold_phase_index(6, 3), 2);
        assert_eq!(fold_phase_index(4, 3), 4);
    }

    #[test]
    fn dyadic_angle_reads_exactly() {
        // Half the weighted branches wrong: theta = pi/4, eigenphases
        // +-pi/2. With m = 3 the register reads 2 and 6 only, each from one
        // eigencomponent; folded they carry the whole mass.
        let (g, prepared, init) = one_round_setup(vec![1.0, 0.0]);
        let mut counter = QueryCounter::new();
        let est =
            phase_estimate_theta(&g, &prepared, &init, 3, DEFAULT_MEMORY_CAP, &mut counter).unwrap();
        assert_eq!(est.iterate_applications, 7);
        assert_eq!(counter.total(), 2 * 7);
        assert_abs_diff_eq!(est.distribution[2] + est.distribution[6], 1.0, epsilon = 1e-10);
        assert_eq!(est.ml_index, 2);
        assert_abs_diff_eq!(est.ml_probability, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(est.theta, std::f64::consts::FRAC_PI_4, epsilon = 1e-12);
    }

    #[test]
    fn no_errors_reads_the_half_turn_phase() {
        // No branch is ever wrong: the prepared state is an eigenvector
        // with eigenvalue -1 (theta = pi/2), so the register reads the
        // single dyadic value 2^(m-1) with certainty and the decoded error
        // rate is zero.
        let (g, prepared, init) = one_round_setup(vec![0.0, 0.0]);
        let mut counter = QueryCounter::new();
        let est =
            phase_estimate_theta(&g, &prepared, &init, 3, DEFAULT_MEMORY_CAP, &mut counter).unwrap();
        assert_abs_diff_eq!(est.distribution[4], 1.0, epsilon = 1e-10);
        assert_eq!(est.ml_index, 4);
        assert_abs_diff_eq!(est.theta, std::f64::consts::FRAC_PI_2, epsilon = 1e-12);
        let r_hat = g.c_hat() * est.theta.cos().powi(2);
        assert_abs_diff_eq!(r_hat, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn all_wrong_reads_phase_zero() {
        let (g, prepared, init) = one_round_setup(vec![1.0, 1.0]);
        let mut counter = QueryCounter::new();
        let est =
            phase_estimate_theta(&g, &prepared, &init, 3, DEFAULT_MEMORY_CAP, &mut counter).unwrap();
        assert_abs_diff_eq!(est.distribution[0], 1.0, epsilon = 1e-10);
        assert_eq!(est.ml_index, 0);
        let r_hat = g.c_hat() * est.theta.cos().powi(2);
        assert_abs_diff_eq!(r_hat, g.c_hat(), epsilon = 1e-12);
    }

    #[test]
    fn non_dyadic_angle_concentrates_on_neighbours() {
        // q = 0.3 everywhere: theta = arccos(sqrt(0.3)), not dyadic. The
        // two grid values bracketing the true phase carry at least 8/pi^2
        // of the mass overall, at least 4/pi^2 per eigencomponent.
        let q = 0.3;
        let (g, prepared, init) = one_round_setup(vec![q, q]);
        let m = 5;
        let mut counter = QueryCounter::new();
        let est =
            phase_estimate_theta(&g, &prepared, &init, m, DEFAULT_MEMORY_CAP, &mut counter).unwrap();
        let theta = (q as f64).sqrt().acos();
        let scaled = 2.0 * theta / (2.0 * std::f64::consts::PI) * (1 << m) as f64;
        let lo = scaled.floor() as usize;
        let hi = scaled.ceil() as usize;
        let plus_mass = est.distribution[lo] + est.distribution[hi];
        assert!(
            plus_mass >= 4.0 / std::f64::consts::PI.powi(2),
            "mass {plus_mass}"
        );
        let full = 1 << m;
        let minus_mass = est.distribution[full - hi] + est.distribution[full - lo];
        assert!(
            plus_mass + minus_mass >= 8.0 / std::f64::consts::PI.powi(2),
            "total {}",
            plus_mass + minus_mass
        );
        // The folded maximum-likelihood angle lands on a bracketing value.
        assert!(est.ml_index == lo || est.ml_index == hi);
    }

    #[test]
    fn sampling_follows_the_distribution() {
        let (g, prepared, init) = one_round_setup(vec![1.0, 0.0]);
        let mut counter = QueryCounter::new();
        let est =
            phase_estimate_theta(&g, &prepared, &init, 3, DEFAULT_MEMORY_CAP, &mut counter).unwrap();
        // Mass sits on 2 and 6 roughly evenly; both fold to 2.
        let (k_lo, theta_lo) = est.sample_theta(0.01);
        let (k_hi, theta_hi) = est.sample_theta(0.99);
        assert_eq!(k_lo, 2);
        assert_eq!(k_hi, 2);
        assert_abs_diff_eq!(theta_lo, std::f64::consts::FRAC_PI_4, epsilon = 1e-12);
        assert_abs_diff_eq!(theta_hi, std::f64::consts::FRAC_PI_4, epsilon = 1e-12);
    }
}
