//! Sequential kernel implementations.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::Fft;

use super::{rotate_pair, rotate_pair_inverse, REDUCE_CHUNK};
use crate::error::{BoostError, Result};

/// Tolerance on `weight / c_hat` above 1 before a populated branch is
/// treated as violating the rotation bound.
pub(crate) const RATIO_TOL: f64 = 1e-12;

/// `<a|b>` with conjugation on `a`, reduced in fixed-size chunks.
pub fn inner_product(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    debug_assert_eq!(a.len(), b.len());
    let partials: Vec<Complex64> = a
        .chunks(REDUCE_CHUNK)
        .zip(b.chunks(REDUCE_CHUNK))
        .map(chunk_dot)
        .collect();
    partials.into_iter().sum()
}

/// Squared 2-norm, reduced in fixed-size chunks.
pub fn norm_sqr(a: &[Complex64]) -> f64 {
    let partials: Vec<f64> = a.chunks(REDUCE_CHUNK).map(chunk_norm).collect();
    partials.into_iter().sum()
}

/// One superposed query pass: rotate every amplitude pair split by branch
/// bit `bit` (1-based) with the per-point coefficients `(sqrt(1-q), sqrt(q))`.
pub fn oracle_pass(
    amps: &mut [Complex64],
    bit: usize,
    branch_bits: usize,
    n_data: usize,
    q_one: &[f64],
    inverse: bool,
) {
    let chunk = 1usize << (bit + 1);
    let half = chunk >> 1;
    let x_shift = branch_bits - bit;
    for (ci, block) in amps.chunks_mut(chunk).enumerate() {
        let x = (ci >> x_shift) % n_data;
        oracle_block(block, half, q_one[x], inverse);
    }
}

/// Conditional ancilla rotation against the weight table: on pairs whose
/// last branch bit is 1, rotate the ancilla by the angle encoding
/// `weight / c_hat`. Pairs carrying no amplitude are skipped, which keeps
/// unpopulated branches (whose weights may exceed the normaliser) inert.
pub fn rotation_pass(
    amps: &mut [Complex64],
    branch_bits: usize,
    prefix_weights: &[f64],
    c_hat: f64,
    inverse: bool,
) -> Result<()> {
    let prefix_mask = prefix_weights.len() - 1;
    let cond_shift = branch_bits - 1;
    for (ci, pair) in amps.chunks_mut(2).enumerate() {
        rotation_block(
            pair,
            ci,
            cond_shift,
            prefix_mask,
            prefix_weights,
            c_hat,
            inverse,
        )?;
    }
    Ok(())
}

/// Flip the sign of every ancilla-1 amplitude.
pub fn phase_flip_ancilla_one(amps: &mut [Complex64]) {
    for pair in amps.chunks_mut(2) {
        pair[1] = -pair[1];
    }
}

/// `amps <- sign * (two_c * init - amps)` elementwise; `sign = 1.0` is the
/// reflection about `init`, `sign = -1.0` flips the `init` component.
pub fn combine_reflect(amps: &mut [Complex64], init: &[Complex64], two_c: Complex64, sign: f64) {
    debug_assert_eq!(amps.len(), init.len());
    for (a, &u) in amps.iter_mut().zip(init) {
        *a = (two_c * u - *a) * sign;
    }
}

/// Ordered map over `0..n`; trials and sweep cells run through this.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// FFT along the phase axis of a `2^m x d_sys` register (phase-major
/// blocks), scaling by `1/sqrt(2^m)`; this is the inverse Fourier transform
/// that finishes phase estimation.
pub fn fft_phase_axis(full: &mut [Complex64], d_sys: usize, fft: &Arc<dyn Fft<f64>>) {
    let m_dim = full.len() / d_sys;
    let mut colmaj = transpose_into_columns(full, d_sys, m_dim);
    for row in colmaj.chunks_mut(m_dim) {
        fft.process(row);
    }
    scatter_columns(full, &colmaj, d_sys, m_dim);
}

// -- shared block bodies -------------------------------------------------

pub(crate) fn chunk_dot((ca, cb): (&[Complex64], &[Complex64])) -> Complex64 {
    ca.iter()
        .zip(cb)
        .map(|(x, y)| x.conj() * y)
        .fold(Complex64::new(0.0, 0.0), |acc, v| acc + v)
}

pub(crate) fn chunk_norm(chunk: &[Complex64]) -> f64 {
    chunk.iter().map(|x| x.norm_sqr()).sum()
}

#[inline]
pub(crate) fn oracle_block(block: &mut [Complex64], half: usize, q: f64, inverse: bool) {
    let s = q.sqrt();
    let c = (1.0 - q).sqrt();
    let (lo, hi) = block.split_at_mut(half);
    for (a0, a1) in lo.iter_mut().zip(hi.iter_mut()) {
        let (n0, n1) = if inverse {
            rotate_pair_inverse(*a0, *a1, c, s)
        } else {
            rotate_pair(*a0, *a1, c, s)
        };
        *a0 = n0;
        *a1 = n1;
    }
}

#[inline]
pub(crate) fn rotation_block(
    pair: &mut [Complex64],
    ci: usize,
    cond_shift: usize,
    prefix_mask: usize,
    prefix_weights: &[f64],
    c_hat: f64,
    inverse: bool,
) -> Result<()> {
    if (ci >> cond_shift) & 1 == 0 {
        return Ok(());
    }
    let zero = pair[0].norm_sqr() == 0.0 && pair[1].norm_sqr() == 0.0;
    if zero {
        return Ok(());
    }
    let w = prefix_weights[ci & prefix_mask];
    let ratio = w / c_hat;
    if ratio > 1.0 + RATIO_TOL {
        return Err(BoostError::WeightExceedsNormaliser { weight: w, c_hat });
    }
    let ratio = ratio.clamp(0.0, 1.0);
    let s = ratio.sqrt();
    let c = (1.0 - ratio).sqrt();
    let (n0, n1) = if inverse {
        rotate_pair_inverse(pair[0], pair[1], c, s)
    } else {
        rotate_pair(pair[0], pair[1], c, s)
    };
    pair[0] = n0;
    pair[1] = n1;
    Ok(())
}

pub(crate) fn transpose_into_columns(
    full: &[Complex64],
    d_sys: usize,
    m_dim: usize,
) -> Vec<Complex64> {
    let mut colmaj = vec![Complex64::new(0.0, 0.0); full.len()];
    for (j, col) in colmaj.chunks_mut(m_dim).enumerate() {
        for (p, slot) in col.iter_mut().enumerate() {
            *slot = full[p * d_sys + j];
        }
    }
    colmaj
}

pub(crate) fn scatter_columns(
    full: &mut [Complex64],
    colmaj: &[Complex64],
    d_sys: usize,
    m_dim: usize,
) {
    let scale = 1.0 / (m_dim as f64).sqrt();
    for (p, block) in full.chunks_mut(d_sys).enumerate() {
        for (j, slot) in block.iter_mut().enumerate() {
            *slot = colmaj[j * m_dim + p] * scale;
        }
    }
}
