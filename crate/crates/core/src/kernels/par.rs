//! Rayon kernel implementations.
//!
//! Same contracts as [`super::seq`]; reductions use the same chunking so
//! results are bit-identical to the sequential flavour.

use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::Fft;

use super::seq::{
    chunk_dot, chunk_norm, oracle_block, rotation_block, scatter_columns, transpose_into_columns,
};
use super::REDUCE_CHUNK;
use crate::error::Result;

/// `<a|b>` with conjugation on `a`; chunk partials are combined in order.
pub fn inner_product(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    debug_assert_eq!(a.len(), b.len());
    let partials: Vec<Complex64> = a
        .par_chunks(REDUCE_CHUNK)
        .zip(b.par_chunks(REDUCE_CHUNK))
        .map(chunk_dot)
        .collect();
    partials.into_iter().sum()
}

/// Squared 2-norm with ordered chunk reduction.
pub fn norm_sqr(a: &[Complex64]) -> f64 {
    let partials: Vec<f64> = a.par_chunks(REDUCE_CHUNK).map(chunk_norm).collect();
    partials.into_iter().sum()
}

/// See [`super::seq::oracle_pass`].
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
    amps.par_chunks_mut(chunk)
        .enumerate()
        .for_each(|(ci, block)| {
            let x = (ci >> x_shift) % n_data;
            oracle_block(block, half, q_one[x], inverse);
        });
}

/// See [`super::seq::rotation_pass`].
pub fn rotation_pass(
    amps: &mut [Complex64],
    branch_bits: usize,
    prefix_weights: &[f64],
    c_hat: f64,
    inverse: bool,
) -> Result<()> {
    let prefix_mask = prefix_weights.len() - 1;
    let cond_shift = branch_bits - 1;
    amps.par_chunks_mut(2)
        .enumerate()
        .try_for_each(|(ci, pair)| {
            rotation_block(
                pair,
                ci,
                cond_shift,
                prefix_mask,
                prefix_weights,
                c_hat,
                inverse,
            )
        })
}

/// See [`super::seq::phase_flip_ancilla_one`].
pub fn phase_flip_ancilla_one(amps: &mut [Complex64]) {
    amps.par_chunks_mut(2).for_each(|pair| pair[1] = -pair[1]);
}

/// See [`super::seq::combine_reflect`].
pub fn combine_reflect(amps: &mut [Complex64], init: &[Complex64], two_c: Complex64, sign: f64) {
    debug_assert_eq!(amps.len(), init.len());
    amps.par_iter_mut()
        .zip(init.par_iter())
        .for_each(|(a, &u)| *a = (two_c * u - *a) * sign);
}

/// Ordered parallel map over `0..n`.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// See [`super::seq::fft_phase_axis`]; columns transform in parallel.
pub fn fft_phase_axis(full: &mut [Complex64], d_sys: usize, fft: &Arc<dyn Fft<f64>>) {
    let m_dim = full.len() / d_sys;
    let mut colmaj = transpose_into_columns(full, d_sys, m_dim);
    colmaj
        .par_chunks_mut(m_dim)
        .for_each(|row| fft.process(row));
    scatter_columns(full, &colmaj, d_sys, m_dim);
}
