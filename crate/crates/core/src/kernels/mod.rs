//! Data-parallel inner loops with sequential fallbacks.
//!
//! Every kernel exists twice with an identical signature: [`seq`] is always
//! compiled, [`par`] only with the `parallel` feature. The rest of the crate
//! calls through the re-export below, so the feature flag switches the
//! execution strategy without touching call sites.
//!
//! Reductions are chunked identically in both flavours (fixed
//! [`REDUCE_CHUNK`], partials combined in chunk order), so the two paths
//! return bit-identical floating-point results and reports do not depend on
//! the build.

use num_complex::Complex64;

/// Chunk length used for deterministic reductions and parallel splits.
pub const REDUCE_CHUNK: usize = 4096;

pub mod seq;

#[cfg(feature = "parallel")]
pub mod par;

#[cfg(feature = "parallel")]
pub use par::*;

#[cfg(not(feature = "parallel"))]
pub use seq::*;

/// A 2x2 real rotation applied to an amplitude pair: the images of the
/// basis states are the columns `(c, s)` and `(-s, c)`.
#[inline]
pub fn rotate_pair(a0: Complex64, a1: Complex64, c: f64, s: f64) -> (Complex64, Complex64) {
    (a0 * c - a1 * s, a0 * s + a1 * c)
}

/// The transpose (inverse) of [`rotate_pair`].
#[inline]
pub fn rotate_pair_inverse(a0: Complex64, a1: Complex64, c: f64, s: f64) -> (Complex64, Complex64) {
    (a0 * c + a1 * s, a1 * c - a0 * s)
}
