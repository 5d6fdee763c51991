//! Counter-based randomness.
//!
//! Branch bits are drawn from a stateless generator keyed by
//! `(run seed, trial, point index, iteration)`. Each key maps to one uniform
//! deviate, so draws are reproducible and independent of evaluation order —
//! points can be processed in any order (or in parallel) without changing
//! the outcome.

/// SplitMix64 finaliser.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Uniform deviate in [0, 1) from the top 53 bits of a hash.
#[inline]
pub fn unit_f64(bits: u64) -> f64 {
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// The deviate assigned to `(seed, trial, point, iteration)`.
///
/// Trainers use `trial = 0`; Monte Carlo drivers spread trials over the
/// second key.
#[inline]
pub fn draw(seed: u64, trial: u64, point: u64, iteration: u64) -> f64 {
    let mut h = mix64(seed);
    h = mix64(h ^ trial);
    h = mix64(h ^ point);
    h = mix64(h ^ iteration);
    unit_f64(h)
}
