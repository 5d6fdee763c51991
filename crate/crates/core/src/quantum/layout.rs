//! Register layout of the simulated machine.

use crate::error::{BoostError, Result};

/// Default cap on the number of simulated amplitudes.
pub const DEFAULT_MEMORY_CAP: usize = 1 << 26;

/// The four registers of one training iteration, flattened into a dense
/// amplitude index.
///
/// From most to least significant: phase readout (`phase_bits` qubits),
/// data index (a plain index over `n_data` points — not padded to a power
/// of two, so the uniform superposition stays exact), branch string
/// (`branch_bits` qubits, bit `s_i` of the string at index bit `i`), and
/// one ancilla qubit at bit 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegisterLayout {
    pub n_data: usize,
    pub branch_bits: usize,
    pub phase_bits: usize,
}

impl RegisterLayout {
    /// A layout validated against an amplitude budget.
    pub fn new(
        n_data: usize,
        branch_bits: usize,
        phase_bits: usize,
        memory_cap: usize,
    ) -> Result<Self> {
        if n_data == 0 {
            return Err(BoostError::EmptySample);
        }
        let required = (n_data as u128)
            .checked_mul(1u128 << (branch_bits + 1 + phase_bits))
            .ok_or(BoostError::MemoryCapExceeded {
                required: u128::MAX,
                cap: memory_cap,
            })?;
        if required > memory_cap as u128 {
            return Err(BoostError::MemoryCapExceeded {
                required,
                cap: memory_cap,
            });
        }
        Ok(Self {
            n_data,
            branch_bits,
            phase_bits,
        })
    }

    /// Total amplitude count.
    pub fn dim(&self) -> usize {
        self.n_data << (self.branch_bits + 1 + self.phase_bits)
    }

    /// Amplitudes per phase-register value (data, branch and ancilla).
    pub fn system_dim(&self) -> usize {
        self.n_data << (self.branch_bits + 1)
    }

    /// Flat index of the basis state `|phase> |x> |branch> |ancilla>`.
    pub fn index(&self, phase: usize, x: usize, branch: usize, ancilla: usize) -> usize {
        debug_assert!(phase < (1 << self.phase_bits));
        debug_assert!(x < self.n_data);
        debug_assert!(branch < (1 << self.branch_bits));
        debug_assert!(ancilla < 2);
        ((phase * self.n_data + x) << (self.branch_bits + 1)) | (branch << 1) | ancilla
    }

    pub fn ancilla_of(&self, i: usize) -> usize {
        i & 1
    }

    pub fn branch_of(&self, i: usize) -> usize {
        (i >> 1) & ((1 << self.branch_bits) - 1)
    }

    pub fn data_of(&self, i: usize) -> usize {
        (i >> (self.branch_bits + 1)) % self.n_data
    }

    pub fn phase_of(&self, i: usize) -> usize {
        (i >> (self.branch_bits + 1)) / self.n_data
    }

    /// The same layout with the phase register removed.
    pub fn without_phase(&self) -> Self {
        Self {
            phase_bits: 0,
            ..*self
        }
    }
}
