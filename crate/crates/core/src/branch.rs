//! Branch strings: the record of right/wrong bits a point accumulates.

/// An ordered bit string `s_1 .. s_t`; bit `s_i` is 1 when classifier `i`
/// answered wrong on the point.
///
/// Branch strings convert to and from compact indices with `s_1` in the
/// least significant bit. The same convention orders the branch register of
/// the statevector simulation, so classical tables and quantum amplitudes
/// index branches identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BranchString {
    bits: Vec<u8>,
}

impl BranchString {
    /// The empty string (before the first iteration).
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_bits(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1));
        Self { bits }
    }

    /// Decode `index` into a string of length `len`, `s_1` = LSB.
    pub fn from_index(index: usize, len: usize) -> Self {
        assert!(len >= usize::BITS as usize || index < (1usize << len));
        let bits = (0..len).map(|i| ((index >> i) & 1) as u8).collect();
        Self { bits }
    }

    pub fn push(&mut self, bit: u8) {
        assert!(bit <= 1);
        self.bits.push(bit);
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Encode to an index with `s_1` in the least significant bit.
    pub fn index(&self) -> usize {
        self.bits
            .iter()
            .enumerate()
            .fold(0usize, |acc, (i, &b)| acc | ((b as usize) << i))
    }
}

impl std::fmt::Display for BranchString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        for idx in 0..16 {
            let s = BranchString::from_index(idx, 4);
            assert_eq!(s.len(), 4);
            assert_eq!(s.index(), idx);
        }
    }

    #[test]
    fn first_bit_is_least_significant() {
        let s = BranchString::from_bits(vec![1, 0, 0]);
        assert_eq!(s.index(), 1);
        let s = BranchString::from_bits(vec![0, 0, 1]);
        assert_eq!(s.index(), 4);
    }

    #[test]
    fn display_orders_bits_as_written() {
        let s = BranchString::from_bits(vec![1, 1, 0]);
        assert_eq!(s.to_string(), "110");
    }
}
