//! Bit vectors over F2, packed into 64-bit words.
//!
//! All linear algebra in this crate reduces to XOR and popcount on these
//! vectors. Dot products are computed as `popcount(a & b) mod 2`, which is
//! O(n/64) per call.

use std::fmt;

const WORD_BITS: usize = 64;

/// A fixed-length vector over F2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    /// All-zero vector of length `len`.
    pub fn zeros(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    /// Unit vector e_i of length `len`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut b = Bits::zeros(len);
        b.set(i, true);
        b
    }

    /// Build from an iterator of bools, one per index.
    pub fn from_bools<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let bools: Vec<bool> = iter.into_iter().collect();
        let mut b = Bits::zeros(bools.len());
        for (i, &v) in bools.iter().enumerate() {
            b.set(i, v);
        }
        b
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// In-place XOR with another vector of the same length.
    pub fn xor_assign(&mut self, other: &Bits) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    /// Inner product over F2: popcount(self AND other) mod 2.
    pub fn dot(&self, other: &Bits) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            & 1
            == 1
    }

    /// Bitwise AND with another vector of the same length.
    pub fn and(&self, other: &Bits) -> Bits {
        assert_eq!(self.len, other.len, "length mismatch in and");
        Bits {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Number of set bits shared with `other` (popcount of the AND).
    pub fn and_count(&self, other: &Bits) -> usize {
        assert_eq!(self.len, other.len, "length mismatch in and_count");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    /// Keep only the first `new_len` bits.
    pub fn truncated(&self, new_len: usize) -> Bits {
        assert!(new_len <= self.len);
        let mut b = Bits::zeros(new_len);
        for i in 0..new_len {
            if self.get(i) {
                b.set(i, true);
            }
        }
        b
    }

    /// Render as a bit string, index 0 (qubit 1) first.
    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    /// Parse a bit string, index 0 (qubit 1) first.
    pub fn from_bitstring(s: &str) -> Option<Bits> {
        let mut b = Bits::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => b.set(i, true),
                _ => return None,
            }
        }
        Some(b)
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits({})", self.to_bitstring())
    }
}
