//! Bit-packed linear algebra over GF(2).

use std::collections::HashMap;

/// A vector over GF(2), packed 64 bits per word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)] }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the highest set bit.
    fn leading(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * 64 + 63 - w.leading_zeros() as usize)
    }
}

/// Rank of a set of row vectors of equal length.
pub fn rank(rows: impl IntoIterator<Item = BitRow>) -> usize {
    let mut pivots: HashMap<usize, BitRow> = HashMap::new();
    for mut row in rows {
        while let Some(lead) = row.leading() {
            match pivots.get(&lead) {
                Some(p) => row.xor_assign(p),
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Row with the given positions set (repeated positions cancel).
pub fn row_from(len: usize, ones: impl IntoIterator<Item = usize>) -> BitRow {
    let mut r = BitRow::zeros(len);
    for i in ones {
        r.flip(i);
    }
    r
}
