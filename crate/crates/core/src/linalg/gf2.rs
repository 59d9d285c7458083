//! GF(2) elimination on packed bit rows.

use super::field::PrimeField;
use super::matrix::Matrix;

/// Rows packed into machine words, bit `j % 64` of word `j / 64` holding
/// column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            words,
            bits: vec![0; rows * words],
        }
    }

    pub fn from_matrix(m: &Matrix<PrimeField>) -> Self {
        debug_assert_eq!(m.field().modulus(), 2);
        let mut b = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for (j, x) in m.row(i).iter().enumerate() {
                if *x != 0 {
                    b.set(i, j);
                }
            }
        }
        b
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for w in 0..self.words {
                self.bits.swap(a * self.words + w, b * self.words + w);
            }
        }
    }

    /// `row[dst] ^= row[src]`, touching words from `from_word` on.
    fn xor_row(&mut self, dst: usize, src: usize, from_word: usize) {
        let w = self.words;
        for k in from_word..w {
            let s = self.bits[src * w + k];
            self.bits[dst * w + k] ^= s;
        }
    }

    /// Gauss-Jordan elimination in place; returns pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(r) = (rank..self.rows).find(|&r| self.get(r, c)) else {
                continue;
            };
            self.swap_rows(r, rank);
            for i in 0..self.rows {
                if i != rank && self.get(i, c) {
                    self.xor_row(i, rank, c / 64);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }
}

pub(crate) fn row_reduce_gf2(m: &mut Matrix<PrimeField>) -> Vec<usize> {
    let mut b = BitMatrix::from_matrix(m);
    let pivots = b.row_reduce();
    for i in 0..m.rows() {
        let row = m.row_mut(i);
        for (j, x) in row.iter_mut().enumerate() {
            *x = b.get(i, j) as u32;
        }
    }
    pivots
}
