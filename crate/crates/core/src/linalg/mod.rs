//! Exact linear algebra over GF(p) and the rationals.
//!
//! Everything here is dense. GF(2) matrices are eliminated on packed bit
//! rows; other prime fields use a `u32` kernel; the rationals use the
//! generic path on big fractions.

mod elim;
pub mod intertwine;
pub mod field;
pub mod gf2;
pub mod matrix;

pub use field::{Field, FieldScalar, FieldTag, PrimeField, Rationals, GF2, GF5};
pub use intertwine::{canonical_basis, commutant, intertwiner_basis};
pub use matrix::Matrix;

use crate::error::{Error, Result};

/// Reduced row-echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn rref<F: Field>(m: &Matrix<F>) -> Rref<F> {
    let mut r = m.clone();
    let pivots = m.field().row_reduce(&mut r);
    Rref {
        rank: pivots.len(),
        matrix: r,
        pivots,
    }
}

/// Basis of the null space `{x : m x = 0}`, one vector per free column.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F::Elem>> {
    let f = m.field();
    let Rref { matrix, pivots, .. } = rref(m);
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![f.zero(); m.cols()];
            v[free] = f.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(matrix.get(r, free));
            }
            v
        })
        .collect()
}

/// Some `x` with `m x = b`, or `None` when `b` is outside the column space.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has length {} but the matrix has {} rows",
            b.len(),
            m.rows()
        )));
    }
    let f = m.field();
    let aug = m.hstack(&Matrix::from_columns(f, m.rows(), &[b.to_vec()]))?;
    let Rref { matrix, pivots, .. } = rref(&aug);
    if pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = vec![f.zero(); m.cols()];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = matrix.get(r, m.cols()).clone();
    }
    Ok(Some(x))
}

/// An incrementally grown subspace of `F^n`, kept in fully reduced
/// echelon form so that the coordinates of a member vector are simply its
/// entries at the pivot positions.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    len: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, len: usize) -> Self {
        Echelon {
            field: field.clone(),
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection onto the span along the pivot coordinates.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        debug_assert_eq!(v.len(), self.len);
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let a = v[p].clone();
            if f.is_zero(&a) {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&a, y));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Coordinates with respect to [`Self::rows`], if `v` lies in the span.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Add `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("nonzero");
        for x in r.iter_mut() {
            *x = f.mul(&inv, x);
        }
        for row in self.rows.iter_mut() {
            let a = row[p].clone();
            if f.is_zero(&a) {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&r) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&a, y));
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}
