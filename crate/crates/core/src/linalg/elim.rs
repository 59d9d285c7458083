//! Gauss-Jordan elimination kernels.

use super::field::{Field, PrimeField};
use super::matrix::Matrix;

/// Field-generic Gauss-Jordan elimination. Pivot = first nonzero entry in
/// column order.
pub(crate) fn generic_row_reduce<F: Field>(m: &mut Matrix<F>) -> Vec<usize> {
    let f = m.field().clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(r) = (rank..rows).find(|&r| !f.is_zero(m.get(r, c))) else {
            continue;
        };
        m.swap_rows(r, rank);
        let inv = f.inv(m.get(rank, c)).expect("pivot is nonzero");
        for x in m.row_mut(rank)[c..].iter_mut() {
            *x = f.mul(&inv, x);
        }
        let pivot_row: Vec<(usize, F::Elem)> = m.row(rank)[c..]
            .iter()
            .enumerate()
            .filter(|(_, x)| !f.is_zero(x))
            .map(|(k, x)| (c + k, x.clone()))
            .collect();
        for i in 0..rows {
            if i == rank {
                continue;
            }
            let a = m.get(i, c).clone();
            if f.is_zero(&a) {
                continue;
            }
            let row = m.row_mut(i);
            for (k, v) in &pivot_row {
                row[*k] = f.sub(&row[*k], &f.mul(&a, v));
            }
        }
        pivots.push(c);
        rank += 1;
    }
    pivots
}

/// Gauss-Jordan over GF(p), p odd, on raw `u32` residues. Pivot rows are
/// scanned once for their nonzero entries, which keeps the sparse systems
/// produced by intertwiner equations cheap.
pub(crate) fn prime_row_reduce(m: &mut Matrix<PrimeField>) -> Vec<usize> {
    let f = *m.field();
    let p = f.modulus();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut rank = 0;
    let mut pivot_row: Vec<(usize, u32)> = Vec::new();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(r) = (rank..rows).find(|&r| *m.get(r, c) != 0) else {
            continue;
        };
        m.swap_rows(r, rank);
        let inv = f.inv(m.get(rank, c)).expect("pivot is nonzero");
        pivot_row.clear();
        for (k, x) in m.row_mut(rank)[c..].iter_mut().enumerate() {
            if *x != 0 {
                *x = *x * inv % p;
                pivot_row.push((c + k, *x));
            }
        }
        for i in 0..rows {
            if i == rank {
                continue;
            }
            let a = *m.get(i, c);
            if a == 0 {
                continue;
            }
            let factor = p - a;
            let row = m.row_mut(i);
            for &(k, v) in &pivot_row {
                row[k] = (row[k] + factor * v) % p;
            }
        }
        pivots.push(c);
        rank += 1;
    }
    pivots
}
