use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hook::{checkpoint, ProgressHook};
use crate::linalg::{canonical_basis, Echelon, Field, Matrix};

static NEXT_ID: AtomicU64 = AtomicU64::new(0);

/// A sparse row-major copy of a square matrix, used for the many basis
/// products needed by the structure constants.
#[derive(Clone, Debug)]
struct SparseRows<E> {
    rows: Vec<Vec<(usize, E)>>,
}

impl<E: Clone> SparseRows<E> {
    fn from_matrix<F: Field<Elem = E>>(m: &Matrix<F>) -> Self {
        let f = m.field();
        SparseRows {
            rows: (0..m.rows())
                .map(|i| {
                    m.row(i)
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !f.is_zero(x))
                        .map(|(j, x)| (j, x.clone()))
                        .collect()
                })
                .collect(),
        }
    }
}

/// A finite-dimensional algebra given by matrices acting faithfully on
/// `F^n`. The basis is in reduced echelon form for the row-major
/// flattening, so the coordinates of a member are its entries at the
/// pivot positions.
#[derive(Debug)]
pub struct ExplicitAlgebra<F: Field> {
    id: u64,
    field: F,
    space_dim: usize,
    basis: Vec<Matrix<F>>,
    sparse: Vec<SparseRows<F::Elem>>,
    pivots: Vec<usize>,
    structure: Vec<Vec<Vec<F::Elem>>>,
    unit: Vec<F::Elem>,
    generators: Vec<usize>,
}

impl<F: Field> ExplicitAlgebra<F> {
    /// The algebra spanned by `matrices`, which must already be closed under
    /// multiplication and contain the identity.
    pub fn from_matrices(
        field: &F,
        space_dim: usize,
        matrices: &[Matrix<F>],
        hook: &dyn ProgressHook,
    ) -> Result<Arc<Self>> {
        if matrices.iter().any(|m| m.rows() != space_dim || m.cols() != space_dim) {
            return Err(Error::DimensionMismatch(format!(
                "algebra elements must be {space_dim}x{space_dim}"
            )));
        }
        let flat: Vec<Vec<F::Elem>> = matrices.iter().map(|m| m.as_slice().to_vec()).collect();
        let basis = canonical_basis(field, space_dim, space_dim, &flat);
        let pivots: Vec<usize> = basis
            .iter()
            .map(|b| b.as_slice().iter().position(|x| !field.is_zero(x)).expect("nonzero basis"))
            .collect();
        let sparse: Vec<_> = basis.iter().map(SparseRows::from_matrix).collect();
        let mut algebra = ExplicitAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            field: field.clone(),
            space_dim,
            basis,
            sparse,
            pivots,
            structure: Vec::new(),
            unit: Vec::new(),
            generators: Vec::new(),
        };
        let n = algebra.dim();
        let mut structure = Vec::with_capacity(n);
        for i in 0..n {
            checkpoint(hook, "structure-constants", i, n)?;
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let product = algebra.basis_product(i, j);
                let coords = algebra.coordinates_of_flat(&product).ok_or_else(|| {
                    Error::Construction(format!(
                        "product of basis elements {i} and {j} leaves the span"
                    ))
                })?;
                row.push(coords);
            }
            structure.push(row);
        }
        algebra.structure = structure;
        algebra.unit = algebra
            .coordinates(&Matrix::identity(field, space_dim))
            .ok_or_else(|| Error::Construction("the identity is not in the span".into()))?;
        algebra.generators = algebra.greedy_generators();
        Ok(Arc::new(algebra))
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Size of the matrices in [`Self::basis`].
    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn basis(&self) -> &[Matrix<F>] {
        &self.basis
    }

    /// Coordinates of `b_i b_j`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.structure[i][j]
    }

    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    /// Indices of basis elements generating the algebra (together with the
    /// unit).
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.space_dim;
        let mut out = vec![f.zero(); n * n];
        for (r, row) in self.sparse[i].rows.iter().enumerate() {
            for (k, a) in row {
                for (c, b) in &self.sparse[j].rows[*k] {
                    let slot = &mut out[r * n + c];
                    *slot = f.add(slot, &f.mul(a, b));
                }
            }
        }
        out
    }

    fn coordinates_of_flat(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = &self.field;
        let coords: Vec<F::Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coords.iter().zip(&self.sparse) {
            if f.is_zero(c) {
                continue;
            }
            for (r, row) in b.rows.iter().enumerate() {
                for (col, x) in row {
                    let slot = &mut residual[r * self.space_dim + col];
                    *slot = f.sub(slot, &f.mul(c, x));
                }
            }
        }
        residual.iter().all(|x| f.is_zero(x)).then_some(coords)
    }

    /// Coordinates of a matrix in the basis, if it lies in the algebra.
    pub fn coordinates(&self, m: &Matrix<F>) -> Option<Vec<F::Elem>> {
        if m.rows() != self.space_dim || m.cols() != self.space_dim {
            return None;
        }
        self.coordinates_of_flat(m.as_slice())
    }

    pub fn element(&self, coords: &[F::Elem]) -> Matrix<F> {
        let mut m = Matrix::zeros(&self.field, self.space_dim, self.space_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            m.add_scaled(c, b);
        }
        m
    }

    /// Product of two elements given in coordinates.
    pub fn multiply(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (slot, c) in out.iter_mut().zip(&self.structure[i][j]) {
                    if !f.is_zero(c) {
                        *slot = f.add(slot, &f.mul(&xy, c));
                    }
                }
            }
        }
        out
    }

    fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Dimension of the subalgebra generated by the unit and the given
    /// basis elements.
    pub fn generated_dim(&self, gens: &[usize]) -> usize {
        self.generated_span(gens).dim()
    }

    fn generated_span(&self, gens: &[usize]) -> Echelon<F> {
        let mut span = Echelon::new(&self.field, self.dim());
        span.insert(&self.unit);
        let mut frontier = vec![self.unit.clone()];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.multiply(&x, &self.basis_vector(g));
                if span.insert(&y) {
                    frontier.push(y);
                }
            }
        }
        span
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.generated_span(&gens);
        for i in 0..self.dim() {
            if span.dim() == self.dim() {
                break;
            }
            if !span.contains(&self.basis_vector(i)) {
                gens.push(i);
                span = self.generated_span(&gens);
            }
        }
        gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hook::Silent;
    use crate::linalg::{Rationals, GF5};

    fn upper_triangular(n: usize) -> Vec<Matrix<crate::linalg::PrimeField>> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut m = Matrix::zeros(&GF5, n, n);
                m.set(i, j, 1);
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn triangular_algebra() {
        let a = ExplicitAlgebra::from_matrices(&GF5, 3, &upper_triangular(3), &Silent).unwrap();
        assert_eq!(a.dim(), 6);
        assert_eq!(a.element(a.unit()), Matrix::identity(&GF5, 3));
        assert_eq!(a.generated_dim(a.generators()), 6);
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = a.basis()[i].mul(&a.basis()[j]).unwrap();
                assert_eq!(a.element(a.structure_constants(i, j)), lhs);
            }
        }
    }

    #[test]
    fn closure_failure_is_an_error() {
        let f = Rationals;
        let id = Matrix::identity(&f, 2);
        let nil = Matrix::from_i64_rows(&f, &[vec![0, 1], vec![0, 0]]);
        let low = Matrix::from_i64_rows(&f, &[vec![0, 0], vec![1, 0]]);
        assert!(ExplicitAlgebra::from_matrices(&f, 2, &[id.clone(), nil.clone()], &Silent).is_ok());
        assert!(matches!(
            ExplicitAlgebra::from_matrices(&f, 2, &[id, nil, low], &Silent),
            Err(Error::Construction(_))
        ));
    }

    #[test]
    fn missing_unit_is_an_error() {
        let f = Rationals;
        let nil = Matrix::from_i64_rows(&f, &[vec![0, 1], vec![0, 0]]);
        assert!(ExplicitAlgebra::from_matrices(&f, 2, &[nil], &Silent).is_err());
    }
}
