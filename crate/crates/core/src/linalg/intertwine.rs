//! Solving `f A_g = B_g f` for all `g` simultaneously: homomorphism spaces
//! between matrix representations, and commutants as the special case
//! `A_g = B_g`.
//!
//! The unknown matrix splits into independent blocks along the connected
//! components of the supports of the `A_g` (columns of `f`) and of the
//! `B_g` (rows of `f`). Inside a block the constraints are imposed one
//! generator at a time, each step solving a small system in the
//! coordinates of the solutions found so far.

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::hook::{checkpoint, ProgressHook};

use super::{kernel_basis, rref, Field, Matrix};

fn components<F: Field>(n: usize, mats: &[&Matrix<F>]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::<usize>::new(n);
    for m in mats {
        let f = m.field();
        for i in 0..n {
            for (j, x) in m.row(i).iter().enumerate() {
                if i != j && !f.is_zero(x) {
                    uf.union(i, j);
                }
            }
        }
    }
    let labels = uf.into_labeling();
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &r) in labels.iter().enumerate() {
        by_root[r].push(i);
    }
    by_root.into_iter().filter(|c| !c.is_empty()).collect()
}

/// One block of unknowns `f[rows][cols]`, with the current solution basis
/// stored as flattened `rows.len() * cols.len()` vectors.
struct Block<'a> {
    rows: &'a [usize],
    cols: &'a [usize],
}

impl Block<'_> {
    fn len(&self) -> usize {
        self.rows.len() * self.cols.len()
    }

    /// `X A|cols - B|rows X` for the local matrix `X`.
    fn residual<F: Field>(&self, x: &[F::Elem], a: &Matrix<F>, b: &Matrix<F>) -> Vec<F::Elem> {
        let f = a.field();
        let (nr, nc) = (self.rows.len(), self.cols.len());
        let mut out = vec![f.zero(); nr * nc];
        for p in 0..nr {
            for (q, &k) in self.cols.iter().enumerate() {
                let xv = &x[p * nc + q];
                if f.is_zero(xv) {
                    continue;
                }
                for (jj, &j) in self.cols.iter().enumerate() {
                    let av = a.get(k, j);
                    if !f.is_zero(av) {
                        out[p * nc + jj] = f.add(&out[p * nc + jj], &f.mul(xv, av));
                    }
                }
            }
        }
        for (p, &i) in self.rows.iter().enumerate() {
            for (pp, &l) in self.rows.iter().enumerate() {
                let bv = b.get(i, l);
                if f.is_zero(bv) {
                    continue;
                }
                for q in 0..nc {
                    let xv = &x[pp * nc + q];
                    if !f.is_zero(xv) {
                        out[p * nc + q] = f.sub(&out[p * nc + q], &f.mul(bv, xv));
                    }
                }
            }
        }
        out
    }

    /// The full constraint matrix for one generator, one row per entry of
    /// the residual and one column per unknown.
    fn system<F: Field>(&self, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        let f = a.field();
        let (nr, nc) = (self.rows.len(), self.cols.len());
        let n = self.len();
        let mut sys = Matrix::zeros(f, n, n);
        for p in 0..nr {
            for (jj, &j) in self.cols.iter().enumerate() {
                let eq = p * nc + jj;
                for (q, &k) in self.cols.iter().enumerate() {
                    let av = a.get(k, j);
                    if !f.is_zero(av) {
                        let var = p * nc + q;
                        let cur = sys.get(eq, var).clone();
                        sys.set(eq, var, f.add(&cur, av));
                    }
                }
                let i = self.rows[p];
                for (pp, &l) in self.rows.iter().enumerate() {
                    let bv = b.get(i, l);
                    if !f.is_zero(bv) {
                        let var = pp * nc + jj;
                        let cur = sys.get(eq, var).clone();
                        sys.set(eq, var, f.sub(&cur, bv));
                    }
                }
            }
        }
        sys
    }

    fn solve<F: Field>(&self, src: &[Matrix<F>], dst: &[Matrix<F>]) -> Vec<Vec<F::Elem>> {
        let (a0, b0) = (&src[0], &dst[0]);
        let f = a0.field();
        let mut basis = kernel_basis(&self.system(a0, b0));
        for (a, b) in src.iter().zip(dst).skip(1) {
            if basis.is_empty() {
                break;
            }
            let cols: Vec<Vec<F::Elem>> = basis.iter().map(|x| self.residual(x, a, b)).collect();
            if cols.iter().all(|c| c.iter().all(|v| f.is_zero(v))) {
                continue;
            }
            let combos = kernel_basis(&Matrix::from_columns(f, self.len(), &cols));
            basis = combos
                .iter()
                .map(|c| {
                    let mut v = vec![f.zero(); self.len()];
                    for (coef, x) in c.iter().zip(&basis) {
                        if f.is_zero(coef) {
                            continue;
                        }
                        for (acc, y) in v.iter_mut().zip(x) {
                            if !f.is_zero(y) {
                                *acc = f.add(acc, &f.mul(coef, y));
                            }
                        }
                    }
                    v
                })
                .collect();
        }
        basis
    }
}

/// A basis of `{ f : f src[g] = dst[g] f for every g }`, where `f` is a
/// `dst_dim x src_dim` matrix. The basis is returned in reduced echelon
/// form with respect to the row-major flattening, so it is canonical.
pub fn intertwiner_basis<F: Field>(
    field: &F,
    src_dim: usize,
    dst_dim: usize,
    src: &[Matrix<F>],
    dst: &[Matrix<F>],
    hook: &dyn ProgressHook,
) -> Result<Vec<Matrix<F>>> {
    if src.len() != dst.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} source generators against {} target generators",
            src.len(),
            dst.len()
        )));
    }
    for (a, b) in src.iter().zip(dst) {
        if a.rows() != src_dim || a.cols() != src_dim || b.rows() != dst_dim || b.cols() != dst_dim {
            return Err(Error::DimensionMismatch(
                "generator matrices do not match the declared dimensions".into(),
            ));
        }
    }
    if src.is_empty() {
        let mut out = Vec::new();
        for i in 0..dst_dim {
            for j in 0..src_dim {
                let mut m = Matrix::zeros(field, dst_dim, src_dim);
                m.set(i, j, field.one());
                out.push(m);
            }
        }
        return Ok(out);
    }
    let row_blocks = components(dst_dim, &dst.iter().collect::<Vec<_>>());
    let col_blocks = components(src_dim, &src.iter().collect::<Vec<_>>());
    let total = row_blocks.len() * col_blocks.len();
    let mut flat: Vec<Vec<F::Elem>> = Vec::new();
    let mut step = 0;
    for rows in &row_blocks {
        for cols in &col_blocks {
            checkpoint(hook, "intertwiners", step, total)?;
            step += 1;
            let block = Block { rows, cols };
            for local in block.solve(src, dst) {
                let mut v = vec![field.zero(); dst_dim * src_dim];
                for (p, &i) in rows.iter().enumerate() {
                    for (q, &j) in cols.iter().enumerate() {
                        v[i * src_dim + j] = local[p * cols.len() + q].clone();
                    }
                }
                flat.push(v);
            }
        }
    }
    Ok(canonical_basis(field, dst_dim, src_dim, &flat))
}

/// Reduced echelon basis of the span of the given row-major flattenings.
pub fn canonical_basis<F: Field>(field: &F, rows: usize, cols: usize, flat: &[Vec<F::Elem>]) -> Vec<Matrix<F>> {
    if flat.is_empty() {
        return Vec::new();
    }
    let r = rref(&Matrix::from_rows(field, rows * cols, flat));
    (0..r.rank)
        .map(|k| Matrix::from_vec(field, rows, cols, r.matrix.row(k).to_vec()).expect("shape"))
        .collect()
}

/// `{ X : X g = g X for every g }` for square matrices of one size.
pub fn commutant<F: Field>(field: &F, n: usize, gens: &[Matrix<F>], hook: &dyn ProgressHook) -> Result<Vec<Matrix<F>>> {
    intertwiner_basis(field, n, n, gens, gens, hook)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hook::Silent;
    use crate::linalg::{PrimeField, Rationals, GF2, GF5};

    fn unit(n: usize, i: usize, j: usize) -> Matrix<PrimeField> {
        let mut m = Matrix::zeros(&GF5, n, n);
        m.set(i, j, 1);
        m
    }

    #[test]
    fn commutant_of_full_matrix_algebra_is_scalars() {
        let n = 3;
        let gens: Vec<_> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| unit(n, i, j))
            .collect();
        let c = commutant(&GF5, n, &gens, &Silent).unwrap();
        assert_eq!(c, vec![Matrix::identity(&GF5, n)]);
    }

    #[test]
    fn commutant_of_nothing_is_everything() {
        assert_eq!(commutant(&GF2, 3, &[], &Silent).unwrap().len(), 9);
    }

    #[test]
    fn commutant_of_diagonal_is_diagonal() {
        let f = Rationals;
        let d = Matrix::from_i64_rows(&f, &[vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]);
        let c = commutant(&f, 3, &[d], &Silent).unwrap();
        assert_eq!(c.len(), 1 + 4);
    }

    #[test]
    fn jordan_block_commutant_is_polynomials() {
        let f = GF5;
        let j = Matrix::from_i64_rows(&f, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        let c = commutant(&f, 3, std::slice::from_ref(&j), &Silent).unwrap();
        assert_eq!(c.len(), 3);
        for x in &c {
            assert_eq!(x.mul(&j).unwrap(), j.mul(x).unwrap());
        }
    }

    #[test]
    fn homs_between_different_sizes() {
        // the trivial 1-dim module into the permutation module of C_2
        let f = GF2;
        let swap = Matrix::from_i64_rows(&f, &[vec![0, 1], vec![1, 0]]);
        let triv = Matrix::identity(&f, 1);
        let homs = intertwiner_basis(&f, 1, 2, std::slice::from_ref(&triv), std::slice::from_ref(&swap), &Silent).unwrap();
        assert_eq!(homs, vec![Matrix::from_i64_rows(&f, &[vec![1], vec![1]])]);
        let back = intertwiner_basis(&f, 2, 1, &[swap], &[triv], &Silent).unwrap();
        assert_eq!(back, vec![Matrix::from_i64_rows(&f, &[vec![1, 1]])]);
    }

    #[test]
    fn cancellation_is_honoured() {
        let token = crate::hook::CancelToken::new();
        token.cancel();
        let g = Matrix::identity(&GF2, 2);
        assert_eq!(
            commutant(&GF2, 2, &[g], &token),
            Err(Error::Cancelled)
        );
    }
}
