use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hook::ProgressHook;
use crate::linalg::{intertwiner_basis, Echelon, Field, Matrix};

use super::algebra::ExplicitAlgebra;

/// A left module over an [`ExplicitAlgebra`]: one matrix per basis
/// element, acting on column vectors.
#[derive(Clone, Debug)]
pub struct ExplicitModule<F: Field> {
    algebra: Arc<ExplicitAlgebra<F>>,
    dim: usize,
    action: Vec<Matrix<F>>,
}

/// A linear map between module spaces, stored as a
/// `target_dim x source_dim` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap<F: Field> {
    matrix: Matrix<F>,
}

impl<F: Field> ModuleMap<F> {
    pub fn new(matrix: Matrix<F>) -> Self {
        ModuleMap { matrix }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source_dim()
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &Self) -> Result<Self> {
        Ok(ModuleMap {
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    /// Whether `f act_source(b) = act_target(b) f` for every basis element.
    pub fn intertwines(&self, source: &ExplicitModule<F>, target: &ExplicitModule<F>) -> Result<bool> {
        source.check_same_algebra(target)?;
        for (a, b) in source.action.iter().zip(&target.action) {
            if self.matrix.mul(a)? != b.mul(&self.matrix)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl<F: Field> ExplicitModule<F> {
    pub fn new(algebra: &Arc<ExplicitAlgebra<F>>, dim: usize, action: Vec<Matrix<F>>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("action matrices must be {dim}x{dim}")));
        }
        Ok(ExplicitModule {
            algebra: algebra.clone(),
            dim,
            action,
        })
    }

    /// The faithful space the algebra was built on.
    pub fn natural(algebra: &Arc<ExplicitAlgebra<F>>) -> Self {
        ExplicitModule {
            algebra: algebra.clone(),
            dim: algebra.space_dim(),
            action: algebra.basis().to_vec(),
        }
    }

    /// The algebra acting on itself by left multiplication.
    pub fn regular(algebra: &Arc<ExplicitAlgebra<F>>) -> Self {
        let n = algebra.dim();
        let f = algebra.field();
        let action = (0..n)
            .map(|i| {
                let mut m = Matrix::zeros(f, n, n);
                for j in 0..n {
                    for (k, c) in algebra.structure_constants(i, j).iter().enumerate() {
                        m.set(k, j, c.clone());
                    }
                }
                m
            })
            .collect();
        ExplicitModule {
            algebra: algebra.clone(),
            dim: n,
            action,
        }
    }

    pub fn zero(algebra: &Arc<ExplicitAlgebra<F>>) -> Self {
        let f = algebra.field();
        ExplicitModule {
            algebra: algebra.clone(),
            dim: 0,
            action: vec![Matrix::zeros(f, 0, 0); algebra.dim()],
        }
    }

    pub fn algebra(&self) -> &Arc<ExplicitAlgebra<F>> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, basis_index: usize) -> &Matrix<F> {
        &self.action[basis_index]
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    fn generator_actions(&self) -> Vec<Matrix<F>> {
        self.algebra.generators().iter().map(|&g| self.action[g].clone()).collect()
    }

    pub(crate) fn check_same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra.id() != other.algebra.id() {
            return Err(Error::ParamMismatch("modules over different algebras".into()));
        }
        Ok(())
    }

    /// Whether the action matrices respect the structure constants and the
    /// unit acts as the identity.
    pub fn validate(&self) -> Result<bool> {
        let a = &self.algebra;
        let unit = a
            .unit()
            .iter()
            .zip(&self.action)
            .fold(Matrix::zeros(self.field(), self.dim, self.dim), |mut acc, (c, m)| {
                acc.add_scaled(c, m);
                acc
            });
        if unit != Matrix::identity(self.field(), self.dim) {
            return Ok(false);
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action[i].mul(&self.action[j])?;
                let mut rhs = Matrix::zeros(self.field(), self.dim, self.dim);
                for (c, m) in a.structure_constants(i, j).iter().zip(&self.action) {
                    rhs.add_scaled(c, m);
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_same_algebra(other)?;
        Ok(ExplicitModule {
            algebra: self.algebra.clone(),
            dim: self.dim + other.dim,
            action: self.action.iter().zip(&other.action).map(|(a, b)| a.block_diag(b)).collect(),
        })
    }

    /// `self ⊕ ... ⊕ self` with `copies` summands.
    pub fn power(&self, copies: usize) -> Self {
        let mut out = ExplicitModule::zero(&self.algebra);
        for _ in 0..copies {
            out = out.direct_sum(self).expect("same algebra");
        }
        out
    }

    /// The smallest submodule containing `seeds`, with its inclusion.
    pub fn cyclic_submodule(&self, seeds: &[Vec<F::Elem>]) -> Result<(Self, ModuleMap<F>)> {
        if seeds.iter().any(|s| s.len() != self.dim) {
            return Err(Error::DimensionMismatch(format!(
                "seed vectors must have length {}",
                self.dim
            )));
        }
        let gens = self.generator_actions();
        let mut span = Echelon::new(self.field(), self.dim);
        let mut frontier = Vec::new();
        for s in seeds {
            if span.insert(s) {
                frontier.push(s.clone());
            }
        }
        while let Some(v) = frontier.pop() {
            for g in &gens {
                let w = g.mul_vec(&v)?;
                if span.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        self.restrict(&span)
    }

    /// Standard basis vectors generating the module, chosen greedily.
    pub fn generating_set(&self) -> Result<Vec<Vec<F::Elem>>> {
        let f = self.field();
        let gens = self.generator_actions();
        let mut span = Echelon::new(f, self.dim);
        let mut chosen = Vec::new();
        for i in 0..self.dim {
            if span.dim() == self.dim {
                break;
            }
            let mut e = vec![f.zero(); self.dim];
            e[i] = f.one();
            if !span.insert(&e) {
                continue;
            }
            chosen.push(e.clone());
            let mut frontier = vec![e];
            while let Some(v) = frontier.pop() {
                for g in &gens {
                    let w = g.mul_vec(&v)?;
                    if span.insert(&w) {
                        frontier.push(w);
                    }
                }
            }
        }
        Ok(chosen)
    }

    fn restrict(&self, span: &Echelon<F>) -> Result<(Self, ModuleMap<F>)> {
        let f = self.field();
        let k = span.dim();
        let inclusion = Matrix::from_columns(f, self.dim, span.rows());
        let action = self
            .action
            .iter()
            .map(|a| {
                let cols = span
                    .rows()
                    .iter()
                    .map(|v| {
                        span.coordinates(&a.mul_vec(v)?).ok_or_else(|| {
                            Error::Construction("subspace is not stable under the action".into())
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(f, k, &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((
            ExplicitModule {
                algebra: self.algebra.clone(),
                dim: k,
                action,
            },
            ModuleMap::new(inclusion),
        ))
    }
}

/// Basis of `Hom_A(m, n)`, solved against the algebra generators only.
pub fn hom_space<F: Field>(
    m: &ExplicitModule<F>,
    n: &ExplicitModule<F>,
    hook: &dyn ProgressHook,
) -> Result<Vec<ModuleMap<F>>> {
    m.check_same_algebra(n)?;
    Ok(intertwiner_basis(
        m.field(),
        m.dim,
        n.dim,
        &m.generator_actions(),
        &n.generator_actions(),
        hook,
    )?
    .into_iter()
    .map(ModuleMap::new)
    .collect())
}

/// `target / image(f)` with the induced actions, and the projection onto
/// it. The quotient basis is the set of coordinates that are not pivots of
/// the image.
pub fn cokernel<F: Field>(
    f: &ModuleMap<F>,
    target: &ExplicitModule<F>,
) -> Result<(ExplicitModule<F>, ModuleMap<F>)> {
    if f.target_dim() != target.dim {
        return Err(Error::DimensionMismatch("map does not land in the target".into()));
    }
    let field = target.field();
    let mut image = Echelon::new(field, target.dim);
    for j in 0..f.source_dim() {
        image.insert(&f.matrix.column(j));
    }
    let mut is_pivot = vec![false; target.dim];
    for &p in image.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..target.dim).filter(|&c| !is_pivot[c]).collect();
    let project = |v: &[F::Elem]| -> Vec<F::Elem> {
        let r = image.reduce(v);
        free.iter().map(|&c| r[c].clone()).collect()
    };
    let k = free.len();
    for g in target.algebra.generators() {
        for w in image.rows() {
            let moved = target.action[*g].mul_vec(w)?;
            if project(&moved).iter().any(|x| !field.is_zero(x)) {
                return Err(Error::Construction(
                    "image is not a submodule; the induced action is undefined".into(),
                ));
            }
        }
    }
    let action = target
        .action
        .iter()
        .map(|a| {
            let cols = free
                .iter()
                .map(|&c| Ok(project(&a.column(c))))
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(field, k, &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut projection = Matrix::zeros(field, k, target.dim);
    for c in 0..target.dim {
        let mut e = vec![field.zero(); target.dim];
        e[c] = field.one();
        for (r, x) in project(&e).into_iter().enumerate() {
            projection.set(r, c, x);
        }
    }
    Ok((
        ExplicitModule {
            algebra: target.algebra.clone(),
            dim: k,
            action,
        },
        ModuleMap::new(projection),
    ))
}
