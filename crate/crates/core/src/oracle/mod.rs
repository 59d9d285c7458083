//! A definition-level oracle for relative dominant dimension over explicit
//! matrix algebras.
//!
//! The q-Schur algebra is built as the commutant of the Hecke action on
//! tensor space, modules are vector spaces with one action matrix per
//! basis element, and `Q-domdim M` is measured by iterating left
//! `add(Q)`-approximations and taking cokernels.

mod add;
mod algebra;
mod module;
mod relative;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use add::AddBasis;
pub use algebra::ExplicitAlgebra;
pub use module::{cokernel, hom_space, ExplicitModule, ModuleMap};
pub use relative::{
    factors_through, is_split_mono, minimal_left_approximation, relative_domdim, relative_domdim_run,
    relative_domdim_with_basis, universal_left_approximation, Approximation, CoresolutionStep, DomdimOutcome,
    DomdimRun,
};

use crate::combinatorics::Weight;
use crate::error::{Error, Result};
use crate::hecke::HeckeParams;
use crate::hook::ProgressHook;
use crate::linalg::Field;
use crate::tensor::schur_algebra_basis;

/// Sign convention for the q-antisymmetric vector generating standard
/// modules: `e1⊗e2 - c·e2⊗e1` with `c = u` or `c = u^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StandardConvention {
    MinusU,
    MinusUInverse,
}

impl fmt::Display for StandardConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StandardConvention::MinusU => "e12 - u e21",
            StandardConvention::MinusUInverse => "e12 - u^-1 e21",
        })
    }
}

/// `S_q(2,d)` with its natural module `V^{⊗d}` and `End_S(V^{⊗d})`, the
/// common data of every oracle computation at one degree.
pub struct SchurOracle<F: Field> {
    params: HeckeParams<F>,
    algebra: Arc<ExplicitAlgebra<F>>,
    tensor: ExplicitModule<F>,
    end_tensor: Vec<ModuleMap<F>>,
    add_tensor: AddBasis<F>,
}

impl<F: Field> SchurOracle<F> {
    pub fn new(params: &HeckeParams<F>, hook: &dyn ProgressHook) -> Result<Self> {
        let d = params.degree();
        let basis = schur_algebra_basis(params, hook)?;
        let algebra = ExplicitAlgebra::from_matrices(params.field(), 1 << d, &basis, hook)?;
        let tensor = ExplicitModule::natural(&algebra);
        let end_tensor = hom_space(&tensor, &tensor, hook)?;
        let add_tensor = AddBasis::new(&tensor, hook)?;
        Ok(SchurOracle {
            params: params.clone(),
            algebra,
            tensor,
            end_tensor,
            add_tensor,
        })
    }

    pub fn params(&self) -> &HeckeParams<F> {
        &self.params
    }

    pub fn algebra(&self) -> &Arc<ExplicitAlgebra<F>> {
        &self.algebra
    }

    /// `V^{⊗d}` as a module over the Schur algebra.
    pub fn tensor_space(&self) -> &ExplicitModule<F> {
        &self.tensor
    }

    pub fn end_tensor_space(&self) -> &[ModuleMap<F>] {
        &self.end_tensor
    }

    /// The indecomposable summands of `V^{⊗d}`.
    pub fn tensor_summands(&self) -> &AddBasis<F> {
        &self.add_tensor
    }

    pub fn regular_module(&self) -> ExplicitModule<F> {
        ExplicitModule::regular(&self.algebra)
    }

    /// Cap used when none is given: `4d`.
    pub fn default_cap(&self) -> usize {
        4 * self.params.degree().max(1)
    }

    /// `V^{⊗d}-domdim M`.
    pub fn domdim(&self, m: &ExplicitModule<F>, cap: usize, hook: &dyn ProgressHook) -> Result<DomdimRun> {
        relative_domdim_with_basis(m, &self.add_tensor, cap, hook)
    }

    fn generator(&self, m: usize, convention: StandardConvention) -> Vec<F::Elem> {
        let f = self.params.field();
        let c = match convention {
            StandardConvention::MinusU => self.params.u().clone(),
            StandardConvention::MinusUInverse => self.params.u_inv().clone(),
        };
        let z = vec![f.zero(), f.one(), f.neg(&c), f.zero()];
        let e1 = vec![f.one(), f.zero()];
        let mut v = vec![f.one()];
        for _ in 0..(self.params.degree() - m) / 2 {
            v = kronecker(f, &v, &z);
        }
        for _ in 0..m {
            v = kronecker(f, &v, &e1);
        }
        v
    }

    /// `Δ(m)`: the submodule of `V^{⊗d}` generated by
    /// `z^{⊗(d-m)/2} ⊗ e1^{⊗m}`, validated to have dimension `m + 1`.
    /// Both sign conventions for `z` are tried; the one that passes is
    /// returned alongside the module.
    pub fn standard_module(&self, m: Weight) -> Result<(ExplicitModule<F>, StandardConvention)> {
        let d = self.params.degree();
        if !m.is_admissible(d) {
            return Err(Error::Usage(format!("weight {m} is not admissible for degree {d}")));
        }
        for convention in [StandardConvention::MinusU, StandardConvention::MinusUInverse] {
            let seed = self.generator(m.0, convention);
            let (module, _) = self.tensor.cyclic_submodule(&[seed])?;
            if module.dim() == m.0 + 1 {
                return Ok((module, convention));
            }
        }
        Err(Error::Construction(format!(
            "no sign convention gives Δ({m}) of dimension {}",
            m.0 + 1
        )))
    }

    /// `Δ(m)` together with its inclusion into `V^{⊗d}`.
    pub fn standard_inclusion(&self, m: Weight) -> Result<(ExplicitModule<F>, ModuleMap<F>, StandardConvention)> {
        let (_, convention) = self.standard_module(m)?;
        let seed = self.generator(m.0, convention);
        let (module, inclusion) = self.tensor.cyclic_submodule(&[seed])?;
        Ok((module, inclusion, convention))
    }

    /// `T(0) = Δ(0)` for even `d`.
    pub fn tilting_zero(&self) -> Result<ExplicitModule<F>> {
        if !self.params.degree().is_multiple_of(2) {
            return Err(Error::Usage("T(0) needs an even degree".into()));
        }
        Ok(self.standard_module(Weight(0))?.0)
    }
}

fn kronecker<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().flat_map(|x| b.iter().map(move |y| f.mul(x, y))).collect()
}
