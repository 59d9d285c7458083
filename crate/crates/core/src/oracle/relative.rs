use serde::{Deserialize, Serialize};

use crate::domdim::ExtendedNat;
use crate::error::{Error, Result};
use crate::hook::{checkpoint, ProgressHook};
use crate::linalg::{solve, Echelon, Field, Matrix};

use super::add::AddBasis;
use super::module::{cokernel, hom_space, ExplicitModule, ModuleMap};

/// Result of measuring `Q-domdim M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum DomdimOutcome {
    Exact(usize),
    /// The cap was reached with every approximation still injective.
    AtLeast(usize),
    Infinite,
}

impl DomdimOutcome {
    /// `None` for [`DomdimOutcome::AtLeast`], which determines no value.
    pub fn as_extended(self) -> Option<ExtendedNat> {
        match self {
            DomdimOutcome::Exact(n) => Some(ExtendedNat::Finite(n as i64)),
            DomdimOutcome::Infinite => Some(ExtendedNat::Infinite),
            DomdimOutcome::AtLeast(_) => None,
        }
    }
}

/// A left `add(Q)`-approximation `M -> X_1 ⊕ ... ⊕ X_k`, each `X_l` one
/// of `parts`.
#[derive(Clone, Debug)]
pub struct Approximation<F: Field> {
    pub map: ModuleMap<F>,
    pub target: ExplicitModule<F>,
    pub parts: Vec<ExplicitModule<F>>,
    /// `(index into parts, component M -> X_l)`, stacked to form `map`.
    pub components: Vec<(usize, ModuleMap<F>)>,
}

impl<F: Field> Approximation<F> {
    fn assemble(
        m: &ExplicitModule<F>,
        parts: Vec<ExplicitModule<F>>,
        components: Vec<(usize, ModuleMap<F>)>,
    ) -> Result<Self> {
        let mut matrix = Matrix::zeros(m.field(), 0, m.dim());
        let mut target = ExplicitModule::zero(m.algebra());
        for (part, h) in &components {
            matrix = matrix.vstack(h.matrix())?;
            target = target.direct_sum(&parts[*part])?;
        }
        Ok(Approximation {
            map: ModuleMap::new(matrix),
            target,
            parts,
            components,
        })
    }

    /// Number of summands in the target.
    pub fn copies(&self) -> usize {
        self.components.len()
    }
}

/// Every basis element of `Hom(M, Q)`, stacked: `M -> Q^{dim Hom(M, Q)}`.
pub fn universal_left_approximation<F: Field>(
    m: &ExplicitModule<F>,
    q: &ExplicitModule<F>,
    hook: &dyn ProgressHook,
) -> Result<Approximation<F>> {
    let homs = hom_space(m, q, hook)?;
    Approximation::assemble(m, vec![q.clone()], homs.into_iter().map(|h| (0, h)).collect())
}

/// A left approximation by the indecomposable summands of `Q`. For each
/// summand `Q_i`, components are a complement in `Hom(M, Q_i)` of the
/// maps that factor through radical maps `Q_j -> Q_i`; this is the
/// minimal approximation whenever `add_q` is an exact decomposition. The
/// factorisation property is then checked and, if needed, restored by
/// adding further components.
pub fn minimal_left_approximation<F: Field>(
    m: &ExplicitModule<F>,
    add_q: &AddBasis<F>,
    hook: &dyn ProgressHook,
) -> Result<Approximation<F>> {
    m.check_same_algebra(add_q.source())?;
    let field = m.field();
    let summands = add_q.summands();
    let homs: Vec<Vec<ModuleMap<F>>> = summands
        .iter()
        .map(|s| hom_space(m, s, hook))
        .collect::<Result<_>>()?;
    let mut components = Vec::new();
    for (i, target) in summands.iter().enumerate() {
        let mut span = Echelon::new(field, target.dim() * m.dim());
        for (j, hs) in homs.iter().enumerate() {
            let through: &[ModuleMap<F>] = if i == j { add_q.radical(i) } else { add_q.homs(j, i) };
            for h in hs {
                for e in through {
                    span.insert(e.after(h)?.matrix().as_slice());
                }
            }
        }
        for h in &homs[i] {
            if span.insert(h.matrix().as_slice()) {
                components.push((i, h.clone()));
            }
        }
    }
    for (i, target) in summands.iter().enumerate() {
        let mut reached = Echelon::new(field, target.dim() * m.dim());
        for (j, h) in &components {
            for e in add_q.homs(*j, i) {
                reached.insert(e.after(h)?.matrix().as_slice());
            }
        }
        for h in &homs[i] {
            if !reached.contains(h.matrix().as_slice()) {
                for e in add_q.homs(i, i) {
                    reached.insert(e.after(h)?.matrix().as_slice());
                }
                components.push((i, h.clone()));
            }
        }
    }
    components.sort_by_key(|(i, _)| *i);
    Approximation::assemble(m, summands.to_vec(), components)
}

/// Whether `f: M -> X` factors through `approx`.
pub fn factors_through<F: Field>(
    approx: &Approximation<F>,
    f: &ModuleMap<F>,
    x: &ExplicitModule<F>,
    hook: &dyn ProgressHook,
) -> Result<bool> {
    let field = x.field();
    let mut span = Echelon::new(field, f.matrix().rows() * f.matrix().cols());
    for (l, part) in approx.parts.iter().enumerate() {
        let maps = hom_space(part, x, hook)?;
        for (_, h) in approx.components.iter().filter(|(p, _)| *p == l) {
            for e in &maps {
                span.insert(e.after(h)?.matrix().as_slice());
            }
        }
    }
    Ok(span.contains(f.matrix().as_slice()))
}

/// Whether `approx` has a left inverse, solved inside
/// `⊕ Hom(X_l, M)`. Both sides are module maps, so `r ∘ approx = 1` is
/// only imposed on a generating set of `M`.
pub fn is_split_mono<F: Field>(
    approx: &Approximation<F>,
    m: &ExplicitModule<F>,
    hook: &dyn ProgressHook,
) -> Result<bool> {
    let field = m.field();
    if m.dim() == 0 {
        return Ok(true);
    }
    if !approx.map.is_injective() {
        return Ok(false);
    }
    let generators = m.generating_set()?;
    let gen_matrix = Matrix::from_columns(field, m.dim(), &generators);
    let mut columns = Vec::new();
    for (l, part) in approx.parts.iter().enumerate() {
        let back = hom_space(part, m, hook)?;
        for (_, h) in approx.components.iter().filter(|(p, _)| *p == l) {
            let on_generators = h.matrix().mul(&gen_matrix)?;
            for g in &back {
                columns.push(g.matrix().mul(&on_generators)?.as_slice().to_vec());
            }
        }
    }
    if columns.is_empty() {
        return Ok(false);
    }
    let system = Matrix::from_columns(field, m.dim() * generators.len(), &columns);
    Ok(solve(&system, gen_matrix.as_slice())?.is_some())
}

/// One step of the coresolution: the module approximated and the number
/// of indecomposable summands of `Q` used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoresolutionStep {
    pub module_dim: usize,
    pub copies: usize,
    pub target_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomdimRun {
    pub outcome: DomdimOutcome,
    pub steps: Vec<CoresolutionStep>,
}

/// `Q-domdim M`, measured by iterating left `add(Q)`-approximations and
/// cokernels. A non-injective approximation stops the count, a split one
/// means the current cokernel lies in `add(Q)`.
pub fn relative_domdim<F: Field>(
    m: &ExplicitModule<F>,
    q: &ExplicitModule<F>,
    cap: usize,
    hook: &dyn ProgressHook,
) -> Result<DomdimOutcome> {
    Ok(relative_domdim_run(m, q, cap, hook)?.outcome)
}

pub fn relative_domdim_run<F: Field>(
    m: &ExplicitModule<F>,
    q: &ExplicitModule<F>,
    cap: usize,
    hook: &dyn ProgressHook,
) -> Result<DomdimRun> {
    m.check_same_algebra(q)?;
    relative_domdim_with_basis(m, &AddBasis::new(q, hook)?, cap, hook)
}

/// As [`relative_domdim_run`], reusing a decomposition of `Q`.
pub fn relative_domdim_with_basis<F: Field>(
    m: &ExplicitModule<F>,
    add_q: &AddBasis<F>,
    cap: usize,
    hook: &dyn ProgressHook,
) -> Result<DomdimRun> {
    if cap == 0 {
        return Err(Error::Usage("the cap must be at least 1".into()));
    }
    m.check_same_algebra(add_q.source())?;
    let mut current = m.clone();
    let mut steps = Vec::new();
    let mut n = 0;
    let outcome = loop {
        checkpoint(hook, "coresolution", n, cap)?;
        if n == cap {
            break DomdimOutcome::AtLeast(cap);
        }
        let approx = minimal_left_approximation(&current, add_q, hook)?;
        steps.push(CoresolutionStep {
            module_dim: current.dim(),
            copies: approx.copies(),
            target_dim: approx.target.dim(),
        });
        if !approx.map.is_injective() {
            break DomdimOutcome::Exact(n);
        }
        if is_split_mono(&approx, &current, hook)? {
            break DomdimOutcome::Infinite;
        }
        current = cokernel(&approx.map, &approx.target)?.0;
        n += 1;
    };
    Ok(DomdimRun { outcome, steps })
}
