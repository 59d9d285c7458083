use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::hook::{checkpoint, ProgressHook};
use crate::linalg::{kernel_basis, Echelon, Field, FieldTag, Matrix};

use super::module::{hom_space, ExplicitModule, ModuleMap};

/// Random endomorphisms tried before a module is declared indecomposable.
const SPLIT_ATTEMPTS: usize = 48;
const RNG_SEED: u64 = 0x5eed;

/// `add(Q)` presented by pairwise non-isomorphic indecomposable summands
/// `Q_1, ..., Q_r` of `Q`, the homomorphisms between them and the radical
/// of each `End(Q_i)`.
///
/// Summands are found by Fitting decompositions of random endomorphisms
/// from a fixed seed. A summand that fails to split, or two isomorphic
/// summands that fail to be identified, only cost minimality: the
/// approximations built from this data are checked and completed before
/// use.
#[derive(Clone, Debug)]
pub struct AddBasis<F: Field> {
    source: ExplicitModule<F>,
    summands: Vec<ExplicitModule<F>>,
    multiplicities: Vec<usize>,
    /// `homs[j][i]` is a basis of `Hom(Q_j, Q_i)`.
    homs: Vec<Vec<Vec<ModuleMap<F>>>>,
    radicals: Vec<Vec<ModuleMap<F>>>,
}

fn random_combination<F: Field>(maps: &[ModuleMap<F>], rng: &mut ChaCha8Rng) -> Matrix<F> {
    let m = maps[0].matrix();
    let f = m.field();
    let mut out = Matrix::zeros(f, m.rows(), m.cols());
    for map in maps {
        out.add_scaled(&f.from_i64(rng.gen_range(-8..=8)), map.matrix());
    }
    out
}

/// `x^(2^k)` with `2^k >= dim`, which has the Fitting kernel and image.
fn stable_power<F: Field>(x: &Matrix<F>) -> Result<Matrix<F>> {
    let mut y = x.clone();
    let mut reach = 1;
    while reach < x.rows() {
        y = y.mul(&y)?;
        reach *= 2;
    }
    Ok(y)
}

fn is_nilpotent<F: Field>(x: &Matrix<F>) -> Result<bool> {
    Ok(stable_power(x)?.is_zero())
}

/// Candidates for the single eigenvalue of an endomorphism of an
/// indecomposable module.
fn eigenvalue_candidates<F: Field>(x: &Matrix<F>) -> Vec<F::Elem> {
    let f = x.field();
    match f.tag() {
        FieldTag::Gf(p) if p <= 1024 => (0..p as i64).map(|c| f.from_i64(c)).collect(),
        FieldTag::Gf(_) => vec![f.zero()],
        FieldTag::Rational => {
            let trace = (0..x.rows()).fold(f.zero(), |acc, i| f.add(&acc, x.get(i, i)));
            match f.inv(&f.from_i64(x.rows() as i64)) {
                Some(inv) => vec![f.mul(&trace, &inv)],
                None => vec![f.zero()],
            }
        }
    }
}

/// The Fitting splitting of `m` along some endomorphism, as two bases of
/// complementary submodules, if one is found.
fn split_once<F: Field>(
    m: &ExplicitModule<F>,
    rng: &mut ChaCha8Rng,
    hook: &dyn ProgressHook,
) -> Result<Option<(Vec<Vec<F::Elem>>, Vec<Vec<F::Elem>>)>> {
    let end = hom_space(m, m, hook)?;
    if end.len() <= 1 {
        return Ok(None);
    }
    let candidates = end
        .iter()
        .map(|e| e.matrix().clone())
        .chain((0..SPLIT_ATTEMPTS).map(|_| random_combination(&end, rng)));
    for x in candidates {
        let y = stable_power(&x)?;
        let rank = y.rank();
        if rank > 0 && rank < m.dim() {
            let image = (0..y.cols()).map(|j| y.column(j)).collect();
            return Ok(Some((kernel_basis(&y), image)));
        }
    }
    Ok(None)
}

fn is_isomorphic<F: Field>(
    a: &ExplicitModule<F>,
    b: &ExplicitModule<F>,
    rng: &mut ChaCha8Rng,
    hook: &dyn ProgressHook,
) -> Result<bool> {
    if a.dim() != b.dim() {
        return Ok(false);
    }
    let maps = hom_space(a, b, hook)?;
    if maps.is_empty() {
        return Ok(false);
    }
    let full = |m: &Matrix<F>| m.rank() == a.dim();
    if maps.iter().any(|m| full(m.matrix())) {
        return Ok(true);
    }
    Ok((0..SPLIT_ATTEMPTS).any(|_| full(&random_combination(&maps, rng))))
}

impl<F: Field> AddBasis<F> {
    pub fn new(q: &ExplicitModule<F>, hook: &dyn ProgressHook) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(RNG_SEED);
        let mut pending = vec![q.clone()];
        let mut pieces = Vec::new();
        while let Some(m) = pending.pop() {
            checkpoint(hook, "summands", pieces.len(), q.dim())?;
            if m.dim() == 0 {
                continue;
            }
            match split_once(&m, &mut rng, hook)? {
                Some((kernel, image)) => {
                    pending.push(m.cyclic_submodule(&kernel)?.0);
                    pending.push(m.cyclic_submodule(&image)?.0);
                }
                None => pieces.push(m),
            }
        }
        pieces.sort_by_key(|p| p.dim());
        let mut summands: Vec<ExplicitModule<F>> = Vec::new();
        let mut multiplicities = Vec::new();
        'pieces: for p in pieces {
            for (s, count) in summands.iter().zip(multiplicities.iter_mut()) {
                if is_isomorphic(&p, s, &mut rng, hook)? {
                    *count += 1;
                    continue 'pieces;
                }
            }
            summands.push(p);
            multiplicities.push(1);
        }
        let mut homs = Vec::with_capacity(summands.len());
        for a in &summands {
            homs.push(summands.iter().map(|b| hom_space(a, b, hook)).collect::<Result<Vec<_>>>()?);
        }
        let radicals = summands
            .iter()
            .enumerate()
            .map(|(i, s)| radical(s, &homs[i][i]))
            .collect::<Result<Vec<_>>>()?;
        Ok(AddBasis {
            source: q.clone(),
            summands,
            multiplicities,
            homs,
            radicals,
        })
    }

    /// The module this basis was built from.
    pub fn source(&self) -> &ExplicitModule<F> {
        &self.source
    }

    pub fn summands(&self) -> &[ExplicitModule<F>] {
        &self.summands
    }

    /// How often each summand occurs in the source module.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Basis of `Hom(Q_from, Q_to)`.
    pub fn homs(&self, from: usize, to: usize) -> &[ModuleMap<F>] {
        &self.homs[from][to]
    }

    /// Spanning set of the radical of `End(Q_i)`.
    pub fn radical(&self, i: usize) -> &[ModuleMap<F>] {
        &self.radicals[i]
    }
}

/// Nilpotent parts `b - λ` of the endomorphism basis of an indecomposable
/// module, spanning its radical when the top is the ground field.
fn radical<F: Field>(m: &ExplicitModule<F>, end: &[ModuleMap<F>]) -> Result<Vec<ModuleMap<F>>> {
    let f = m.field();
    let n = m.dim();
    let mut span = Echelon::new(f, n * n);
    for b in end {
        for lambda in eigenvalue_candidates(b.matrix()) {
            let shifted = b.matrix().sub(&Matrix::identity(f, n).scale(&lambda))?;
            if is_nilpotent(&shifted)? {
                span.insert(shifted.as_slice());
                break;
            }
        }
    }
    span.rows()
        .iter()
        .map(|row| Ok(ModuleMap::new(Matrix::from_vec(f, n, n, row.clone())?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hook::Silent;
    use crate::linalg::GF5;
    use crate::oracle::ExplicitAlgebra;

    fn triangular() -> std::sync::Arc<ExplicitAlgebra<crate::linalg::PrimeField>> {
        let mut mats = Vec::new();
        for (i, j) in [(0, 0), (0, 1), (1, 1)] {
            let mut m = Matrix::zeros(&GF5, 2, 2);
            m.set(i, j, 1);
            mats.push(m);
        }
        ExplicitAlgebra::from_matrices(&GF5, 2, &mats, &Silent).unwrap()
    }

    #[test]
    fn regular_module_of_triangular_algebra() {
        let a = triangular();
        let reg = ExplicitModule::regular(&a);
        let basis = AddBasis::new(&reg.direct_sum(&reg).unwrap(), &Silent).unwrap();
        // two non-isomorphic projectives, each twice
        let mut dims: Vec<_> = basis.summands().iter().map(|s| s.dim()).collect();
        dims.sort();
        assert_eq!(dims, [1, 2]);
        assert_eq!(basis.multiplicities(), [2, 2]);
        for i in 0..2 {
            assert_eq!(basis.homs(i, i).len(), 1);
            assert!(basis.radical(i).is_empty());
        }
        assert_eq!(basis.homs(0, 1).len() + basis.homs(1, 0).len(), 1);
    }

    #[test]
    fn natural_module_is_indecomposable() {
        let a = triangular();
        let basis = AddBasis::new(&ExplicitModule::natural(&a), &Silent).unwrap();
        assert_eq!(basis.summands().len(), 1);
        assert_eq!(basis.summands()[0].dim(), 2);
    }
}
