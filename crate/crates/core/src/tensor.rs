//! The tensor space `V^{⊗d}`, `dim V = 2`, as a right module over the
//! Hecke algebra and over Temperley-Lieb, and the q-Schur algebra
//! `S_q(2,d) = End_H(V^{⊗d})` computed as a commutant.
//!
//! Basis vectors `e_i` are indexed by words `i` over `{1, 2}` in
//! lexicographic order, position 1 most significant: for `d = 2` the order
//! is `11, 12, 21, 22`.
//!
//! Two matrix conventions appear:
//!
//! * [`ActionMatrix`] (right actions): row `i` holds the coordinates of
//!   `e_i · x`, vectors are rows, and `act(xy) = act(x) act(y)`.
//! * Everything handed to the commutant solver and the module oracle is in
//!   the column convention (`A = act(x)^T`), where matrices act on column
//!   vectors from the left. The Schur algebra, which acts on the left, is
//!   the commutant of these transposed generator matrices.

use std::fmt;

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::{HeckeElement, HeckeParams};
use crate::hook::{checkpoint, ProgressHook};
use crate::linalg::{canonical_basis, commutant, Echelon, Field, Matrix};
use crate::tl;

/// Largest degree accepted by [`double_centralizer_report`] by default.
pub const DEFAULT_DEGREE_CAP: usize = 6;

/// A multi-index `i = (i_1, ..., i_d)` with entries in `{1, 2}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TensorBasisIndex {
    letters: Vec<u8>,
}

impl TensorBasisIndex {
    /// The index sitting at `position` (0-based) in the lexicographic basis.
    pub fn from_position(d: usize, position: usize) -> Result<Self> {
        if position >= tensor_dimension(d) {
            return Err(Error::Usage(format!(
                "basis position {position} out of range for degree {d}"
            )));
        }
        Ok(TensorBasisIndex {
            letters: (0..d)
                .map(|t| 1 + ((position >> (d - 1 - t)) & 1) as u8)
                .collect(),
        })
    }

    pub fn from_letters(letters: &[u8]) -> Result<Self> {
        if letters.iter().any(|&x| x != 1 && x != 2) {
            return Err(Error::Usage(format!("{letters:?} is not a word over {{1, 2}}")));
        }
        Ok(TensorBasisIndex {
            letters: letters.to_vec(),
        })
    }

    pub fn position(&self) -> usize {
        self.letters
            .iter()
            .fold(0, |acc, &x| (acc << 1) | usize::from(x - 1))
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    /// The weight `m = #1s - #2s`.
    pub fn weight(&self) -> i64 {
        self.letters
            .iter()
            .map(|&x| if x == 1 { 1 } else { -1 })
            .sum()
    }
}

impl fmt::Display for TensorBasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.letters {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

pub fn tensor_dimension(d: usize) -> usize {
    1usize << d
}

/// Matrix of a right action on `V^{⊗d}`; row `i` is the image of `e_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionMatrix<F: Field> {
    matrix: Matrix<F>,
}

impl<F: Field> ActionMatrix<F> {
    pub fn identity(field: &F, d: usize) -> Self {
        ActionMatrix {
            matrix: Matrix::identity(field, tensor_dimension(d)),
        }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<F> {
        self.matrix
    }

    /// Acting by `x` then by `y` is acting by `xy`.
    pub fn then(&self, other: &Self) -> Result<Self> {
        Ok(ActionMatrix {
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(ActionMatrix {
            matrix: self.matrix.add(&other.matrix)?,
        })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        ActionMatrix {
            matrix: self.matrix.scale(c),
        }
    }

    /// `v · x` for a coordinate row vector `v`.
    pub fn apply(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.matrix.transpose().mul_vec(v)
    }

    /// The same linear map acting on column vectors from the left.
    pub fn column_convention(&self) -> Matrix<F> {
        self.matrix.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

fn check_index<F: Field>(params: &HeckeParams<F>, s: usize) -> Result<()> {
    if s == 0 || s >= params.degree() {
        return Err(Error::Usage(format!(
            "generator index {s} out of range for degree {}",
            params.degree()
        )));
    }
    Ok(())
}

/// Right action of `T_s` on `V^{⊗d}`:
/// `e_i · T_s` is `e_{is}` if `i_s < i_{s+1}`, `u e_i` if they are equal,
/// and `(u - u^-1) e_i + e_{is}` if `i_s > i_{s+1}`.
pub fn hecke_action<F: Field>(params: &HeckeParams<F>, s: usize) -> Result<ActionMatrix<F>> {
    check_index(params, s)?;
    let d = params.degree();
    let f = params.field();
    let n = tensor_dimension(d);
    let mut m = Matrix::zeros(f, n, n);
    let hi = 1usize << (d - s);
    let lo = 1usize << (d - s - 1);
    for i in 0..n {
        let a = i & hi != 0;
        let b = i & lo != 0;
        let swapped = (i & !(hi | lo)) | if a { lo } else { 0 } | if b { hi } else { 0 };
        match (a, b) {
            (false, true) => m.set(i, swapped, f.one()),
            (true, false) => {
                m.set(i, i, params.quadratic_coefficient());
                m.set(i, swapped, f.one());
            }
            _ => m.set(i, i, params.u().clone()),
        }
    }
    Ok(ActionMatrix { matrix: m })
}

/// Right action of `U_s`, i.e. of `T_s - u`.
pub fn tl_action<F: Field>(params: &HeckeParams<F>, s: usize) -> Result<ActionMatrix<F>> {
    let t = hecke_action(params, s)?;
    let f = params.field();
    let shift = Matrix::identity(f, tensor_dimension(params.degree())).scale(params.u());
    Ok(ActionMatrix {
        matrix: t.matrix.sub(&shift)?,
    })
}

/// Action of an arbitrary Hecke element, `T_w` evaluated along a reduced
/// word of `w`.
pub fn hecke_element_action<F: Field>(x: &HeckeElement<F>) -> Result<ActionMatrix<F>> {
    let params = x.params();
    let f = params.field();
    let d = params.degree();
    let gens: Vec<ActionMatrix<F>> = (1..d).map(|s| hecke_action(params, s)).collect::<Result<_>>()?;
    let n = tensor_dimension(d);
    let mut out = Matrix::zeros(f, n, n);
    for (w, c) in x.terms() {
        let mut m = ActionMatrix::identity(f, d);
        for s in w.reduced_word() {
            m = m.then(&gens[s - 1])?;
        }
        out.add_scaled(c, &m.matrix);
    }
    Ok(ActionMatrix { matrix: out })
}

/// Action of the Temperley-Lieb word `U_{s_1} ... U_{s_k}`.
pub fn tl_word_action<F: Field>(params: &HeckeParams<F>, word: &[usize]) -> Result<ActionMatrix<F>> {
    let mut m = ActionMatrix::identity(params.field(), params.degree());
    for &s in word {
        m = m.then(&tl_action(params, s)?)?;
    }
    Ok(m)
}

/// Column-convention matrices of the Hecke generators `T_1, ..., T_{d-1}`.
pub fn hecke_generators<F: Field>(params: &HeckeParams<F>) -> Result<Vec<Matrix<F>>> {
    (1..params.degree())
        .map(|s| Ok(hecke_action(params, s)?.column_convention()))
        .collect()
}

/// Canonical basis (column convention) of the span of all Temperley-Lieb
/// word actions.
pub fn tl_image<F: Field>(params: &HeckeParams<F>, hook: &dyn ProgressHook) -> Result<Vec<Matrix<F>>> {
    let f = params.field();
    let n = tensor_dimension(params.degree());
    let gens: Vec<Matrix<F>> = (1..params.degree())
        .map(|s| Ok(tl_action(params, s)?.column_convention()))
        .collect::<Result<_>>()?;
    let mut span = Echelon::new(f, n * n);
    let id = Matrix::identity(f, n);
    span.insert(id.as_slice());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        checkpoint(hook, "tl-image", span.dim(), tl::dimension(params.degree()))?;
        for g in &gens {
            let y = g.mul(&x)?;
            if span.insert(y.as_slice()) {
                frontier.push(y);
            }
        }
    }
    Ok(canonical_basis(f, n, n, span.rows()))
}

/// Basis of `{ X : X g = g X }` for the given square matrices.
pub fn commutant_basis<F: Field>(generators: &[Matrix<F>], hook: &dyn ProgressHook) -> Result<Vec<Matrix<F>>> {
    let Some(first) = generators.first() else {
        return Err(Error::Usage("commutant of an empty generator list has no size".into()));
    };
    let n = first.rows();
    if generators.iter().any(|g| g.rows() != n || g.cols() != n) {
        return Err(Error::DimensionMismatch("generators of different sizes".into()));
    }
    commutant(first.field(), n, generators, hook)
}

/// `S_q(2,d) = End_H(V^{⊗d})` as matrices acting on column vectors.
pub fn schur_algebra_basis<F: Field>(params: &HeckeParams<F>, hook: &dyn ProgressHook) -> Result<Vec<Matrix<F>>> {
    let f = params.field();
    let n = tensor_dimension(params.degree());
    commutant(f, n, &hecke_generators(params)?, hook)
}

/// Outcome of comparing the Temperley-Lieb image with the commutant of the
/// Schur algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCentralizerReport {
    pub d: usize,
    pub tl_image_dim: usize,
    pub catalan: usize,
    pub schur_dim: usize,
    pub schur_dim_expected: usize,
    pub schur_commutant_dim: usize,
    pub image_equals_commutant: bool,
}

impl DoubleCentralizerReport {
    pub fn faithful(&self) -> bool {
        self.tl_image_dim == self.catalan
    }

    pub fn passes(&self) -> bool {
        self.faithful() && self.image_equals_commutant && self.schur_dim == self.schur_dim_expected
    }
}

pub fn double_centralizer_report<F: Field>(
    params: &HeckeParams<F>,
    hook: &dyn ProgressHook,
) -> Result<DoubleCentralizerReport> {
    double_centralizer_report_with_cap(params, DEFAULT_DEGREE_CAP, hook)
}

pub fn double_centralizer_report_with_cap<F: Field>(
    params: &HeckeParams<F>,
    cap: usize,
    hook: &dyn ProgressHook,
) -> Result<DoubleCentralizerReport> {
    let d = params.degree();
    if d > cap {
        return Err(Error::CapExceeded(format!(
            "double centralizer check at degree {d} exceeds the cap of {cap}"
        )));
    }
    let image = tl_image(params, hook)?;
    let schur = schur_algebra_basis(params, hook)?;
    let end_s = commutant(params.field(), tensor_dimension(d), &schur, hook)?;
    Ok(DoubleCentralizerReport {
        d,
        tl_image_dim: image.len(),
        catalan: tl::dimension(d),
        schur_dim: schur.len(),
        schur_dim_expected: binomial(d + 3, 3),
        schur_commutant_dim: end_s.len(),
        image_equals_commutant: image == end_s,
    })
}

/// JSON header accompanying a dumped action matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDumpHeader {
    pub d: usize,
    pub field: String,
    pub u: String,
    pub convention: String,
}

pub const ROW_CONVENTION: &str = "rows: row i is the image of basis vector i under the right action; act(xy) = act(x) act(y)";

/// `(json_header, csv_body)` for an action matrix, the body row-major.
pub fn dump_action<F: Field>(params: &HeckeParams<F>, action: &ActionMatrix<F>) -> Result<(String, String)> {
    let f = params.field();
    let header = ActionDumpHeader {
        d: params.degree(),
        field: f.tag().to_string(),
        u: f.format_elem(params.u()),
        convention: ROW_CONVENTION.into(),
    };
    let json = serde_json::to_string(&header).map_err(|e| Error::Parse(e.to_string()))?;
    let m = action.matrix();
    let mut csv = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| f.format_elem(x)).collect();
        csv.push_str(&row.join(","));
        csv.push('\n');
    }
    Ok((json, csv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{kernel_generator, BlessedConfig};
    use crate::hook::Silent;
    use crate::linalg::{PrimeField, Rationals, GF2};

    fn configs(d: usize) -> Vec<HeckeParams<PrimeField>> {
        let mut out: Vec<_> = BlessedConfig::ALL.iter().map(|c| c.params(d)).collect();
        out.push(HeckeParams::new(&PrimeField::new(7).unwrap(), d, 3).unwrap());
        out
    }

    #[test]
    fn basis_order() {
        let names: Vec<String> = (0..4)
            .map(|k| TensorBasisIndex::from_position(2, k).unwrap().to_string())
            .collect();
        assert_eq!(names, ["11", "12", "21", "22"]);
        let i = TensorBasisIndex::from_letters(&[2, 1, 2]).unwrap();
        assert_eq!(TensorBasisIndex::from_position(3, i.position()).unwrap(), i);
        assert_eq!(i.weight(), -1);
        assert!(TensorBasisIndex::from_letters(&[3]).is_err());
    }

    #[test]
    fn classical_swap_at_degree_two() {
        let p = BlessedConfig::Gf2U1.params(2);
        let m = hecke_action(&p, 1).unwrap();
        let expected = Matrix::from_i64_rows(
            &GF2,
            &[vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 1]],
        );
        assert_eq!(m.matrix(), &expected);
        assert!(hecke_action(&BlessedConfig::Gf2U1.params(1), 1).is_err());
        assert!(hecke_action(&p, 2).is_err());
    }

    #[test]
    fn hecke_presentation_as_matrices() {
        for d in 2..=5 {
            for p in configs(d) {
                let f = p.field();
                let n = tensor_dimension(d);
                let id = Matrix::identity(f, n);
                let gens: Vec<Matrix<PrimeField>> =
                    (1..d).map(|s| hecke_action(&p, s).unwrap().into_matrix()).collect();
                for (k, g) in gens.iter().enumerate() {
                    let a = g.sub(&id.scale(p.u())).unwrap();
                    let b = g.add(&id.scale(p.u_inv())).unwrap();
                    assert!(a.mul(&b).unwrap().is_zero());
                    for (l, h) in gens.iter().enumerate() {
                        let gh = g.mul(h).unwrap();
                        if k.abs_diff(l) == 1 {
                            assert_eq!(gh.mul(g).unwrap(), h.mul(g).unwrap().mul(h).unwrap());
                        } else {
                            assert_eq!(gh, h.mul(g).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tl_presentation_as_matrices() {
        for d in 2..=5 {
            for p in configs(d) {
                let gens: Vec<Matrix<PrimeField>> =
                    (1..d).map(|s| tl_action(&p, s).unwrap().into_matrix()).collect();
                let t: Vec<Matrix<PrimeField>> =
                    (1..d).map(|s| hecke_action(&p, s).unwrap().into_matrix()).collect();
                let id = Matrix::identity(p.field(), tensor_dimension(d));
                for (k, g) in gens.iter().enumerate() {
                    assert_eq!(g, &t[k].sub(&id.scale(p.u())).unwrap());
                    assert_eq!(g.mul(g).unwrap(), g.scale(p.delta()));
                    if k + 1 < gens.len() {
                        let h = &gens[k + 1];
                        assert_eq!(&g.mul(h).unwrap().mul(g).unwrap(), g);
                        assert_eq!(&h.mul(g).unwrap().mul(h).unwrap(), h);
                    }
                }
            }
        }
    }

    #[test]
    fn element_action_is_a_right_action() {
        let p = HeckeParams::new(&Rationals, 3, Rationals.from_i64(2)).unwrap();
        let x = HeckeElement::word(&p, &[1, 2]).unwrap();
        let y = HeckeElement::word(&p, &[2, 1, 2]).unwrap().add(&HeckeElement::one(&p)).unwrap();
        let xy = hecke_element_action(&x.mul(&y).unwrap()).unwrap();
        let ax = hecke_element_action(&x).unwrap();
        let ay = hecke_element_action(&y).unwrap();
        assert_eq!(xy, ax.then(&ay).unwrap());
    }

    #[test]
    fn kernel_generators_act_as_zero() {
        for d in 3..=5 {
            for p in configs(d) {
                for i in 1..=d - 2 {
                    let x = kernel_generator(i, &p).unwrap();
                    assert!(hecke_element_action(&x).unwrap().is_zero(), "d={d} i={i}");
                }
            }
        }
    }

    #[test]
    fn schur_algebra_dimensions() {
        for (d, dim) in [(1, 4), (2, 10), (3, 20), (4, 35)] {
            for cfg in BlessedConfig::ALL {
                let s = schur_algebra_basis(&cfg.params(d), &Silent).unwrap();
                assert_eq!(s.len(), dim, "{cfg} d={d}");
            }
        }
    }

    #[test]
    fn schur_algebra_is_closed() {
        let p = BlessedConfig::Gf5U2.params(3);
        let s = schur_algebra_basis(&p, &Silent).unwrap();
        let mut span = Echelon::new(p.field(), 64);
        for x in &s {
            span.insert(x.as_slice());
        }
        for x in &s {
            for y in &s {
                assert!(span.contains(x.mul(y).unwrap().as_slice()));
            }
        }
    }

    #[test]
    fn commutant_of_full_matrix_algebra() {
        let n = 4;
        let mut gens = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut m = Matrix::zeros(&GF2, n, n);
                m.set(i, j, 1);
                gens.push(m);
            }
        }
        assert_eq!(commutant_basis(&gens, &Silent).unwrap().len(), 1);
        assert!(commutant_basis::<PrimeField>(&[], &Silent).is_err());
    }

    #[test]
    fn double_centralizer_small_degrees() {
        for d in 2..=4 {
            for cfg in BlessedConfig::ALL {
                let r = double_centralizer_report(&cfg.params(d), &Silent).unwrap();
                assert!(r.passes(), "{cfg}: {r:?}");
            }
        }
        let r = double_centralizer_report(&BlessedConfig::Gf2U1.params(2), &Silent).unwrap();
        assert_eq!((r.tl_image_dim, r.schur_commutant_dim), (2, 2));
        assert!(matches!(
            double_centralizer_report(&BlessedConfig::Gf2U1.params(7), &Silent),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn dump_format() {
        let p = BlessedConfig::Gf5U2.params(2);
        let (json, csv) = dump_action(&p, &hecke_action(&p, 1).unwrap()).unwrap();
        let header: ActionDumpHeader = serde_json::from_str(&json).unwrap();
        assert_eq!((header.d, header.field.as_str(), header.u.as_str()), (2, "GF(5)", "2"));
        assert_eq!(csv.lines().next().unwrap(), "2,0,0,0");
        assert_eq!(csv.lines().nth(2).unwrap(), "0,1,4,0");
    }
}
