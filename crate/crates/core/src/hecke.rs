//! The Iwahori-Hecke algebra `H_q(d)` in the normalised basis `T_w`, with
//! `T_w T_s = T_{ws}` when `l(ws) = l(w) + 1` and
//! `T_w T_s = (u - u^-1) T_w + T_{ws}` otherwise, where `q = u^-2`.
//!
//! Also here: the surjection onto Temperley-Lieb sending `T_i` to
//! `U_i + u`, and the elements `x_i` generating its kernel.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Field, PrimeField, GF2, GF5};
use crate::perm::Permutation;
use crate::tl::{TlAlgebra, TlElement};

/// Degree and deformation parameter. `q = u^-2` and `delta = -u - u^-1`
/// are derived, never supplied.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeParams<F: Field> {
    field: F,
    d: usize,
    u: F::Elem,
    u_inv: F::Elem,
    q: F::Elem,
    delta: F::Elem,
}

impl<F: Field> HeckeParams<F> {
    pub fn new(field: &F, d: usize, u: F::Elem) -> Result<Self> {
        let u_inv = field
            .inv(&u)
            .ok_or_else(|| Error::Usage("the Hecke parameter u must be invertible".into()))?;
        let q = field.mul(&u_inv, &u_inv);
        let delta = field.neg(&field.add(&u, &u_inv));
        Ok(HeckeParams {
            field: field.clone(),
            d,
            u,
            u_inv,
            q,
            delta,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn degree(&self) -> usize {
        self.d
    }
    pub fn u(&self) -> &F::Elem {
        &self.u
    }
    pub fn u_inv(&self) -> &F::Elem {
        &self.u_inv
    }
    pub fn q(&self) -> &F::Elem {
        &self.q
    }
    pub fn delta(&self) -> &F::Elem {
        &self.delta
    }

    /// `u - u^-1`, the coefficient appearing in the quadratic relation.
    pub fn quadratic_coefficient(&self) -> F::Elem {
        self.field.sub(&self.u, &self.u_inv)
    }

    /// Whether `1 + q = 0`, i.e. quantum characteristic 2.
    pub fn one_plus_q_is_zero(&self) -> bool {
        self.field.is_zero(&self.field.add(&self.field.one(), &self.q))
    }

    /// The matching Temperley-Lieb algebra `TL_d(-u - u^-1)`.
    pub fn tl_algebra(&self) -> TlAlgebra<F> {
        TlAlgebra::new(&self.field, self.d, self.delta.clone())
    }

    pub fn with_degree(&self, d: usize) -> Self {
        HeckeParams { d, ..self.clone() }
    }
}

/// The two desk-scale realisations of quantum characteristic 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlessedConfig {
    /// GF(2), u = 1: q = 1 and delta = -2 = 0 (classical, char 2).
    Gf2U1,
    /// GF(5), u = 2: q = 2^-2 = 4 = -1 and delta = -(2 + 3) = 0.
    Gf5U2,
}

pub const CLASSICAL_CHAR2: BlessedConfig = BlessedConfig::Gf2U1;
pub const QUANTUM_ELL2: BlessedConfig = BlessedConfig::Gf5U2;

impl BlessedConfig {
    pub const ALL: [BlessedConfig; 2] = [BlessedConfig::Gf2U1, BlessedConfig::Gf5U2];

    pub fn field(self) -> PrimeField {
        match self {
            BlessedConfig::Gf2U1 => GF2,
            BlessedConfig::Gf5U2 => GF5,
        }
    }

    pub fn u(self) -> u32 {
        match self {
            BlessedConfig::Gf2U1 => 1,
            BlessedConfig::Gf5U2 => 2,
        }
    }

    pub fn params(self, d: usize) -> HeckeParams<PrimeField> {
        HeckeParams::new(&self.field(), d, self.u()).expect("blessed u is invertible")
    }

    pub fn name(self) -> &'static str {
        match self {
            BlessedConfig::Gf2U1 => "gf2-u1",
            BlessedConfig::Gf5U2 => "gf5-u2",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "gf2-u1" => Ok(BlessedConfig::Gf2U1),
            "gf5-u2" => Ok(BlessedConfig::Gf5U2),
            _ => Err(Error::Usage(format!(
                "unknown configuration {s:?}; expected gf2-u1 or gf5-u2"
            ))),
        }
    }
}

impl fmt::Display for BlessedConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finitely supported combination of basis elements `T_w`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElement<F: Field> {
    params: HeckeParams<F>,
    terms: BTreeMap<Permutation, F::Elem>,
}

impl<F: Field> HeckeElement<F> {
    pub fn zero(params: &HeckeParams<F>) -> Self {
        HeckeElement {
            params: params.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(params: &HeckeParams<F>, w: Permutation) -> Result<Self> {
        if w.degree() != params.d {
            return Err(Error::ParamMismatch(format!(
                "permutation of degree {} in H({})",
                w.degree(),
                params.d
            )));
        }
        let mut x = Self::zero(params);
        x.terms.insert(w, params.field.one());
        Ok(x)
    }

    pub fn one(params: &HeckeParams<F>) -> Self {
        Self::basis(params, Permutation::identity(params.d)).expect("degree matches")
    }

    /// `T_i` for the transposition `(i i+1)`.
    pub fn generator(params: &HeckeParams<F>, i: usize) -> Result<Self> {
        Self::basis(params, Permutation::transposition(params.d, i)?)
    }

    /// `T_{i_1} T_{i_2} ... T_{i_k}`.
    pub fn word(params: &HeckeParams<F>, word: &[usize]) -> Result<Self> {
        let mut x = Self::one(params);
        for &i in word {
            x = x.multiply_by_generator(i)?;
        }
        Ok(x)
    }

    pub fn params(&self) -> &HeckeParams<F> {
        &self.params
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Permutation) -> F::Elem {
        self.terms.get(w).cloned().unwrap_or_else(|| self.params.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Permutation, c: F::Elem) {
        let f = &self.params.field;
        if f.is_zero(&c) {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(|| f.zero());
        *e = f.add(e, &c);
        if f.is_zero(e) {
            self.terms.remove(&w);
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.params != other.params {
            return Err(Error::ParamMismatch("Hecke elements with different parameters".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.params.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.params.field;
        let mut out = Self::zero(&self.params);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), f.mul(c, x));
        }
        out
    }

    /// Right multiplication by `T_s`, `s = (i i+1)`.
    pub fn multiply_by_generator(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.params.d {
            return Err(Error::Usage(format!(
                "T_{i} does not exist in H({})",
                self.params.d
            )));
        }
        let f = &self.params.field;
        let k = self.params.quadratic_coefficient();
        let mut out = Self::zero(&self.params);
        for (w, c) in &self.terms {
            let ws = w.times_generator(i);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), f.mul(&k, c));
            }
            out.add_term(ws, c.clone());
        }
        Ok(out)
    }

    /// Ring product, peeling generators off a reduced word of each basis
    /// element of the right factor.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(&self.params);
        for (v, c) in &other.terms {
            let mut z = self.clone();
            for s in v.reduced_word() {
                z = z.multiply_by_generator(s)?;
            }
            out = out.add(&z.scale(c))?;
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for HeckeElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = &self.params.field;
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("{}*T{}", field.format_elem(c), w))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The algebra map `H_q(d) -> TL_d(-u - u^-1)` with `T_i -> U_i + u`,
/// evaluated on each `T_w` along a reduced word of `w`.
pub fn phi<F: Field>(x: &HeckeElement<F>) -> Result<TlElement<F>> {
    let params = x.params();
    let tl = params.tl_algebra();
    let f = params.field();
    let images: Vec<TlElement<F>> = (1..params.d)
        .map(|i| tl.generator(i)?.add(&tl.one().scale(params.u())))
        .collect::<Result<_>>()?;
    let mut out = tl.zero();
    for (w, c) in x.terms() {
        let mut z = tl.one();
        for s in w.reduced_word() {
            z = z.mul(&images[s - 1])?;
        }
        out = out.add(&z.scale(c))?;
    }
    debug_assert!(out.terms().all(|(_, c)| !f.is_zero(c)));
    Ok(out)
}

/// `x_i = T_i T_{i+1} T_i - u T_i T_{i+1} - u T_{i+1} T_i + u^2 T_i
/// + u^2 T_{i+1} - u^3`, for `1 <= i <= d - 2`.
pub fn kernel_generator<F: Field>(i: usize, params: &HeckeParams<F>) -> Result<HeckeElement<F>> {
    if i == 0 || i + 2 > params.d {
        return Err(Error::Usage(format!(
            "x_{i} needs 1 <= i <= d - 2 (d = {})",
            params.d
        )));
    }
    let f = params.field();
    let u = params.u().clone();
    let u2 = f.mul(&u, &u);
    let u3 = f.mul(&u2, &u);
    let minus = |c: &F::Elem| f.neg(c);
    let w = |word: &[usize]| HeckeElement::word(params, word);
    let parts = [
        (w(&[i, i + 1, i])?, f.one()),
        (w(&[i, i + 1])?, minus(&u)),
        (w(&[i + 1, i])?, minus(&u)),
        (w(&[i])?, u2.clone()),
        (w(&[i + 1])?, u2),
        (HeckeElement::one(params), minus(&u3)),
    ];
    let mut x = HeckeElement::zero(params);
    for (b, c) in parts {
        x = x.add(&b.scale(&c))?;
    }
    Ok(x)
}
