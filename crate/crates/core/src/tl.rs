//! The Temperley-Lieb algebra `TL_d(delta)` on its planar-diagram basis.
//!
//! A diagram has `d` top points and `d` bottom points. Point `k` (zero
//! based) is top point `k + 1`; point `d + k` is bottom point `k + 1`.
//! The product `x * y` stacks `x` on top of `y`, and every closed loop
//! removed in the middle contributes a factor `delta`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Field;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarDiagram {
    partner: Vec<u8>,
}

impl PlanarDiagram {
    pub fn identity(d: usize) -> Self {
        let mut partner = vec![0u8; 2 * d];
        for k in 0..d {
            partner[k] = (d + k) as u8;
            partner[d + k] = k as u8;
        }
        PlanarDiagram { partner }
    }

    /// The cup-cap diagram `U_i`, `1 <= i < d`.
    pub fn generator(d: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= d {
            return Err(Error::Usage(format!(
                "U_{i} does not exist in TL_{d}; need 1 <= i <= {}",
                d.saturating_sub(1)
            )));
        }
        let mut g = Self::identity(d);
        let (a, b) = (i - 1, i);
        g.partner[a] = b as u8;
        g.partner[b] = a as u8;
        g.partner[d + a] = (d + b) as u8;
        g.partner[d + b] = (d + a) as u8;
        Ok(g)
    }

    /// From pairs of zero-based point indices. Fails unless the pairs form
    /// a planar perfect matching on `2d` points.
    pub fn from_pairs(d: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![u8::MAX; 2 * d];
        for &(a, b) in pairs {
            if a >= 2 * d || b >= 2 * d || a == b || partner[a] != u8::MAX || partner[b] != u8::MAX
            {
                return Err(Error::Usage(format!("{pairs:?} is not a perfect matching")));
            }
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        if partner.contains(&u8::MAX) {
            return Err(Error::Usage(format!("{pairs:?} leaves points unmatched")));
        }
        let diagram = PlanarDiagram { partner };
        if !diagram.is_planar() {
            return Err(Error::Usage(format!("{pairs:?} is not planar")));
        }
        Ok(diagram)
    }

    pub fn degree(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point] as usize
    }

    /// Pairs `(a, b)` with `a < b`, sorted by smallest endpoint.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&a| a < self.partner(a))
            .map(|a| (a, self.partner(a)))
            .collect()
    }

    /// Position of a point when the boundary is read top-left to
    /// top-right, then bottom-right to bottom-left.
    fn boundary_position(&self, point: usize) -> usize {
        let d = self.degree();
        if point < d {
            point
        } else {
            3 * d - 1 - point
        }
    }

    /// No two arcs interleave along the boundary.
    pub fn is_planar(&self) -> bool {
        let arcs: Vec<(usize, usize)> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (self.boundary_position(a), self.boundary_position(b));
                (x.min(y), x.max(y))
            })
            .collect();
        arcs.iter().all(|&(a, b)| {
            arcs.iter()
                .all(|&(c, e)| !(a < c && c < b && b < e) && !(c < a && a < e && e < b))
        })
    }

    /// Number of strands joining the top to the bottom.
    pub fn through_strands(&self) -> usize {
        let d = self.degree();
        (0..d).filter(|&k| self.partner(k) >= d).count()
    }
}

/// Stack `top` over `bottom`. Returns the resulting diagram and the number
/// of closed loops formed in the middle.
pub fn compose_diagrams(top: &PlanarDiagram, bottom: &PlanarDiagram) -> Result<(PlanarDiagram, usize)> {
    let d = top.degree();
    if bottom.degree() != d {
        return Err(Error::DimensionMismatch(format!(
            "cannot stack a TL_{d} diagram on a TL_{} diagram",
            bottom.degree()
        )));
    }
    let mut seen_middle = vec![false; d];
    // Follow a strand from an outer endpoint to the other outer endpoint.
    // `in_top` selects the diagram we are walking in and `p` the point we
    // just entered it through.
    let mut walk = |mut in_top: bool, mut p: usize| -> usize {
        loop {
            if in_top {
                let q = top.partner(p);
                if q < d {
                    return q;
                }
                seen_middle[q - d] = true;
                in_top = false;
                p = q - d;
            } else {
                let q = bottom.partner(p);
                if q >= d {
                    return q;
                }
                seen_middle[q] = true;
                in_top = true;
                p = d + q;
            }
        }
    };
    let mut partner = vec![u8::MAX; 2 * d];
    for start in 0..2 * d {
        if partner[start] != u8::MAX {
            continue;
        }
        let end = if start < d { walk(true, start) } else { walk(false, start) };
        partner[start] = end as u8;
        partner[end] = start as u8;
    }
    let mut loops = 0;
    for k in 0..d {
        if seen_middle[k] {
            continue;
        }
        loops += 1;
        let mut m = k;
        loop {
            seen_middle[m] = true;
            // down through the bottom diagram to another middle point, then
            // back up through the top diagram
            let q = bottom.partner(m);
            debug_assert!(q < d, "open strand left in the middle");
            seen_middle[q] = true;
            m = top.partner(d + q) - d;
            if m == k {
                break;
            }
        }
    }
    Ok((PlanarDiagram { partner }, loops))
}

/// Number of planar diagrams, the Catalan number `C_d`.
pub fn dimension(d: usize) -> usize {
    let mut c: u128 = 1;
    for k in 0..d as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c as usize
}

/// Every planar diagram of degree `d`, sorted.
pub fn enumerate_diagrams(d: usize) -> Vec<PlanarDiagram> {
    // Non-crossing matchings of boundary positions 0..2d, then mapped back
    // to points.
    fn matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if points.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for j in (1..points.len()).step_by(2) {
            let inner = matchings(&points[1..j]);
            let outer = matchings(&points[j + 1..]);
            for a in &inner {
                for b in &outer {
                    let mut m = vec![(points[0], points[j])];
                    m.extend_from_slice(a);
                    m.extend_from_slice(b);
                    out.push(m);
                }
            }
        }
        out
    }
    let to_point = |pos: usize| if pos < d { pos } else { 3 * d - 1 - pos };
    let positions: Vec<usize> = (0..2 * d).collect();
    let mut out: Vec<PlanarDiagram> = matchings(&positions)
        .into_iter()
        .map(|m| {
            let mut partner = vec![0u8; 2 * d];
            for (a, b) in m {
                let (a, b) = (to_point(a), to_point(b));
                partner[a] = b as u8;
                partner[b] = a as u8;
            }
            PlanarDiagram { partner }
        })
        .collect();
    out.sort();
    out
}

impl fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanarDiagram({self})")
    }
}

/// Compact one-line form: `t1-t2` is a cap on top, `b1-b2` a cup below,
/// `t3|b3` a through strand.
impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let name = |p: usize| {
            if p < d {
                format!("t{}", p + 1)
            } else {
                format!("b{}", p - d + 1)
            }
        };
        let parts: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| {
                let sep = if (a < d) == (b < d) { "-" } else { "|" };
                format!("{}{sep}{}", name(a), name(b))
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl PlanarDiagram {
    /// Multi-line ASCII picture. Caps and cups are drawn as brackets on
    /// their own row, one row per arc, so nesting stays readable:
    ///
    /// ```text
    ///  1 2 3
    ///  +-+ |
    ///      |
    ///  +-+ |
    ///  1 2 3
    /// ```
    pub fn to_ascii(&self) -> String {
        let d = self.degree();
        let col = |k: usize| 1 + 2 * k;
        let width = 2 * d + 1;
        let labels: String = {
            let mut s = vec![' '; width];
            for k in 0..d {
                let c = char::from_digit(((k + 1) % 10) as u32, 10).unwrap();
                s[col(k)] = c;
            }
            s.into_iter().collect::<String>()
        };
        let row_with = |arcs: &[(usize, usize)], through: &[usize]| -> String {
            let mut s = vec![' '; width];
            for &(a, b) in arcs {
                for c in col(a)..=col(b) {
                    s[c] = '-';
                }
                s[col(a)] = '+';
                s[col(b)] = '+';
            }
            for &k in through {
                s[col(k)] = '|';
            }
            s.into_iter().collect::<String>().trim_end().to_string()
        };
        let through: Vec<usize> = (0..d).filter(|&k| self.partner(k) >= d).collect();
        let through_bottom: Vec<usize> = (0..d).filter(|&k| self.partner(d + k) < d).collect();
        let caps: Vec<(usize, usize)> = self.pairs().into_iter().filter(|&(a, b)| b < d && a < d).collect();
        let cups: Vec<(usize, usize)> = self
            .pairs()
            .into_iter()
            .filter(|&(a, _)| a >= d)
            .map(|(a, b)| (a - d, b - d))
            .collect();
        let mut lines = vec![labels.trim_end().to_string()];
        // innermost arcs sit closest to the boundary
        let mut caps = caps;
        caps.sort_by_key(|&(a, b)| b - a);
        for arc in &caps {
            lines.push(row_with(std::slice::from_ref(arc), &through));
        }
        lines.push(row_with(&[], &through));
        let mut cups = cups;
        cups.sort_by_key(|&(a, b)| std::cmp::Reverse(b - a));
        for arc in &cups {
            lines.push(row_with(std::slice::from_ref(arc), &through_bottom));
        }
        lines.push(labels.trim_end().to_string());
        lines.join("\n")
    }
}

/// `TL_d(delta)` over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct TlAlgebra<F: Field> {
    field: F,
    d: usize,
    delta: F::Elem,
}

impl<F: Field> TlAlgebra<F> {
    pub fn new(field: &F, d: usize, delta: F::Elem) -> Self {
        TlAlgebra {
            field: field.clone(),
            d,
            delta,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn degree(&self) -> usize {
        self.d
    }
    pub fn delta(&self) -> &F::Elem {
        &self.delta
    }

    pub fn zero(&self) -> TlElement<F> {
        TlElement {
            algebra: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> TlElement<F> {
        self.basis_element(PlanarDiagram::identity(self.d))
    }

    pub fn basis_element(&self, diagram: PlanarDiagram) -> TlElement<F> {
        assert_eq!(diagram.degree(), self.d);
        let mut terms = BTreeMap::new();
        terms.insert(diagram, self.field.one());
        TlElement {
            algebra: self.clone(),
            terms,
        }
    }

    pub fn generator(&self, i: usize) -> Result<TlElement<F>> {
        Ok(self.basis_element(PlanarDiagram::generator(self.d, i)?))
    }

    /// Evaluate a word such as `"U1 U2 U1"`; the empty word is the unit.
    pub fn word(&self, word: &str) -> Result<TlElement<F>> {
        let mut acc = self.one();
        for tok in word.split_whitespace() {
            let idx = tok
                .strip_prefix('U')
                .or_else(|| tok.strip_prefix('u'))
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("expected U<i>, got {tok:?}")))?;
            acc = acc.mul(&self.generator(idx)?)?;
        }
        Ok(acc)
    }

    /// Check every applicable defining relation of `TL_d(delta)` on the
    /// diagram model.
    pub fn check_relations(&self) -> Result<RelationReport> {
        let mut report = RelationReport::default();
        let n = self.d.saturating_sub(1);
        let u = |i: usize| self.generator(i);
        for i in 1..=n {
            for j in 1..=n {
                if i.abs_diff(j) > 1 {
                    report.record(
                        format!("U{i}U{j} = U{j}U{i}"),
                        u(i)?.mul(&u(j)?)? == u(j)?.mul(&u(i)?)?,
                    );
                }
            }
            report.record(
                format!("U{i}^2 = delta U{i}"),
                u(i)?.mul(&u(i)?)? == u(i)?.scale(&self.delta),
            );
            if i < n {
                report.record(
                    format!("U{i}U{}U{i} = U{i}", i + 1),
                    u(i)?.mul(&u(i + 1)?)?.mul(&u(i)?)? == u(i)?,
                );
            }
            if i >= 2 {
                report.record(
                    format!("U{i}U{}U{i} = U{i}", i - 1),
                    u(i)?.mul(&u(i - 1)?)?.mul(&u(i)?)? == u(i)?,
                );
            }
        }
        Ok(report)
    }
}

/// Outcome of a batch of relation checks; violations are listed, not thrown.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl RelationReport {
    pub fn record(&mut self, name: String, holds: bool) {
        self.checked += 1;
        if !holds {
            self.violations.push(name);
        }
    }

    pub fn all_hold(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A linear combination of diagrams. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct TlElement<F: Field> {
    algebra: TlAlgebra<F>,
    terms: BTreeMap<PlanarDiagram, F::Elem>,
}

impl<F: Field> TlElement<F> {
    pub fn algebra(&self) -> &TlAlgebra<F> {
        &self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarDiagram, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &PlanarDiagram) -> F::Elem {
        self.terms.get(d).cloned().unwrap_or_else(|| self.algebra.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::ParamMismatch(
                "Temperley-Lieb elements from different algebras".into(),
            ));
        }
        Ok(())
    }

    fn add_term(&mut self, diagram: PlanarDiagram, c: F::Elem) {
        let f = &self.algebra.field;
        if f.is_zero(&c) {
            return;
        }
        let entry = self.terms.entry(diagram).or_insert_with(|| f.zero());
        *entry = f.add(entry, &c);
        if f.is_zero(entry) {
            self.terms.retain(|_, v| !f.is_zero(v));
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.algebra.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.algebra.field;
        TlElement {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .map(|(d, x)| (d.clone(), f.mul(c, x)))
                .filter(|(_, x)| !f.is_zero(x))
                .collect(),
        }
    }

    /// Bilinear extension of diagram stacking, each loop weighted by delta.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let f = &self.algebra.field;
        let mut out = self.algebra.zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (c, loops) = compose_diagrams(a, b)?;
                let w = f.mul(&f.mul(x, y), &f.pow(&self.algebra.delta, loops as u64));
                out.add_term(c, w);
            }
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for TlElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = &self.algebra.field;
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, c)| format!("{}*[{}]", field.format_elem(c), d))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Echelon, PrimeField, Rationals, GF2, GF5};
    use proptest::prelude::*;
    use std::collections::HashSet;

    /// Catalan numbers by the convolution recurrence, independent of
    /// [`dimension`].
    fn catalan_recurrence(n: usize) -> usize {
        let mut c = vec![1usize];
        for k in 1..=n {
            c.push((0..k).map(|i| c[i] * c[k - 1 - i]).sum());
        }
        c[n]
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(1), 1);
        assert_eq!(dimension(3), 5);
        assert_eq!(dimension(5), 42);
        for d in 0..9 {
            assert_eq!(dimension(d), catalan_recurrence(d));
            let all = enumerate_diagrams(d);
            assert_eq!(all.len(), catalan_recurrence(d));
            assert_eq!(all.iter().collect::<HashSet<_>>().len(), all.len());
            assert!(all.iter().all(PlanarDiagram::is_planar));
        }
    }

    #[test]
    fn identity_composition() {
        for x in enumerate_diagrams(4) {
            assert_eq!(compose_diagrams(&PlanarDiagram::identity(4), &x).unwrap(), (x.clone(), 0));
            assert_eq!(compose_diagrams(&x, &PlanarDiagram::identity(4)).unwrap(), (x, 0));
        }
    }

    #[test]
    fn generator_squares_to_a_loop() {
        let u1 = PlanarDiagram::generator(2, 1).unwrap();
        assert_eq!(compose_diagrams(&u1, &u1).unwrap(), (u1.clone(), 1));
        // the unique non-identity diagram of TL_2
        let all = enumerate_diagrams(2);
        let others: Vec<_> = all.into_iter().filter(|x| *x != PlanarDiagram::identity(2)).collect();
        assert_eq!(others, vec![u1]);
    }

    #[test]
    fn u1_u2_u1_is_u1() {
        let u1 = PlanarDiagram::generator(3, 1).unwrap();
        let u2 = PlanarDiagram::generator(3, 2).unwrap();
        let (x, l1) = compose_diagrams(&u1, &u2).unwrap();
        let (y, l2) = compose_diagrams(&x, &u1).unwrap();
        assert_eq!((y, l1 + l2), (u1, 0));
    }

    #[test]
    fn generator_shape() {
        let u2 = PlanarDiagram::generator(3, 2).unwrap();
        assert_eq!(u2.pairs(), vec![(0, 3), (1, 2), (4, 5)]);
        assert!(PlanarDiagram::generator(3, 3).is_err());
        assert!(PlanarDiagram::generator(3, 0).is_err());
    }

    #[test]
    fn from_pairs_validates() {
        // crossing through strands
        assert!(PlanarDiagram::from_pairs(2, &[(0, 3), (1, 2)]).is_err());
        assert!(PlanarDiagram::from_pairs(2, &[(0, 1)]).is_err());
        assert_eq!(
            PlanarDiagram::from_pairs(2, &[(0, 2), (1, 3)]).unwrap(),
            PlanarDiagram::identity(2)
        );
    }

    #[test]
    fn size_mismatch() {
        let a = PlanarDiagram::identity(2);
        let b = PlanarDiagram::identity(3);
        assert!(compose_diagrams(&a, &b).is_err());
    }

    #[test]
    fn element_products() {
        let f = Rationals;
        let delta = f.from_i64(-2);
        let tl = TlAlgebra::new(&f, 3, delta.clone());
        let u1 = tl.generator(1).unwrap();
        let u2 = tl.generator(2).unwrap();
        assert_eq!(tl.one().mul(&u1).unwrap(), u1);
        assert_eq!(u1.mul(&u1).unwrap(), u1.scale(&delta));
        assert_eq!(u2.mul(&u1).unwrap().mul(&u2).unwrap(), u2);
        assert_eq!(tl.word("U1 U1").unwrap(), u1.scale(&delta));
        let other = TlAlgebra::new(&f, 3, f.from_i64(1));
        assert!(u1.mul(&other.one()).is_err());
    }

    #[test]
    fn distant_generators_commute() {
        let tl = TlAlgebra::new(&GF5, 4, 3);
        let (u1, u3) = (tl.generator(1).unwrap(), tl.generator(3).unwrap());
        assert_eq!(u1.mul(&u3).unwrap(), u3.mul(&u1).unwrap());
    }

    #[test]
    fn relations_hold() {
        let q = TlAlgebra::new(&Rationals, 3, Rationals.from_i64(-2));
        assert!(q.check_relations().unwrap().all_hold());
        let g = TlAlgebra::new(&GF5, 4, 0);
        let r = g.check_relations().unwrap();
        assert!(r.all_hold());
        assert!(r.checked > 0);
        let two = TlAlgebra::new(&GF2, 2, 1);
        let r2 = two.check_relations().unwrap();
        assert_eq!(r2.checked, 1);
        assert!(r2.all_hold());
    }

    /// Products of generator words span the whole diagram basis.
    #[test]
    fn generators_span() {
        let f = PrimeField::new(7).unwrap();
        for d in 1..=5 {
            let tl = TlAlgebra::new(&f, d, 3);
            let basis = enumerate_diagrams(d);
            let index: BTreeMap<_, _> = basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
            let coords = |x: &TlElement<PrimeField>| {
                let mut v = vec![0u32; basis.len()];
                for (dg, c) in x.terms() {
                    v[index[dg]] = *c;
                }
                v
            };
            let mut span = Echelon::new(&f, basis.len());
            let mut frontier = vec![tl.one()];
            span.insert(&coords(&tl.one()));
            while let Some(x) = frontier.pop() {
                for i in 1..d {
                    let y = x.mul(&tl.generator(i).unwrap()).unwrap();
                    if span.insert(&coords(&y)) {
                        frontier.push(y);
                    }
                }
            }
            assert_eq!(span.dim(), dimension(d), "d = {d}");
        }
    }

    #[test]
    fn ascii_rendering() {
        let u1 = PlanarDiagram::generator(3, 1).unwrap();
        let pic = u1.to_ascii();
        assert!(pic.starts_with(" 1 2 3"));
        assert!(pic.contains("+-+ |"));
        assert_eq!(u1.to_string(), "t1-t2 t3|b3 b1-b2");
    }

    fn diagram(d: usize) -> impl Strategy<Value = PlanarDiagram> {
        let all = enumerate_diagrams(d);
        (0..all.len()).prop_map(move |i| all[i].clone())
    }

    proptest! {
        #[test]
        fn stacking_is_associative(d in 1usize..=5, seed in any::<[u32; 3]>()) {
            let all = enumerate_diagrams(d);
            let pick = |s: u32| all[s as usize % all.len()].clone();
            let (a, b, c) = (pick(seed[0]), pick(seed[1]), pick(seed[2]));
            let (ab, l1) = compose_diagrams(&a, &b).unwrap();
            let (ab_c, l2) = compose_diagrams(&ab, &c).unwrap();
            let (bc, l3) = compose_diagrams(&b, &c).unwrap();
            let (a_bc, l4) = compose_diagrams(&a, &bc).unwrap();
            prop_assert!(ab_c.is_planar());
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(l1 + l2, l3 + l4);
        }

        #[test]
        fn products_stay_planar(a in diagram(4), b in diagram(4)) {
            let (c, _) = compose_diagrams(&a, &b).unwrap();
            prop_assert!(c.is_planar());
            prop_assert!(c.through_strands() <= a.through_strands().min(b.through_strands()));
        }
    }
}
