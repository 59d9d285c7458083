//! Scalar fields: prime fields GF(p) and the rationals.
//!
//! Arithmetic goes through a field *context* value rather than operator
//! overloading on the elements, so that GF(p) elements stay plain `u32`
//! residues and the modulus lives in one place.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::matrix::Matrix;

/// Which field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    /// GF(p) for a prime p.
    Gf(u32),
    Rational,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Gf(p) => write!(f, "GF({p})"),
            FieldTag::Rational => write!(f, "Q"),
        }
    }
}

/// A field together with its element representation.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn tag(&self) -> FieldTag;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// Bring `m` into reduced row-echelon form in place and return the
    /// pivot columns. Fields may override this with a faster kernel.
    fn row_reduce(&self, m: &mut Matrix<Self>) -> Vec<usize> {
        super::elim::generic_row_reduce(m)
    }
}

/// GF(p) with `p < 2^16`, so products of residues fit in a `u32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub const GF2: PrimeField = PrimeField { p: 2 };
pub const GF5: PrimeField = PrimeField { p: 5 };

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..1 << 16).contains(&p) || !is_prime(p) {
            return Err(Error::Usage(format!(
                "GF(p) needs a prime p < 65536, got {p}"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u32;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    fn tag(&self) -> FieldTag {
        FieldTag::Gf(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        a * b % self.p
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            // Fermat: a^(p-2)
            Some(self.pow(a, (self.p - 2) as u64))
        }
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn parse_elem(&self, s: &str) -> Result<u32> {
        let n: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer residue: {s:?}")))?;
        Ok(self.from_i64(n))
    }

    fn format_elem(&self, a: &u32) -> String {
        a.to_string()
    }

    fn row_reduce(&self, m: &mut Matrix<Self>) -> Vec<usize> {
        if self.p == 2 {
            super::gf2::row_reduce_gf2(m)
        } else {
            super::elim::prime_row_reduce(m)
        }
    }
}

/// The rationals with arbitrary-precision numerator and denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn tag(&self) -> FieldTag {
        FieldTag::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }

    fn format_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom().abs())
        }
    }
}

/// A scalar tagged with the field it belongs to; used at the crate's edges
/// (CLI parsing, reports) where the field is only known at runtime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Gf { p: u32, value: u32 },
    Rational(BigRational),
}

impl FieldScalar {
    pub fn parse(tag: FieldTag, s: &str) -> Result<Self> {
        match tag {
            FieldTag::Gf(p) => {
                let f = PrimeField::new(p)?;
                Ok(FieldScalar::Gf {
                    p,
                    value: f.parse_elem(s)?,
                })
            }
            FieldTag::Rational => Ok(FieldScalar::Rational(Rationals.parse_elem(s)?)),
        }
    }

    pub fn tag(&self) -> FieldTag {
        match self {
            FieldScalar::Gf { p, .. } => FieldTag::Gf(*p),
            FieldScalar::Rational(_) => FieldTag::Rational,
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Gf { value, .. } => write!(f, "{value}"),
            FieldScalar::Rational(r) => f.write_str(&Rationals.format_elem(r)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(65537).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn inverses_in_gf5() {
        for a in 1..5u32 {
            let b = GF5.inv(&a).unwrap();
            assert_eq!(GF5.mul(&a, &b), 1);
        }
        assert_eq!(GF5.inv(&0), None);
        // u = 2 gives q = u^-2 = 4 = -1
        let u_inv = GF5.inv(&2).unwrap();
        assert_eq!(GF5.mul(&u_inv, &u_inv), GF5.from_i64(-1));
    }

    #[test]
    fn rationals_are_reduced() {
        let x = Rationals.parse_elem("6/-4").unwrap();
        assert_eq!(Rationals.format_elem(&x), "-3/2");
        assert!(x.denom().is_positive());
        assert!(Rationals.parse_elem("1/0").is_err());
    }

    fn field_axioms<F: Field>(f: &F, a: F::Elem, b: F::Elem, c: F::Elem) {
        assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        assert_eq!(
            f.mul(&a, &f.add(&b, &c)),
            f.add(&f.mul(&a, &b), &f.mul(&a, &c))
        );
        assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if let Some(ai) = f.inv(&a) {
            assert!(f.is_one(&f.mul(&a, &ai)));
        } else {
            assert!(f.is_zero(&a));
        }
    }

    proptest! {
        #[test]
        fn gf_axioms(p in prop::sample::select(vec![2u32, 3, 5, 7, 65521]),
                     a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
            let f = PrimeField::new(p).unwrap();
            let (a, b, c) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
            prop_assert!(a < p && b < p && c < p);
            field_axioms(&f, a, b, c);
        }

        #[test]
        fn rational_axioms(a in -50i64..50, b in 1i64..20, c in -50i64..50, e in 1i64..20) {
            let f = Rationals;
            let x = BigRational::new(a.into(), b.into());
            let y = BigRational::new(c.into(), e.into());
            let z = f.from_i64(a - c);
            prop_assert!(x.denom().is_positive());
            field_axioms(&f, x, y, z);
        }
    }
}
