//! Permutations of `{1..d}`, the index set of the Hecke basis.
//!
//! Storage is zero-based; generator indices in the public interface are
//! one-based, so `s = i` stands for the transposition `(i i+1)`.
//! Composition is right to left: `(v * w)(k) = v(w(k))`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest degree [`enumerate`] accepts.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d as u8).collect(),
        }
    }

    /// From one-based images, e.g. `[2, 1, 3]` for `(1 2)` in S_3.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in images {
            if x == 0 || x > d || seen[x - 1] {
                return Err(Error::Usage(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| (x - 1) as u8).collect(),
        })
    }

    /// The adjacent transposition `(i i+1)`, `1 <= i < d`.
    pub fn transposition(d: usize, i: usize) -> Result<Self> {
        check_generator(d, i)?;
        let mut p = Self::identity(d);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// One-based image of the one-based point `k`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// `self * other`, applying `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&k| self.images[k as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x as usize] = k as u8;
        }
        Permutation { images: inv }
    }

    /// `self * s_i` without re-validating `i`.
    pub(crate) fn times_generator(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// Whether `l(self * s_i) < l(self)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.degree();
        let mut inv = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// A reduced word `[i_1, ..., i_k]` with `self = s_{i_1} ... s_{i_k}`,
    /// found by repeatedly peeling off the leftmost right descent
    /// (bubble sort).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = (1..w.degree()).find(|&i| w.has_right_descent(i)) {
            rev.push(i);
            w = w.times_generator(i);
        }
        rev.reverse();
        rev
    }

    /// Product of the generators in `word`, left to right.
    pub fn from_word(d: usize, word: &[usize]) -> Result<Self> {
        let mut p = Self::identity(d);
        for &i in word {
            check_generator(d, i)?;
            p = p.times_generator(i);
        }
        Ok(p)
    }
}

fn check_generator(d: usize, i: usize) -> Result<()> {
    if i == 0 || i >= d {
        return Err(Error::Usage(format!(
            "generator index {i} out of range 1..={} for degree {d}",
            d.saturating_sub(1)
        )));
    }
    Ok(())
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", imgs.join(" "))
    }
}

/// All `d!` permutations of degree `d` in lexicographic order of images.
pub fn enumerate(d: usize) -> Result<Vec<Permutation>> {
    enumerate_with_cap(d, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_with_cap(d: usize, cap: usize) -> Result<Vec<Permutation>> {
    if d > cap {
        return Err(Error::CapExceeded(format!(
            "enumerating S_{d} exceeds the cap of {cap}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(d);
    let mut used = vec![false; d];
    fn rec(d: usize, current: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if current.len() == d {
            out.push(Permutation {
                images: current.clone(),
            });
            return;
        }
        for x in 0..d {
            if !used[x] {
                used[x] = true;
                current.push(x as u8);
                rec(d, current, used, out);
                current.pop();
                used[x] = false;
            }
        }
    }
    rec(d, &mut current, &mut used, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::transposition(4, 2).unwrap().length(), 1);
        let rev = Permutation::from_images(&[3, 2, 1]).unwrap();
        assert_eq!(rev.length(), 3);
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity(3).reduced_word().is_empty());
        assert_eq!(Permutation::transposition(2, 1).unwrap().reduced_word(), vec![1]);
        let rev = Permutation::from_images(&[3, 2, 1]).unwrap();
        let w = rev.reduced_word();
        assert_eq!(w.len(), 3);
        assert_eq!(Permutation::from_word(3, &w).unwrap(), rev);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(1).unwrap(), vec![Permutation::identity(1)]);
        assert_eq!(enumerate(3).unwrap().len(), 6);
        let s4 = enumerate(4).unwrap();
        assert_eq!(s4.iter().collect::<HashSet<_>>().len(), 24);
        let mut hist = [0usize; 7];
        for w in &s4 {
            hist[w.length()] += 1;
        }
        assert_eq!(hist, [1, 3, 5, 6, 5, 3, 1]);
        assert!(matches!(enumerate(9), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn bad_inputs() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::transposition(3, 3).is_err());
        assert!(Permutation::transposition(3, 0).is_err());
    }

    fn perm_strategy() -> impl Strategy<Value = Permutation> {
        (1usize..7).prop_flat_map(|d| {
            Just((1..=d).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(&v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn length_changes_by_one(w in perm_strategy()) {
            for i in 1..w.degree() {
                let ws = w.times_generator(i);
                prop_assert_eq!(ws.length().abs_diff(w.length()), 1);
                prop_assert_eq!(ws.length() < w.length(), w.has_right_descent(i));
            }
        }

        #[test]
        fn length_of_inverse(w in perm_strategy()) {
            prop_assert_eq!(w.length(), w.inverse().length());
            prop_assert_eq!(w.compose(&w.inverse()), Permutation::identity(w.degree()));
        }

        #[test]
        fn reduced_word_multiplies_back(w in perm_strategy()) {
            let word = w.reduced_word();
            prop_assert_eq!(word.len(), w.length());
            prop_assert_eq!(Permutation::from_word(w.degree(), &word).unwrap(), w);
        }
    }
}
