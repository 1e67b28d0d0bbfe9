//! Dense exponent-vector monomials in `X_0, ..., X_N`.
//!
//! Monomials compare in graded lexicographic order with `X_0 > X_1 > ... > X_N`.
//! Canonical sequences (enumerations, family members) list monomials from the
//! greatest down, so `X_0^d` always comes first.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// Panics on an empty exponent vector; a monomial lives in at least one variable.
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(
            !exponents.is_empty(),
            "monomial needs at least one variable"
        );
        Self { exponents }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::new(vec![0; num_vars])
    }

    /// `X_var^power` in `num_vars` variables.
    pub fn pure_power(num_vars: usize, var: usize, power: u32) -> Self {
        let mut exponents = vec![0; num_vars];
        exponents[var] = power;
        Self::new(exponents)
    }

    /// `X_0 X_1 ... X_{num_vars-1}`.
    pub fn product_of_all(num_vars: usize) -> Self {
        Self::new(vec![1; num_vars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    fn check_dims(&self, other: &Monomial) -> Result<()> {
        if self.num_vars() != other.num_vars() {
            return Err(Error::Dimension {
                left: self.num_vars(),
                right: other.num_vars(),
            });
        }
        Ok(())
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dims(other)?;
        Ok(self.zip_with(other, u32::min))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dims(other)?;
        Ok(self.zip_with(other, u32::max))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dims(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_dims(other)?;
        Ok(self.divides_unchecked(other))
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub(crate) fn gcd_unchecked(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Variables that do not occur.
    pub fn missing_vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == 0)
            .map(|(i, _)| i)
    }

    /// Index of the variable if this is a nonconstant pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut support = self.exponents.iter().enumerate().filter(|(_, &e)| e > 0);
        match (support.next(), support.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    /// Lies on some face of the hypertetrahedron, i.e. misses a variable.
    pub fn on_boundary(&self) -> bool {
        self.exponents.contains(&0)
    }

    /// Append a trailing variable with the given exponent.
    pub fn extended(&self, exponent: u32) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents.push(exponent);
        Monomial { exponents }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &e) in self.exponents.iter().enumerate() {
            match e {
                0 => continue,
                1 => write!(f, "X{i}")?,
                _ => write!(f, "X{i}^{e}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The `i`-th face: degree-`d` monomials in which `X_i` does not occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    index: usize,
}

impl Face {
    pub fn new(index: usize) -> Self {
        Self { index }
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn contains(self, m: &Monomial) -> bool {
        m.exponent(self.index) == 0
    }
}

/// All monomials of degree `degree` in `X_0, ..., X_dim`, greatest first.
pub fn enumerate_monomials(dim: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut buf = vec![0u32; dim + 1];
    fill(&mut buf, 0, degree, &mut out);
    out
}

fn fill(buf: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == buf.len() {
        buf[pos] = remaining;
        out.push(Monomial::new(buf.to_vec()));
        return;
    }
    for e in (0..=remaining).rev() {
        buf[pos] = e;
        fill(buf, pos + 1, remaining - e, out);
    }
}

/// Monomials of degree in `lo..=hi`, in canonical order within each degree.
pub(crate) fn monomials_in_degrees(dim: usize, lo: u32, hi: u32) -> Vec<Monomial> {
    (lo..=hi)
        .flat_map(|e| enumerate_monomials(dim, e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binomial_usize;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrees() {
        assert_eq!(m(&[2, 1, 0]).degree(), 3);
        assert_eq!(m(&[0, 0, 0]).degree(), 0);
        assert_eq!(m(&[1, 1, 1, 1]).degree(), 4);
    }

    #[test]
    fn gcd_lcm_divides() {
        assert_eq!(m(&[2, 1]).gcd(&m(&[1, 2])).unwrap(), m(&[1, 1]));
        assert_eq!(m(&[3, 0]).gcd(&m(&[0, 3])).unwrap(), m(&[0, 0]));
        let l = m(&[4, 0]).lcm(&m(&[2, 2])).unwrap();
        assert_eq!(l, m(&[4, 2]));
        assert_eq!(l.degree(), 6);
        assert_eq!(m(&[1, 1, 0]).lcm(&m(&[0, 1, 1])).unwrap(), m(&[1, 1, 1]));
        assert_eq!(m(&[2, 3]).lcm(&Monomial::one(2)).unwrap(), m(&[2, 3]));
        assert!(m(&[1, 0, 0]).divides(&m(&[2, 1, 0])).unwrap());
        assert!(!m(&[0, 0, 1]).divides(&m(&[2, 1, 0])).unwrap());
        assert!(m(&[2, 1, 0]).divides(&m(&[2, 1, 0])).unwrap());
    }

    #[test]
    fn dimension_errors() {
        let a = m(&[1, 2]);
        let b = m(&[1, 2, 3]);
        let err = Error::Dimension { left: 2, right: 3 };
        assert_eq!(a.gcd(&b), Err(err.clone()));
        assert_eq!(a.lcm(&b), Err(err.clone()));
        assert_eq!(a.divides(&b), Err(err));
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(
            enumerate_monomials(1, 2),
            vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]
        );
        assert_eq!(enumerate_monomials(2, 2).len(), 6);
        assert_eq!(enumerate_monomials(3, 0), vec![m(&[0, 0, 0, 0])]);
    }

    #[test]
    fn enumeration_is_strictly_descending() {
        let all = enumerate_monomials(3, 5);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn enumeration_counts_match_binomial() {
        for dim in 1..=6usize {
            for e in 0..=12u32 {
                let count = enumerate_monomials(dim, e).len();
                assert_eq!(
                    count,
                    binomial_usize(e as i64 + dim as i64, dim as i64),
                    "N={dim} e={e}"
                );
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(m(&[2, 1, 0]).to_string(), "X0^2X1");
        assert_eq!(m(&[0, 0]).to_string(), "1");
    }

    #[test]
    fn faces_and_pure_powers() {
        assert!(Face::new(2).contains(&m(&[2, 1, 0])));
        assert!(!Face::new(0).contains(&m(&[2, 1, 0])));
        assert_eq!(m(&[0, 3, 0]).pure_power_var(), Some(1));
        assert_eq!(m(&[1, 2, 0]).pure_power_var(), None);
        assert_eq!(Monomial::one(3).pure_power_var(), None);
    }

    fn monomial3() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..6, 3).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn gcd_lcm_lattice_laws(a in monomial3(), b in monomial3(), c in monomial3()) {
            prop_assert_eq!(a.gcd(&b)?, b.gcd(&a)?);
            prop_assert_eq!(a.lcm(&b)?, b.lcm(&a)?);
            prop_assert_eq!(a.gcd(&b)?.gcd(&c)?, a.gcd(&b.gcd(&c)?)?);
            prop_assert_eq!(a.lcm(&b)?.lcm(&c)?, a.lcm(&b.lcm(&c)?)?);
            prop_assert_eq!(a.gcd(&a)?, a.clone());
            prop_assert_eq!(a.lcm(&a)?, a.clone());
            prop_assert!(a.gcd(&b)?.divides(&a)?);
            prop_assert!(a.divides(&a.lcm(&b)?)?);
            prop_assert_eq!(
                a.lcm(&b)?.degree() + a.gcd(&b)?.degree(),
                a.degree() + b.degree()
            );
        }

        #[test]
        fn order_is_total(a in monomial3(), b in monomial3()) {
            let ab = a.cmp(&b);
            prop_assert_eq!(ab.reverse(), b.cmp(&a));
            prop_assert_eq!(ab == Ordering::Equal, a == b);
        }
    }
}
