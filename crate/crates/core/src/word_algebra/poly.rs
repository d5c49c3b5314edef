use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::word::{Letter, Word};
use crate::error::{Error, Result};

/// A finitely supported integer combination of words.
///
/// Zero coefficients are never stored, so structural equality is exact
/// equality of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NCPolynomial {
    terms: HashMap<Word, BigInt>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(Word::empty())
    }

    pub fn monomial(w: Word, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c.into());
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct words with nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Unordered iteration over `(word, coefficient)`.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in word order (length, then lexicographic with `x < y`).
    pub fn sorted_terms(&self) -> Vec<(&Word, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Every word is empty or ends in `y`.
    pub fn is_harmonic(&self) -> bool {
        self.terms.keys().all(Word::is_harmonic)
    }

    pub(crate) fn ensure_harmonic(&self) -> Result<()> {
        match self.terms.keys().find(|w| !w.is_harmonic()) {
            Some(w) => Err(Error::NotAdmissible(w.to_string())),
            None => Ok(()),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Left multiplication by a fixed word.
    pub fn prepend(&self, prefix: &[Letter]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.prepend(prefix), c.clone()))
                .collect(),
        }
    }

    /// Concatenation product.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }
}

impl From<Word> for NCPolynomial {
    fn from(w: Word) -> Self {
        Self::monomial(w, 1)
    }
}

impl fmt::Display for NCPolynomial {
    /// `c1*w1 + c2*w2 + ...` in word order; the zero polynomial prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{w}")?;
        }
        Ok(())
    }
}

impl AddAssign<&NCPolynomial> for NCPolynomial {
    fn add_assign(&mut self, rhs: &NCPolynomial) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&NCPolynomial> for NCPolynomial {
    fn sub_assign(&mut self, rhs: &NCPolynomial) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add for &NCPolynomial {
    type Output = NCPolynomial;
    fn add(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &NCPolynomial {
    type Output = NCPolynomial;
    fn sub(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &NCPolynomial {
    type Output = NCPolynomial;
    fn neg(self) -> NCPolynomial {
        NCPolynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

/// `*` on polynomials is concatenation.
impl Mul for &NCPolynomial {
    type Output = NCPolynomial;
    fn mul(self, rhs: &NCPolynomial) -> NCPolynomial {
        self.concat(rhs)
    }
}

/// Sign helper: `(-1)^e` as a `BigInt`.
pub(crate) fn sign(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Absolute coefficient sum, i.e. the number of terms counted with multiplicity
/// for polynomials with nonnegative coefficients.
pub fn total_multiplicity(p: &NCPolynomial) -> BigInt {
    p.iter().map(|(_, c)| c.abs()).sum()
}
