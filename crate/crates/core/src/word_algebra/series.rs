//! Power series in a formal parameter `u`, truncated at an explicit order,
//! with word polynomials as coefficients.

use std::ops::{Add, Sub};

use super::poly::{sign, NCPolynomial};
use super::products::{harmonic, shuffle};
use super::word::{Letter, Word};
use crate::error::Result;

/// `sum_{k=0}^{N} c_k u^k`. Coefficients of `u^{N+1}` and beyond are unknown,
/// not zero; binary operations truncate to the smaller order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct USeries {
    coeffs: Vec<NCPolynomial>,
}

impl USeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![NCPolynomial::zero(); order + 1],
        }
    }

    pub fn constant(p: NCPolynomial, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = p;
        s
    }

    /// Series from an explicit coefficient list; the order is `len - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<NCPolynomial>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series has at least the u^0 coefficient"
        );
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &NCPolynomial {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[NCPolynomial] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the truncation order");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Cauchy convolution with `product` applied to coefficient pairs.
    pub fn convolve<F>(&self, other: &Self, mut product: F) -> Result<Self>
    where
        F: FnMut(&NCPolynomial, &NCPolynomial) -> Result<NCPolynomial>,
    {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &product(a, b)?;
            }
        }
        Ok(out)
    }

    /// Series product with concatenation on coefficients.
    pub fn concat(&self, other: &Self) -> Self {
        self.convolve(other, |a, b| Ok(a.concat(b)))
            .expect("concatenation is total")
    }

    pub fn harmonic(&self, other: &Self) -> Result<Self> {
        self.convolve(other, harmonic)
    }

    pub fn shuffle(&self, other: &Self) -> Self {
        self.convolve(other, |a, b| Ok(shuffle(a, b)))
            .expect("shuffle is total")
    }
}

impl Add for &USeries {
    type Output = USeries;
    fn add(self, rhs: &USeries) -> USeries {
        let order = self.order().min(rhs.order());
        USeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Sub for &USeries {
    type Output = USeries;
    fn sub(self, rhs: &USeries) -> USeries {
        let order = self.order().min(rhs.order());
        USeries {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

/// `1 / (1 - y u) = sum_k y^k u^k` through `u^order`.
pub fn geometric_yu(order: usize) -> USeries {
    USeries::from_coeffs((0..=order).map(|k| Word::y_power(k).into()).collect())
}

/// `(1 + y u)^{-1} = sum_j (-1)^j y^j u^j`, prefixed by `prefix` and suffixed
/// by `suffix`, each term shifted by `shift` powers of `u`.
fn alternating_geometric(
    prefix: Letter,
    suffix: Option<Letter>,
    shift: usize,
    order: usize,
) -> USeries {
    let mut s = USeries::zero(order);
    for j in 0..(order + 1).saturating_sub(shift) {
        let mut letters = vec![prefix];
        letters.extend(std::iter::repeat_n(Letter::Y, j));
        letters.extend(suffix);
        s.coeffs[j + shift] = NCPolynomial::monomial(Word::from_letters(letters), sign(j));
    }
    s
}

/// Image of one letter under the automorphism
/// `x -> x (1 + y u)^{-1}`, `y -> y + x (1 + y u)^{-1} y u`.
pub fn delta_u_letter(l: Letter, order: usize) -> USeries {
    match l {
        Letter::X => alternating_geometric(Letter::X, None, 0, order),
        Letter::Y => {
            let tail = alternating_geometric(Letter::X, Some(Letter::Y), 1, order);
            &USeries::constant(Word::letter(Letter::Y).into(), order) + &tail
        }
    }
}

/// The automorphism applied to a word, as a truncated series: the product
/// of the letter images in order.
pub fn delta_u(w: &Word, order: usize) -> USeries {
    w.letters()
        .iter()
        .fold(USeries::constant(NCPolynomial::one(), order), |acc, &l| {
            acc.concat(&delta_u_letter(l, order))
        })
}

/// Linear extension of [`delta_u`] to polynomials.
pub fn delta_u_poly(p: &NCPolynomial, order: usize) -> USeries {
    let mut out = USeries::zero(order);
    for (w, c) in p.iter() {
        let image = delta_u(w, order);
        for k in 0..=order {
            out.coeffs[k] += &image.coeffs[k].scale(c);
        }
    }
    out
}

/// The two sides of `1/(1 - y u) * w = 1/(1 - y u) sh Delta_u(w)` through
/// `u^order`, harmonic product on the left and shuffle on the right.
pub fn harmonic_shuffle_sides(w: &NCPolynomial, order: usize) -> Result<(USeries, USeries)> {
    let geo = geometric_yu(order);
    let lhs = geo.harmonic(&USeries::constant(w.clone(), order))?;
    let rhs = geo.shuffle(&delta_u_poly(w, order));
    Ok((lhs, rhs))
}
