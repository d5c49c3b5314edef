use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::prime::{mul_mod, pow_mod_raw, Prime};
use crate::error::{Error, Result};

/// An element of `Z/pZ`, stored as its least nonnegative representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: Prime,
}

impl Residue {
    pub fn new(value: u64, modulus: Prime) -> Self {
        Self {
            value: value % modulus.get(),
            modulus,
        }
    }

    pub fn from_i64(value: i64, modulus: Prime) -> Self {
        let p = modulus.get() as i128;
        Self {
            value: (value as i128).rem_euclid(p) as u64,
            modulus,
        }
    }

    pub fn zero(modulus: Prime) -> Self {
        Self::new(0, modulus)
    }

    pub fn one(modulus: Prime) -> Self {
        Self::new(1, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, e: u64) -> Self {
        Self {
            value: pow_mod_raw(self.value, e, self.modulus.get()),
            modulus: self.modulus,
        }
    }

    /// Inverse via Fermat's little theorem.
    pub fn inv(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::NotInvertible(self.value, self.modulus.get()));
        }
        Ok(self.pow(self.modulus.get() - 2))
    }

    fn check(self, other: Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "residues modulo different primes"
        );
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.check(rhs);
        let p = self.modulus.get();
        let s = self.value + rhs.value;
        Residue {
            value: if s >= p { s - p } else { s },
            modulus: self.modulus,
        }
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self + (-rhs)
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        let p = self.modulus.get();
        Residue {
            value: if self.value == 0 { 0 } else { p - self.value },
            modulus: self.modulus,
        }
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.check(rhs);
        Residue {
            value: mul_mod(self.value, rhs.value, self.modulus.get()),
            modulus: self.modulus,
        }
    }
}

impl std::iter::Sum for Residue {
    /// # Panics
    /// On an empty iterator (the modulus is unknown); fold from
    /// [`Residue::zero`] instead when the iterator may be empty.
    fn sum<I: Iterator<Item = Residue>>(mut iter: I) -> Residue {
        let first = iter
            .next()
            .expect("sum of residues needs at least one term");
        iter.fold(first, |a, b| a + b)
    }
}

/// `a^{-1} mod p`.
pub fn inv_mod(a: Residue) -> Result<Residue> {
    a.inv()
}

/// `a^e mod p` by square-and-multiply.
pub fn pow_mod(a: Residue, e: u64) -> Residue {
    a.pow(e)
}

/// Inverses of `1, ..., p - 1` modulo `p`, with a dummy `0` at index 0,
/// via `inv(i) = -(p / i) * inv(p mod i)`.
pub fn inverse_table(p: Prime) -> Vec<u64> {
    let p = p.get();
    let mut inv = vec![0u64; p as usize];
    if p > 1 {
        inv[1] = 1;
    }
    for i in 2..p {
        let q = p / i;
        let r = (p % i) as usize;
        inv[i as usize] = mul_mod(p - q % p, inv[r], p);
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64, p: u64) -> Residue {
        Residue::from_i64(v, Prime::new(p).unwrap())
    }

    #[test]
    fn inverse_and_power_examples() {
        assert_eq!(inv_mod(r(3, 7)).unwrap().value(), 5);
        for p in [2, 3, 5, 101, 2_147_483_647] {
            assert_eq!(inv_mod(r(1, p)).unwrap().value(), 1);
        }
        assert_eq!(pow_mod(r(2, 5), 4).value(), 1);
        assert_eq!(pow_mod(r(0, 5), 0).value(), 1);
        assert!(inv_mod(r(0, 7)).is_err());
        assert!(inv_mod(r(14, 7)).is_err());
    }

    #[test]
    fn arithmetic_wraps() {
        assert_eq!((r(5, 7) + r(4, 7)).value(), 2);
        assert_eq!((r(2, 7) - r(5, 7)).value(), 4);
        assert_eq!((-r(0, 7)).value(), 0);
        assert_eq!(r(-1, 7).value(), 6);
        assert_eq!((r(6, 7) * r(6, 7)).value(), 1);
        assert_eq!([r(3, 7), r(5, 7)].into_iter().sum::<Residue>().value(), 1);
    }

    #[test]
    fn inverse_table_is_correct() {
        for p in [2u64, 3, 5, 7, 97, 199, 7919] {
            let prime = Prime::new(p).unwrap();
            let t = inverse_table(prime);
            for i in 1..p {
                assert_eq!(mul_mod(i, t[i as usize], p), 1, "p={p} i={i}");
            }
        }
    }

    #[test]
    #[should_panic(expected = "different primes")]
    fn mixed_moduli_panic() {
        let _ = r(1, 5) + r(1, 7);
    }
}
