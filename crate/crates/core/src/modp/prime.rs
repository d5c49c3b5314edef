use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted by [`Prime::new`]. Residue products are taken in
/// 128-bit intermediates, so anything below `2^62` is safe.
pub const MAX_PRIME: u64 = 1 << 62;

/// Largest upper bound accepted for a prime window.
pub const MAX_WINDOW: u64 = 1 << 31;

/// A prime below `2^62`, verified at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_raw(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the first twelve prime bases are exact for
/// every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod_raw(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes in `[lo, hi]`, ascending, by a segmented sieve.
pub fn primes_in(lo: u64, hi: u64) -> Result<Vec<Prime>> {
    if lo < 2 || lo > hi || hi > MAX_WINDOW {
        return Err(Error::InvalidWindow(format!("{lo}:{hi}")));
    }
    let root = (hi as f64).sqrt() as u64 + 1;
    let mut small = vec![true; root as usize + 1];
    let mut base = Vec::new();
    for i in 2..=root as usize {
        if small[i] {
            base.push(i as u64);
            for j in (i * i..=root as usize).step_by(i) {
                small[j] = false;
            }
        }
    }
    let mut seg = vec![true; (hi - lo + 1) as usize];
    for &q in &base {
        let start = (q * q).max(lo.div_ceil(q) * q);
        let mut m = start;
        while m <= hi {
            seg[(m - lo) as usize] = false;
            m += q;
        }
    }
    Ok(seg
        .iter()
        .enumerate()
        .filter(|(_, &keep)| keep)
        .map(|(i, _)| Prime(lo + i as u64))
        .collect())
}

/// An inclusive range of integers whose primes are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeWindow {
    pub lo: u64,
    pub hi: u64,
}

impl PrimeWindow {
    pub fn new(lo: u64, hi: u64) -> Result<Self> {
        if lo < 2 || lo > hi || hi > MAX_WINDOW {
            return Err(Error::InvalidWindow(format!("{lo}:{hi}")));
        }
        Ok(Self { lo, hi })
    }

    pub fn primes(&self) -> Vec<Prime> {
        primes_in(self.lo, self.hi).expect("validated window")
    }
}

impl fmt::Display for PrimeWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

/// `LO:HI`, inclusive.
impl FromStr for PrimeWindow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidWindow(s.to_string());
        let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        PrimeWindow::new(lo, hi)
    }
}
