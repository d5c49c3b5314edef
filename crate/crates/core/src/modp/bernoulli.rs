//! Bernoulli numbers `B_0, ..., B_{p-2}` reduced modulo `p`.
//!
//! All of these are `p`-integral (von Staudt–Clausen: the denominator of
//! `B_m` is divisible by `p` only when `(p - 1) | m`). They are computed from
//! `sum_{j=0}^{m} C(m+1, j) B_j = 0` entirely in `Z/pZ`, which only inverts
//! `m + 1 <= p - 1`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::prime::{mul_mod, Prime};
use super::residue::{inverse_table, Residue};
use crate::error::{Error, Result};

type Table = Arc<[u64]>;

fn cache() -> &'static Mutex<HashMap<u64, Table>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Table>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Builds `[B_0, ..., B_{p-2}] mod p` without consulting the cache.
pub fn bernoulli_table_uncached(p: Prime) -> Vec<u64> {
    let pv = p.get();
    let n = (pv - 1) as usize; // entries B_0 .. B_{p-2}
    let inv = inverse_table(p);
    let mut b = vec![0u64; n];
    if n == 0 {
        return b;
    }
    b[0] = 1;
    // row[j] = C(m + 1, j) mod p, starting from m = 0: C(1, .) = [1, 1]
    let mut row = vec![0u64; n + 1];
    row[0] = 1;
    row[1] = 1;
    for m in 1..n {
        // advance row from C(m, .) to C(m + 1, .)
        for j in (1..=m + 1).rev() {
            row[j] = (row[j] + row[j - 1]) % pv;
        }
        let s = (0..m).fold(0u64, |acc, j| (acc + mul_mod(row[j], b[j], pv)) % pv);
        b[m] = mul_mod(pv - s % pv, inv[m + 1], pv) % pv;
    }
    b
}

/// Cached table `[B_0, ..., B_{p-2}] mod p`. Concurrent callers may compute
/// the same table twice; the first insertion wins and both are identical.
pub fn bernoulli_table(p: Prime) -> Table {
    if let Some(t) = cache().lock().expect("bernoulli cache").get(&p.get()) {
        return t.clone();
    }
    let table: Table = bernoulli_table_uncached(p).into();
    cache()
        .lock()
        .expect("bernoulli cache")
        .entry(p.get())
        .or_insert(table)
        .clone()
}

/// `B_{p-k} mod p` for `2 <= k <= p - 2`.
pub fn bernoulli_mod_p(k: u64, p: Prime) -> Result<Residue> {
    let pv = p.get();
    if k < 2 || k + 2 > pv {
        return Err(Error::BernoulliRange { k, p: pv });
    }
    Ok(Residue::new(bernoulli_table(p)[(pv - k) as usize], p))
}

/// `B_{p-w} / w mod p`, the common factor of the height-one and sum-formula
/// evaluations. Needs `2 <= w <= p - 2`.
pub fn bernoulli_quotient(w: u64, p: Prime) -> Result<Residue> {
    let b = bernoulli_mod_p(w, p)?;
    Ok(b * Residue::new(w, p).inv()?)
}
