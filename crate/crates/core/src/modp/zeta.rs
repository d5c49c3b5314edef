//! Components of finite multiple zeta values: the truncated nested sums
//! `sum_{p > m_1 > ... > m_r > 0} m_1^{-k_1} ... m_r^{-k_r}` modulo `p`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::prime::{mul_mod, Prime};
use super::residue::{inverse_table, Residue};
use crate::error::Result;
use crate::indices::Index;
use crate::word_algebra::NCPolynomial;

/// The nested sum modulo `p` in `O(p r)` multiplications.
///
/// With `S_j(M)` the tail sum over `M > m_j > ... > m_r > 0` and
/// `S_{r+1} = 1`, each step `M -> M + 1` adds `M^{-k_j} S_{j+1}(M)` to
/// `S_j`. Updating `j` in increasing order reads every `S_{j+1}` before it
/// is advanced. Depth `r >= p` leaves the range empty and gives 0.
pub fn zeta_mod_p(k: &Index, p: Prime) -> Residue {
    let pv = p.get();
    let r = k.depth();
    if r as u64 >= pv {
        return Residue::zero(p);
    }
    let inv = inverse_table(p);
    // m^{-k} = (m^{-1})^{k mod (p-1)}; m is a unit so k = 0 mod (p-1) gives 1
    let exps: Vec<u64> = k
        .parts()
        .iter()
        .map(|&kj| u64::from(kj) % (pv - 1))
        .collect();
    let mut s = vec![0u64; r + 1];
    s[r] = 1;
    for m in 1..pv {
        let im = inv[m as usize];
        for j in 0..r {
            if s[j + 1] == 0 {
                continue;
            }
            let term = mul_mod(super::prime::pow_mod_raw(im, exps[j], pv), s[j + 1], pv);
            s[j] = (s[j] + term) % pv;
        }
    }
    Residue::new(s[0], p)
}

/// Literal nested loops over `p > m_1 > ... > m_r > 0`, each term inverted
/// individually. Cost grows like `C(p - 1, r)`.
pub fn zeta_mod_p_nested(k: &Index, p: Prime) -> Residue {
    fn go(parts: &[u32], below: u64, p: Prime) -> Residue {
        let Some((&first, rest)) = parts.split_first() else {
            return Residue::one(p);
        };
        let mut acc = Residue::zero(p);
        // m_1 ranges over [rest.len() + 1, below)
        for m in (rest.len() as u64 + 1)..below {
            let term = Residue::new(m, p)
                .pow(u64::from(first))
                .inv()
                .expect("0 < m < p");
            acc = acc + term * go(rest, m, p);
        }
        acc
    }
    go(k.parts(), p.get(), p)
}

/// Budget of nested-loop terms for [`zeta_mod_p_reference`].
pub const NESTED_BUDGET: u64 = 2_000_000;

/// Slow evaluator used to double-check failing primes. Uses the literal
/// nested loops when `C(p - 1, r)` is within [`NESTED_BUDGET`], otherwise a
/// tail-sum recurrence with per-term Fermat inversion and no exponent
/// reduction.
pub fn zeta_mod_p_reference(k: &Index, p: Prime) -> Residue {
    let r = k.depth() as u64;
    let pv = p.get();
    if r >= pv {
        return Residue::zero(p);
    }
    if binomial_at_most(pv - 1, r, NESTED_BUDGET) {
        return zeta_mod_p_nested(k, p);
    }
    let r = r as usize;
    let mut s = vec![Residue::zero(p); r + 1];
    s[r] = Residue::one(p);
    for m in 1..pv {
        let old = s.clone();
        for j in 0..r {
            let term = Residue::new(m, p)
                .pow(u64::from(k.parts()[j]))
                .inv()
                .expect("unit");
            s[j] = old[j] + term * old[j + 1];
        }
    }
    s[0]
}

fn binomial_at_most(n: u64, k: u64, bound: u64) -> bool {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(bound) {
            return false;
        }
    }
    true
}

/// Reduces an integer coefficient modulo `p`.
pub fn reduce_bigint(c: &BigInt, p: Prime) -> Residue {
    if let Some(v) = c.to_i64() {
        return Residue::from_i64(v, p);
    }
    let bp = BigInt::from(p.get());
    let mut r = c % &bp;
    if r.is_negative() {
        r += &bp;
    }
    Residue::new(r.to_u64().expect("reduced below p"), p)
}

/// The linear map sending `1` to 1 and `z_{k_1} ... z_{k_r}` to the nested
/// sum for `(k_1, ..., k_r)`, evaluated at one prime.
pub fn zeta_poly_mod_p(poly: &NCPolynomial, p: Prime) -> Result<Residue> {
    zeta_poly_mod_p_with(poly, p, zeta_mod_p)
}

/// [`zeta_poly_mod_p`] with a caller-supplied evaluator for single indices.
pub fn zeta_poly_mod_p_with(
    poly: &NCPolynomial,
    p: Prime,
    eval: impl Fn(&Index, Prime) -> Residue,
) -> Result<Residue> {
    let mut acc = Residue::zero(p);
    for (w, c) in poly.iter() {
        if c.is_zero() {
            continue;
        }
        let value = if w.is_empty() {
            Residue::one(p)
        } else {
            eval(&w.to_index()?, p)
        };
        acc = acc + reduce_bigint(c, p) * value;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::indices_up_to_weight;
    use crate::modp::primes_in;
    use crate::word_algebra::{harmonic, Word};

    fn idx(s: &str) -> Index {
        s.parse().unwrap()
    }

    fn pr(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    // Double loop over 5 > m > n > 0 with exact rationals reduced at the end.
    #[test]
    fn depth_two_example_against_rational_sum() {
        use num_rational::BigRational;
        let mut total = BigRational::zero();
        for m in 1..5i64 {
            for n in 1..m {
                total += BigRational::new(1.into(), BigInt::from(m * m * n));
            }
        }
        // total = a / b with gcd(b, 5) = 1
        let a = reduce_bigint(total.numer(), pr(5));
        let b = reduce_bigint(total.denom(), pr(5));
        let expect = a * b.inv().unwrap();
        assert_eq!(expect.value(), 1);
        assert_eq!(zeta_mod_p(&idx("2,1"), pr(5)).value(), 1);
    }

    #[test]
    fn small_examples() {
        assert_eq!(zeta_mod_p(&idx("1"), pr(5)).value(), 0);
        assert_eq!(zeta_mod_p(&idx("1,2"), pr(5)).value(), 4);
        assert_eq!(zeta_mod_p(&idx("2"), pr(5)).value(), 0);
        for p in [2, 3, 5] {
            let k = Index::repeated(1, p as usize).unwrap();
            assert_eq!(zeta_mod_p(&k, pr(p)).value(), 0);
            assert_eq!(zeta_mod_p_reference(&k, pr(p)).value(), 0);
        }
        // p = 2: the only term is m = 1
        assert_eq!(zeta_mod_p(&idx("4"), pr(2)).value(), 1);
    }

    #[test]
    fn dp_matches_nested_loops() {
        for p in primes_in(2, 50).unwrap() {
            for k in indices_up_to_weight(6).filter(|k| k.depth() <= 3) {
                assert_eq!(zeta_mod_p(&k, p), zeta_mod_p_nested(&k, p), "k={k} p={p}");
            }
        }
    }

    #[test]
    fn reference_fallback_path_matches() {
        // C(192, 5) exceeds the nested budget, forcing the recurrence path
        let k = idx("1,2,1,1,3");
        let p = pr(193);
        assert!(!binomial_at_most(192, 5, NESTED_BUDGET));
        assert_eq!(zeta_mod_p_reference(&k, p), zeta_mod_p(&k, p));
    }

    #[test]
    fn single_part_power_sums_vanish() {
        for p in primes_in(5, 200).unwrap() {
            for k in 1..=(p.get() - 2) as u32 {
                assert!(zeta_mod_p(&idx(&k.to_string()), p).is_zero(), "k={k} p={p}");
            }
        }
    }

    #[test]
    fn large_exponents_reduce_mod_p_minus_one() {
        let p = pr(11);
        // 23 = 3 mod 10
        assert_eq!(zeta_mod_p(&idx("23,1"), p), zeta_mod_p(&idx("3,1"), p));
        assert_eq!(
            zeta_mod_p(&idx("23,1"), p),
            zeta_mod_p_nested(&idx("23,1"), p)
        );
        // exponent divisible by p - 1: every m^{-10} is 1
        assert_eq!(zeta_mod_p(&idx("10"), p).value(), 10);
    }

    #[test]
    fn polynomial_evaluation() {
        let w = |s: &str| s.parse::<Word>().unwrap();
        let p7 = pr(7);
        let prod = harmonic(&w("y").into(), &w("xy").into()).unwrap();
        let expect = zeta_mod_p(&idx("1"), p7) * zeta_mod_p(&idx("2"), p7);
        assert_eq!(zeta_poly_mod_p(&prod, p7).unwrap(), expect);
        assert_eq!(
            zeta_poly_mod_p(&NCPolynomial::one(), p7).unwrap().value(),
            1
        );
        assert_eq!(
            zeta_poly_mod_p(&NCPolynomial::zero(), p7).unwrap().value(),
            0
        );
        assert!(zeta_poly_mod_p(&w("yx").into(), p7).is_err());
        let neg = NCPolynomial::monomial(Word::empty(), -3);
        assert_eq!(zeta_poly_mod_p(&neg, p7).unwrap().value(), 4);
    }

    #[test]
    fn bigint_reduction() {
        let big: BigInt = BigInt::from(10).pow(40u32) + 3;
        assert_eq!(reduce_bigint(&big, pr(7)).value(), (4 + 3) % 7); // 10^40 = 4 mod 7
        assert_eq!(reduce_bigint(&-big, pr(7)).value(), 0);
    }
}
