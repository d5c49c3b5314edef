//! Generating sums of words with powers of `y` inserted after each `x`.
//!
//! For an argument list `(c_1, ..., c_r)` with `S = c_1 + ... + c_r` slots,
//! [`insertion_sum`] collects every word
//!
//! ```text
//! (x y^{e_1} ... x y^{e_{c_1}}) y (x y^{e_{c_1+1}} ...) y ... y
//! ```
//!
//! with `e_1 + ... + e_S = l`. Expanding the automorphism `Delta_u` on a
//! `z`-monomial produces exactly these sums, which is why both sides of the
//! coefficient identity in [`stuffle_expansion_sides`] are built from them.

use super::poly::{sign, NCPolynomial};
use super::products::{harmonic, shuffle, y_power};
use super::word::{Letter, Word};
use crate::indices::{binary_vectors, weak_compositions, Composition0, Index};

/// Sum over all weak compositions `e` of `l` into `sum(args)` slots. Zero
/// arguments contribute a bare `y`; with no slots at all the result is
/// `y^r` for `l = 0` and zero otherwise.
pub fn insertion_sum(args: &Composition0, l: u32) -> NCPolynomial {
    let slots = args.weight() as usize;
    let mut out = NCPolynomial::zero();
    for e in weak_compositions(l, slots) {
        let mut letters = Vec::with_capacity(slots + args.len() + l as usize);
        let mut exps = e.parts().iter();
        for &c in args.parts() {
            for _ in 0..c {
                letters.push(Letter::X);
                let k = *exps.next().expect("one exponent per slot");
                letters.extend(std::iter::repeat_n(Letter::Y, k as usize));
            }
            letters.push(Letter::Y);
        }
        out.add_term(Word::from_letters(letters), 1.into());
    }
    out
}

/// Sum of [`insertion_sum`]`(k - 1 + lambda, l)` over all 0/1 vectors
/// `lambda` with `i` ones. Zero when `i > depth(k)`.
pub fn shifted_insertion_sum(k: &Index, l: u32, i: usize) -> NCPolynomial {
    let Ok(lambdas) = binary_vectors(k.depth(), i) else {
        return NCPolynomial::zero();
    };
    let base = k.decremented();
    let mut out = NCPolynomial::zero();
    for lambda in lambdas {
        let args: Vec<u32> = base
            .parts()
            .iter()
            .zip(lambda.entries())
            .map(|(&c, &b)| c + u32::from(b))
            .collect();
        out += &insertion_sum(&Composition0::new(args), l);
    }
    out
}

/// Coefficient of `u^n` in `Delta_u(z_{k_1} ... z_{k_r})`, assembled from the
/// generating sums: `sum_{l + i = n} (-1)^l A(k, l, i)`.
pub fn delta_u_coefficient(k: &Index, n: u32) -> NCPolynomial {
    let mut out = NCPolynomial::zero();
    for i in 0..=(n as usize).min(k.depth()) {
        let l = n - i as u32;
        out += &shifted_insertion_sum(k, l, i).scale(&sign(l as usize));
    }
    out
}

/// Both sides of the `u^n` coefficient comparison:
///
/// * left: `sum_{i=0}^{min(n,r)} sum_{m+l=n-i} (-1)^l  y^m sh A(k, l, i)`
/// * right: `z_1^n * z_{k_1} ... z_{k_r}`
///
/// The two are equal for every index and every `n`.
pub fn stuffle_expansion_sides(k: &Index, n: u32) -> (NCPolynomial, NCPolynomial) {
    let mut lhs = NCPolynomial::zero();
    for i in 0..=(n as usize).min(k.depth()) {
        let rest = n - i as u32;
        for l in 0..=rest {
            let m = (rest - l) as usize;
            let a = shifted_insertion_sum(k, l, i);
            if a.is_zero() {
                continue;
            }
            lhs += &shuffle(&y_power(m), &a).scale(&sign(l as usize));
        }
    }
    let rhs = harmonic(&y_power(n as usize), &Word::from_index(k).into())
        .expect("powers of y and index words are harmonic");
    (lhs, rhs)
}
