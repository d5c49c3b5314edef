//! Per-identity checkers.
//!
//! Numeric checkers evaluate both sides at every prime of a window, in
//! parallel, and compare residues. Identities in the ring of residue
//! sequences only hold for all but finitely many primes, so each report
//! carries a floor: primes below it are evaluated and listed but never
//! counted as failures. The default floor is `weight + n + 3`.
//!
//! A mismatch at a prime above the floor is recomputed with the slow
//! reference evaluator before it is reported.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{Map, Value};

use super::report::{CheckReport, PrimeResult};
use crate::error::{Error, Result};
use crate::indices::{binary_vectors, weak_compositions, BinaryVector, Composition0, Index};
use crate::modp::{
    bernoulli_quotient, reduce_bigint, zeta_mod_p, zeta_mod_p_reference, zeta_poly_mod_p_with,
    Prime, PrimeWindow, Residue,
};
use crate::word_algebra::{
    harmonic, harmonic_shuffle_sides, insertion_sum, shifted_insertion_sum, shuffle,
    stuffle_expansion_sides, NCPolynomial, Word,
};

/// Evaluator for a single index at a single prime.
pub type ZetaFn = fn(&Index, Prime) -> Residue;

/// An integer combination of indices, kept sorted for reproducible output.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IndexCombination(BTreeMap<Index, i64>);

impl IndexCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, k: Index, c: i64) {
        use std::collections::btree_map::Entry;
        match self.0.entry(k) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if c != 0 {
                    e.insert(c);
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Index, i64)> {
        self.0.iter().map(|(k, &c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, p: Prime, zeta: ZetaFn) -> Residue {
        self.0.iter().fold(Residue::zero(p), |acc, (k, &c)| {
            acc + Residue::from_i64(c, p) * zeta(k, p)
        })
    }

    /// The same combination written in words `z_{k_1} ... z_{k_r}`.
    pub fn to_polynomial(&self) -> NCPolynomial {
        NCPolynomial::from_terms(self.0.iter().map(|(k, &c)| (Word::from_index(k), c)))
    }
}

fn params(entries: Vec<(&str, Value)>) -> Map<String, Value> {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Evaluates `sides` at every prime of the window. `sides` returns `None`
/// at primes where one side is undefined; those primes are left out.
fn run_numeric<F>(
    identity: &str,
    params: Map<String, Value>,
    window: &PrimeWindow,
    floor: u64,
    sides: F,
) -> Result<CheckReport>
where
    F: Fn(Prime, ZetaFn) -> Option<(Residue, Residue)> + Sync,
{
    let primes = window.primes();
    if primes.is_empty() {
        return Err(Error::InvalidWindow(format!("{window} contains no primes")));
    }
    let rows: Vec<PrimeResult> = primes
        .par_iter()
        .filter_map(|&p| {
            let (mut lhs, mut rhs) = sides(p, zeta_mod_p)?;
            if lhs != rhs && p.get() >= floor {
                let (l, r) = sides(p, zeta_mod_p_reference)?;
                if (l, r) != (lhs, rhs) {
                    log::warn!(
                        "{identity}: fast and reference evaluators disagree at p = {p} \
                         ({lhs}, {rhs}) vs ({l}, {r})"
                    );
                    (lhs, rhs) = (l, r);
                }
            }
            Some(PrimeResult {
                p: p.get(),
                lhs: lhs.value(),
                rhs: rhs.value(),
                pass: lhs == rhs,
            })
        })
        .collect();
    Ok(CheckReport::numeric(identity, params, floor, rows))
}

fn default_floor(weight: u64, n: u64) -> u64 {
    weight + n + 3
}

/// The two index combinations of the shifted-sum duality:
/// `sum_{wt(e) = n} (k + e)` over `r` parts and
/// `sum_{wt(e') = n} (k^dual + e')^dual` over `s = dep(k^dual)` parts.
pub fn ohno_sides(k: &Index, n: u32) -> (IndexCombination, IndexCombination) {
    let mut lhs = IndexCombination::new();
    for e in weak_compositions(n, k.depth()) {
        lhs.add(k.add(&e).expect("lengths agree"), 1);
    }
    let dual = k.hoffman_dual();
    let mut rhs = IndexCombination::new();
    for e in weak_compositions(n, dual.depth()) {
        rhs.add(dual.add(&e).expect("lengths agree").hoffman_dual(), 1);
    }
    (lhs, rhs)
}

pub fn check_ohno(
    k: &Index,
    n: u32,
    window: &PrimeWindow,
    floor: Option<u64>,
) -> Result<CheckReport> {
    let floor = floor.unwrap_or(default_floor(k.weight().into(), n.into()));
    let (lhs, rhs) = ohno_sides(k, n);
    run_numeric(
        "ohno",
        params(vec![
            ("index", k.to_string().into()),
            ("n", n.into()),
            ("window", window.to_string().into()),
        ]),
        window,
        floor,
        |p, z| Some((lhs.eval(p, z), rhs.eval(p, z))),
    )
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn validate_sum_formula(k: u32, r: u32, i: u32) -> Result<()> {
    if !(1 <= i && i <= r && r < k) {
        return Err(Error::InvalidParameters(format!(
            "sum formula needs 1 <= i <= r <= k - 1 (k = {k}, r = {r}, i = {i})"
        )));
    }
    Ok(())
}

/// `(1^{i-1}, 2, 1^{r-i})`.
pub fn height_one_base(r: u32, i: u32) -> Index {
    let mut parts = vec![1; r as usize];
    parts[i as usize - 1] = 2;
    Index::new(parts).expect("positive parts")
}

/// All indices of weight `k` and depth `r` whose `i`-th entry is at least 2
/// (1-based `i`).
pub fn sum_formula_lhs(k: u32, r: u32, i: u32) -> Result<IndexCombination> {
    validate_sum_formula(k, r, i)?;
    let base = height_one_base(r, i);
    let mut lhs = IndexCombination::new();
    for e in weak_compositions(k - r - 1, r as usize) {
        lhs.add(base.add(&e)?, 1);
    }
    Ok(lhs)
}

/// `(-1)^{i-1} (C(k-1, i-1) + (-1)^r C(k-1, r-i)) B_{p-k} / k mod p`, or
/// `None` when `B_{p-k}/k` is not defined at `p` (that is, `p <= k + 1`).
pub fn sum_formula_rhs(k: u32, r: u32, i: u32, p: Prime) -> Option<Residue> {
    sum_formula_rhs_impl(k, r, i, p, false)
}

/// Variant with `(-1)^{k+1}` on the first binomial. Agrees with
/// [`sum_formula_rhs`] for odd `k`, and for even `k` once `p >= k + 3`.
pub fn sum_formula_rhs_signed(k: u32, r: u32, i: u32, p: Prime) -> Option<Residue> {
    sum_formula_rhs_impl(k, r, i, p, true)
}

fn sum_formula_rhs_impl(k: u32, r: u32, i: u32, p: Prime, signed: bool) -> Option<Residue> {
    let q = bernoulli_quotient(k.into(), p).ok()?;
    let first =
        binomial((k - 1).into(), (i - 1).into()) * sign(if signed { k as usize + 1 } else { 0 });
    let second = binomial((k - 1).into(), (r - i).into()) * sign(r as usize);
    let c = (first + second) * sign(i as usize - 1);
    Some(reduce_bigint(&c, p) * q)
}

fn sum_formula_report(
    identity: &str,
    k: u32,
    r: u32,
    i: u32,
    window: &PrimeWindow,
    floor: Option<u64>,
    signed: bool,
) -> Result<CheckReport> {
    let lhs = sum_formula_lhs(k, r, i)?;
    let floor = floor.unwrap_or(default_floor(k.into(), 0));
    run_numeric(
        identity,
        params(vec![
            ("k", k.into()),
            ("r", r.into()),
            ("i", i.into()),
            ("window", window.to_string().into()),
        ]),
        window,
        floor,
        |p, z| {
            let rhs = sum_formula_rhs_impl(k, r, i, p, signed)?;
            Some((lhs.eval(p, z), rhs))
        },
    )
}

/// Sum of all weight-`k`, depth-`r` values with `k_i >= 2` against the
/// Bernoulli closed form. Primes `p <= k + 1` are omitted.
pub fn check_sum_formula(
    k: u32,
    r: u32,
    i: u32,
    window: &PrimeWindow,
    floor: Option<u64>,
) -> Result<CheckReport> {
    sum_formula_report("sum-formula", k, r, i, window, floor, false)
}

/// [`check_sum_formula`] against the `(-1)^{k+1}`-signed closed form.
pub fn check_sum_formula_signed(
    k: u32,
    r: u32,
    i: u32,
    window: &PrimeWindow,
    floor: Option<u64>,
) -> Result<CheckReport> {
    sum_formula_report("sum-formula-signed", k, r, i, window, floor, true)
}

/// `(1^a, 2, 1^b)`.
pub fn height_one_index(a: u32, b: u32) -> Index {
    let mut parts = vec![1; (a + b + 1) as usize];
    parts[a as usize] = 2;
    Index::new(parts).expect("positive parts")
}

/// `(-1)^{b+1} C(w, b+1) B_{p-w} / w mod p` with `w = a + b + 2`, or `None`
/// when `p <= w + 1`.
pub fn height_one_rhs(a: u32, b: u32, p: Prime) -> Option<Residue> {
    let w = a + b + 2;
    let q = bernoulli_quotient(w.into(), p).ok()?;
    let c = binomial(w.into(), (b + 1).into()) * sign(b as usize + 1);
    Some(reduce_bigint(&c, p) * q)
}

pub fn check_height_one(
    a: u32,
    b: u32,
    window: &PrimeWindow,
    floor: Option<u64>,
) -> Result<CheckReport> {
    let k = height_one_index(a, b);
    let floor = floor.unwrap_or(default_floor(k.weight().into(), 0));
    run_numeric(
        "height-one",
        params(vec![
            ("a", a.into()),
            ("b", b.into()),
            ("window", window.to_string().into()),
        ]),
        window,
        floor,
        |p, z| Some((z(&k, p), height_one_rhs(a, b, p)?)),
    )
}

fn ensure_ends_in_y(w: &Word) -> Result<()> {
    if w.ends_in_y() {
        Ok(())
    } else {
        Err(Error::NotAdmissible(w.to_string()))
    }
}

fn ensure_harmonic(w: &Word) -> Result<()> {
    if w.is_harmonic() {
        Ok(())
    } else {
        Err(Error::NotAdmissible(w.to_string()))
    }
}

fn word_value(w: &Word, p: Prime, z: ZetaFn) -> Residue {
    if w.is_empty() {
        Residue::one(p)
    } else {
        z(&w.to_index().expect("harmonic word"), p)
    }
}

/// The evaluation map turns the harmonic product into the product of values.
/// Either word may be empty.
pub fn check_stuffle_hom(
    w: &Word,
    wp: &Word,
    window: &PrimeWindow,
    floor: Option<u64>,
) -> Result<CheckReport> {
    ensure_harmonic(w)?;
    ensure_harmonic(wp)?;
    let prod = harmonic(&w.clone().into(), &wp.clone().into())?;
    let floor = floor.unwrap_or(default_floor((w.len() + wp.len()) as u64, 0));
    run_numeric(
        "stuffle",
        params(vec![
            ("w", w.to_string().into()),
            ("wp", wp.to_string().into()),
            ("window", window.to_string().into()),
        ]),
        window,
        floor,
        |p, z| {
            let lhs = zeta_poly_mod_p_with(&prod, p, z).expect("harmonic product");
            Some((lhs, word_value(w, p, z) * word_value(wp, p, z)))
        },
    )
}

/// `Z(w sh w') = (-1)^{|w|} Z(reverse(w) w')` with `w` reversed blockwise.
pub fn check_shuffle_duality(
    w: &Word,
    wp: &Word,
    window: &PrimeWindow,
    floor: Option<u64>,
) -> Result<CheckReport> {
    ensure_ends_in_y(w)?;
    ensure_ends_in_y(wp)?;
    let prod = shuffle(&w.clone().into(), &wp.clone().into());
    let joined = w.reverse_blocks()?.concat(wp).to_index()?;
    let s = sign(w.len());
    let floor = floor.unwrap_or(default_floor((w.len() + wp.len()) as u64, 0));
    run_numeric(
        "duality",
        params(vec![
            ("w", w.to_string().into()),
            ("wp", wp.to_string().into()),
            ("window", window.to_string().into()),
        ]),
        window,
        floor,
        |p, z| {
            let lhs = zeta_poly_mod_p_with(&prod, p, z).expect("shuffle of harmonic words");
            Some((lhs, Residue::from_i64(s, p) * z(&joined, p)))
        },
    )
}

/// `(a, ..., a)` with `r` parts vanishes.
pub fn check_homogeneous_zero(
    a: u32,
    r: u32,
    window: &PrimeWindow,
    floor: Option<u64>,
) -> Result<CheckReport> {
    let k = Index::repeated(a, r as usize)?;
    let floor = floor.unwrap_or(default_floor(k.weight().into(), 0));
    run_numeric(
        "homogeneous",
        params(vec![
            ("a", a.into()),
            ("r", r.into()),
            ("window", window.to_string().into()),
        ]),
        window,
        floor,
        |p, z| Some((z(&k, p), Residue::zero(p))),
    )
}

/// `sum_{i=0}^{min(n,r)} (-1)^i sum_{m+l=n-i} y^m A(k, l, i)` (concatenation).
pub fn lemma_eq2_polynomial(k: &Index, n: u32) -> NCPolynomial {
    let mut out = NCPolynomial::zero();
    for i in 0..=(n as usize).min(k.depth()) {
        let rest = n - i as u32;
        let mut block = NCPolynomial::zero();
        for l in 0..=rest {
            let m = (rest - l) as usize;
            block += &NCPolynomial::from(Word::y_power(m)).concat(&shifted_insertion_sum(k, l, i));
        }
        out += &block.scale(&BigInt::from(sign(i)));
    }
    out
}

/// Right side of the lemmas: 0 for `n >= 1`. For `n = 0` both lemmas reduce
/// to the value of `k` itself, which is what is compared instead.
fn lemma_rhs(k: &Index, n: u32, p: Prime, z: ZetaFn) -> Residue {
    if n == 0 {
        z(k, p)
    } else {
        Residue::zero(p)
    }
}

fn lemma_params(k: &Index, n: u32, window: &PrimeWindow) -> Map<String, Value> {
    let mut m = params(vec![
        ("index", k.to_string().into()),
        ("n", n.into()),
        ("window", window.to_string().into()),
    ]);
    if n == 0 {
        m.insert("outside_lemma_range".into(), true.into());
    }
    m
}

pub fn check_lemma_eq2(
    k: &Index,
    n: u32,
    window: &PrimeWindow,
    floor: Option<u64>,
) -> Result<CheckReport> {
    let poly = lemma_eq2_polynomial(k, n);
    let floor = floor.unwrap_or(default_floor(k.weight().into(), n.into()));
    run_numeric(
        "lemma2",
        lemma_params(k, n, window),
        window,
        floor,
        |p, z| {
            let lhs = zeta_poly_mod_p_with(&poly, p, z).expect("words end in y");
            Some((lhs, lemma_rhs(k, n, p, z)))
        },
    )
}

/// The `(i, lambda)` block of the key lemma:
/// `sum_{wt(e) = n - i} ((k + lambda)^dual + e)^dual` over `s + i` parts.
pub fn key_lemma_block(k: &Index, lambda: &BinaryVector, n: u32) -> Result<IndexCombination> {
    let i = lambda.weight() as u32;
    let lifted = k.add_binary(lambda)?;
    let dual = lifted.hoffman_dual();
    let mut out = IndexCombination::new();
    if i > n {
        return Ok(out);
    }
    for e in weak_compositions(n - i, dual.depth()) {
        out.add(dual.add(&e)?.hoffman_dual(), 1);
    }
    Ok(out)
}

/// Signed sum of all key-lemma blocks, built from index operations only.
pub fn key_lemma_combination(k: &Index, n: u32) -> IndexCombination {
    let mut out = IndexCombination::new();
    for i in 0..=(n as usize).min(k.depth()) {
        for lambda in binary_vectors(k.depth(), i).expect("i <= depth") {
            let block = key_lemma_block(k, &lambda, n).expect("lengths agree");
            for (idx, c) in block.terms() {
                out.add(idx.clone(), sign(i) * c);
            }
        }
    }
    out
}

/// Also compares the blocks term by term with the word-side reading; a
/// mismatch fails the report even when every residue vanishes.
pub fn check_key_lemma(
    k: &Index,
    n: u32,
    window: &PrimeWindow,
    floor: Option<u64>,
) -> Result<CheckReport> {
    let comb = key_lemma_combination(k, n);
    let floor = floor.unwrap_or(default_floor(k.weight().into(), n.into()));
    let agree = key_lemma_terms_agree(k, n);
    let mut params = lemma_params(k, n, window);
    params.insert("terms_agree".into(), agree.into());
    let mut report = run_numeric("key-lemma", params, window, floor, |p, z| {
        Some((comb.eval(p, z), lemma_rhs(k, n, p, z)))
    })?;
    report.summary.pass &= agree;
    Ok(report)
}

/// One `(i, lambda)` term written both ways: as words
/// `sum_{m+l=n-i} y^m a_l(k - 1 + lambda)` and as the dualised index block.
#[derive(Debug, Clone)]
pub struct TermComparison {
    pub lambda: BinaryVector,
    pub word_side: NCPolynomial,
    pub index_side: NCPolynomial,
}

impl TermComparison {
    pub fn agrees(&self) -> bool {
        self.word_side == self.index_side
    }
}

/// Term-by-term comparison of the two lemma readings.
pub fn key_lemma_terms(k: &Index, n: u32) -> Vec<TermComparison> {
    let base = k.decremented();
    let mut out = Vec::new();
    for i in 0..=(n as usize).min(k.depth()) {
        let rest = n - i as u32;
        for lambda in binary_vectors(k.depth(), i).expect("i <= depth") {
            let args: Vec<u32> = base
                .parts()
                .iter()
                .zip(lambda.entries())
                .map(|(&c, &b)| c + u32::from(b))
                .collect();
            let args = Composition0::new(args);
            let mut word_side = NCPolynomial::zero();
            for l in 0..=rest {
                let m = (rest - l) as usize;
                word_side += &NCPolynomial::from(Word::y_power(m)).concat(&insertion_sum(&args, l));
            }
            let index_side = key_lemma_block(k, &lambda, n)
                .expect("lengths agree")
                .to_polynomial();
            out.push(TermComparison {
                lambda,
                word_side,
                index_side,
            });
        }
    }
    out
}

pub fn key_lemma_terms_agree(k: &Index, n: u32) -> bool {
    key_lemma_terms(k, n).iter().all(TermComparison::agrees)
}

/// Exact equality of both sides of the `u^n` coefficient identity.
pub fn check_eq3_symbolic(k: &Index, n: u32) -> CheckReport {
    let (lhs, rhs) = stuffle_expansion_sides(k, n);
    let equal = lhs == rhs;
    CheckReport::symbolic(
        "eq3",
        params(vec![("index", k.to_string().into()), ("n", n.into())]),
        &lhs,
        &rhs,
        equal,
    )
}

/// Exact equality of `1/(1 - y u) * w` and `1/(1 - y u) sh Delta_u(w)`
/// through `u^order`.
pub fn check_ikz_truncated(w: &Word, order: usize) -> Result<CheckReport> {
    ensure_harmonic(w)?;
    let (lhs, rhs) = harmonic_shuffle_sides(&w.clone().into(), order)?;
    let equal = lhs == rhs;
    let show = |s: &crate::word_algebra::USeries| {
        s.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| format!("u^{k}: {c}"))
            .collect::<Vec<_>>()
            .join("; ")
    };
    Ok(CheckReport::symbolic(
        "ikz",
        params(vec![("w", w.to_string().into()), ("order", order.into())]),
        &show(&lhs),
        &show(&rhs),
        equal,
    ))
}
