//! The full verification battery, parameterised by weight, shift and
//! prime window. Every battery is also callable on its own with explicit
//! bounds.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::checks::*;
use crate::error::Result;
use crate::indices::{indices_up_to_weight, Index};
use crate::modp::{bernoulli_mod_p, primes_in, zeta_mod_p, zeta_mod_p_nested, Prime, PrimeWindow};
use crate::word_algebra::{
    harmonic, harmonic_words_up_to, shuffle, total_multiplicity, Letter, NCPolynomial, Word,
};

/// Failure descriptions kept per battery.
const MAX_RECORDED_FAILURES: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct BatteryOutcome {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl BatteryOutcome {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

struct Tally {
    name: &'static str,
    start: Instant,
    instances: usize,
    failures: Vec<String>,
    failure_count: usize,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            start: Instant::now(),
            instances: 0,
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(what());
            }
        }
    }

    fn report(&mut self, r: &crate::CheckReport) {
        let ok = r.passed();
        self.record(ok, || {
            format!(
                "{} {:?} failed at {:?}",
                r.identity,
                r.params,
                r.failures_above_floor()
            )
        });
    }

    fn finish(self) -> BatteryOutcome {
        BatteryOutcome {
            name: self.name.to_string(),
            instances: self.instances,
            failures: self.failures,
            failure_count: self.failure_count,
            elapsed: self.start.elapsed(),
        }
    }
}

fn pr(p: u64) -> Prime {
    Prime::new(p).expect("literal prime")
}

/// The worked dual example plus involution and depth identity for all
/// indices up to `max_weight`.
pub fn battery_hoffman_dual(max_weight: u32) -> BatteryOutcome {
    let mut t = Tally::new("hoffman-dual");
    let k: Index = "2,3,1,2".parse().expect("literal");
    let d = k.hoffman_dual();
    t.record(d.to_string() == "1,2,1,3,1", || {
        format!("dual of 2,3,1,2 gave {d}")
    });
    for k in indices_up_to_weight(max_weight) {
        let d = k.hoffman_dual();
        let ok = d.hoffman_dual() == k && k.depth() + d.depth() == k.weight() as usize + 1;
        t.record(ok, || format!("dual laws fail for {k}"));
    }
    t.finish()
}

pub fn battery_eq3(max_weight: u32, max_n: u32) -> BatteryOutcome {
    let mut t = Tally::new("eq3-symbolic");
    for k in indices_up_to_weight(max_weight) {
        for n in 0..=max_n {
            t.report(&check_eq3_symbolic(&k, n));
        }
    }
    t.finish()
}

pub fn battery_ikz(max_len: usize, order: usize) -> BatteryOutcome {
    let mut t = Tally::new("ikz-truncated");
    for w in harmonic_words_up_to(max_len) {
        match check_ikz_truncated(&w, order) {
            Ok(r) => t.report(&r),
            Err(e) => t.record(false, || format!("{w}: {e}")),
        }
    }
    t.finish()
}

pub fn battery_ohno(max_weight: u32, max_n: u32, window: &PrimeWindow) -> Result<BatteryOutcome> {
    let mut t = Tally::new("ohno");
    for k in indices_up_to_weight(max_weight) {
        for n in 0..=max_n {
            t.report(&check_ohno(&k, n, window, None)?);
        }
    }
    Ok(t.finish())
}

/// Both closed forms for every `3 <= k <= max_k` and `1 <= i <= r <= k - 1`,
/// and vanishing of the left side for even `k` at every `p >= k + 3`.
pub fn battery_sum_formula(max_k: u32, window: &PrimeWindow) -> Result<BatteryOutcome> {
    let mut t = Tally::new("sum-formula");
    for k in 3..=max_k {
        for r in 1..k {
            for i in 1..=r {
                t.report(&check_sum_formula(k, r, i, window, None)?);
                t.report(&check_sum_formula_signed(k, r, i, window, None)?);
                if k % 2 == 0 {
                    let lhs = sum_formula_lhs(k, r, i)?;
                    for p in window
                        .primes()
                        .into_iter()
                        .filter(|p| p.get() >= u64::from(k) + 3)
                    {
                        let v = lhs.eval(p, zeta_mod_p);
                        t.record(v.is_zero(), || {
                            format!("even k={k} r={r} i={i}: lhs {v} at {p}")
                        });
                    }
                }
            }
        }
    }
    Ok(t.finish())
}

/// Hand-checkable residues modulo 5.
pub fn battery_spot_congruences() -> BatteryOutcome {
    let mut t = Tally::new("spot-congruences");
    let p5 = pr(5);
    let k21: Index = "2,1".parse().expect("literal");
    let k12: Index = "1,2".parse().expect("literal");
    for (name, v) in [
        ("zeta(2,1) fast", zeta_mod_p(&k21, p5).value()),
        ("zeta(2,1) nested", zeta_mod_p_nested(&k21, p5).value()),
        (
            "B_2 mod 5",
            bernoulli_mod_p(3, p5)
                .map(|r| r.value())
                .unwrap_or(u64::MAX),
        ),
    ] {
        t.record(v == 1, || format!("{name} = {v}, expected 1"));
    }
    for (name, v) in [
        ("zeta(1,2) fast", zeta_mod_p(&k12, p5).value()),
        ("zeta(1,2) nested", zeta_mod_p_nested(&k12, p5).value()),
    ] {
        t.record(v == 4, || format!("{name} = {v}, expected 4"));
    }
    t.finish()
}

pub fn battery_homogeneous(max_a: u32, max_r: u32, window: &PrimeWindow) -> Result<BatteryOutcome> {
    let mut t = Tally::new("homogeneous");
    for a in 1..=max_a {
        for r in 1..=max_r {
            t.report(&check_homogeneous_zero(a, r, window, None)?);
        }
    }
    Ok(t.finish())
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize, harmonic_only: bool) -> Word {
    let len = rng.gen_range(0..=max_len);
    let mut letters: Vec<Letter> = (0..len)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Letter::X
            } else {
                Letter::Y
            }
        })
        .collect();
    if harmonic_only {
        if let Some(last) = letters.last_mut() {
            *last = Letter::Y;
        }
    }
    Word::from_letters(letters)
}

fn binom(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Commutativity and associativity of both products on seeded random
/// words of weight at most `max_len`, plus the shuffle term count.
pub fn battery_algebra_laws(
    pairs: usize,
    triples: usize,
    max_len: usize,
    seed: u64,
) -> BatteryOutcome {
    let mut t = Tally::new("algebra-laws");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pairs {
        let a = random_word(&mut rng, max_len, false);
        let b = random_word(&mut rng, max_len, false);
        let (pa, pb): (NCPolynomial, NCPolynomial) = (a.clone().into(), b.clone().into());
        let ab = shuffle(&pa, &pb);
        t.record(ab == shuffle(&pb, &pa), || {
            format!("shuffle not commutative on {a}, {b}")
        });
        let count = total_multiplicity(&ab) == binom(a.len() + b.len(), a.len());
        t.record(count, || format!("shuffle term count wrong on {a}, {b}"));

        let a = random_word(&mut rng, max_len, true);
        let b = random_word(&mut rng, max_len, true);
        let (pa, pb): (NCPolynomial, NCPolynomial) = (a.clone().into(), b.clone().into());
        let ok = harmonic(&pa, &pb).ok() == harmonic(&pb, &pa).ok();
        t.record(ok, || format!("harmonic not commutative on {a}, {b}"));
    }
    for _ in 0..triples {
        let ws: Vec<NCPolynomial> = (0..3)
            .map(|_| random_word(&mut rng, max_len, false).into())
            .collect();
        let left = shuffle(&shuffle(&ws[0], &ws[1]), &ws[2]);
        let right = shuffle(&ws[0], &shuffle(&ws[1], &ws[2]));
        t.record(left == right, || {
            format!("shuffle not associative on {} {} {}", ws[0], ws[1], ws[2])
        });

        let hs: Vec<NCPolynomial> = (0..3)
            .map(|_| random_word(&mut rng, max_len, true).into())
            .collect();
        let h = |a: &NCPolynomial, b: &NCPolynomial| harmonic(a, b).expect("harmonic words");
        let left = h(&h(&hs[0], &hs[1]), &hs[2]);
        let right = h(&hs[0], &h(&hs[1], &hs[2]));
        t.record(left == right, || {
            format!("harmonic not associative on {} {} {}", hs[0], hs[1], hs[2])
        });
    }
    t.finish()
}

/// Harmonic homomorphism for all pairs of harmonic words (either may be
/// empty) and shuffle duality for all pairs of nonempty ones, with total
/// weight at most `max_total`.
pub fn battery_evaluation_products(
    max_total: usize,
    window: &PrimeWindow,
) -> Result<BatteryOutcome> {
    let mut t = Tally::new("evaluation-products");
    let words: Vec<Word> = harmonic_words_up_to(max_total).collect();
    for a in &words {
        for b in words.iter().filter(|b| a.len() + b.len() <= max_total) {
            t.report(&check_stuffle_hom(a, b, window, None)?);
            if !a.is_empty() && !b.is_empty() {
                t.report(&check_shuffle_duality(a, b, window, None)?);
            }
        }
    }
    Ok(t.finish())
}

/// Fast evaluator against literal nested loops.
pub fn battery_oracle(max_p: u64, max_weight: u32, max_depth: usize) -> BatteryOutcome {
    let mut t = Tally::new("oracle-equivalence");
    let primes = primes_in(2, max_p.max(2)).expect("valid bounds");
    for k in indices_up_to_weight(max_weight).filter(|k| k.depth() <= max_depth) {
        for &p in &primes {
            let (a, b) = (zeta_mod_p(&k, p), zeta_mod_p_nested(&k, p));
            t.record(a == b, || format!("k={k} p={p}: fast {a} nested {b}"));
        }
    }
    t.finish()
}

/// Both lemma readings vanish above the floor, give identical residues at
/// every prime, and agree term by term as word polynomials.
pub fn battery_lemmas(max_weight: u32, max_n: u32, window: &PrimeWindow) -> Result<BatteryOutcome> {
    let mut t = Tally::new("lemmas");
    for k in indices_up_to_weight(max_weight) {
        for n in 1..=max_n {
            let a = check_lemma_eq2(&k, n, window, None)?;
            let b = check_key_lemma(&k, n, window, None)?;
            t.report(&a);
            t.report(&b);
            let same = a
                .rows()
                .iter()
                .zip(b.rows())
                .all(|(x, y)| x.p == y.p && x.lhs == y.lhs)
                && a.rows().len() == b.rows().len();
            t.record(same, || format!("lemma readings differ for k={k} n={n}"));
            t.record(key_lemma_terms_agree(&k, n), || {
                format!("term mismatch for k={k} n={n}")
            });
        }
    }
    Ok(t.finish())
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub max_weight: u32,
    pub max_n: u32,
    pub window: PrimeWindow,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_weight: 7,
            max_n: 3,
            window: PrimeWindow { lo: 2, hi: 200 },
            seed: 0x5eed,
        }
    }
}

/// Runs every battery. With the defaults (`max_weight = 7`, `max_n = 3`)
/// the per-battery bounds are: duals up to weight 10, symbolic coefficient
/// identity up to weight 6, truncated series identity for words of length
/// at most 5 through `u^4`, shifted-sum duality up to weight 7, sum formula
/// for `k <= 9`, product evaluations up to total weight 6, evaluator
/// cross-check up to weight 6 and `p <= 50`, lemmas up to weight 5.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<BatteryOutcome>> {
    let w = cfg.max_weight;
    let n = cfg.max_n;
    let sub = |d: u32| w.saturating_sub(d).max(1);
    Ok(vec![
        battery_hoffman_dual(w + 3),
        battery_eq3(sub(1), n),
        battery_ikz(sub(2) as usize, n as usize + 1),
        battery_ohno(w, n, &cfg.window)?,
        battery_sum_formula(w + 2, &cfg.window)?,
        battery_spot_congruences(),
        battery_homogeneous(3, 4, &cfg.window)?,
        battery_algebra_laws(120, 100, sub(1) as usize, cfg.seed),
        battery_evaluation_products(sub(1) as usize, &cfg.window)?,
        battery_oracle(50, sub(1), 3),
        battery_lemmas(sub(2), n, &cfg.window)?,
    ])
}
