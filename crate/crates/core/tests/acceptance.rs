//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fmzv::indices::indices_up_to_weight;
use fmzv::modp::{bernoulli_mod_p, zeta_mod_p, zeta_mod_p_nested, Prime, PrimeWindow};
use fmzv::verify::suite::{
    battery_algebra_laws, battery_eq3, battery_hoffman_dual, battery_ikz, battery_oracle,
    BatteryOutcome,
};
use fmzv::verify::{
    check_homogeneous_zero, check_key_lemma, check_lemma_eq2, check_ohno, check_shuffle_duality,
    check_stuffle_hom, check_sum_formula, check_sum_formula_signed, key_lemma_terms_agree,
    sum_formula_lhs, CheckReport,
};
use fmzv::word_algebra::{harmonic_words_up_to, Word};
use fmzv::{Index, Result};

type Criterion = (&'static str, fn() -> Result<Outcome>);

struct Outcome {
    ok: bool,
    detail: String,
}

#[derive(Default)]
struct Count {
    instances: usize,
    failures: Vec<String>,
}

impl Count {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn report(&mut self, r: &CheckReport) {
        self.record(r.passed(), || {
            format!(
                "{} {:?} failed at {:?}",
                r.identity,
                r.params,
                r.failures_above_floor()
            )
        });
    }

    fn outcome(self, limit: Option<(Duration, Duration)>) -> Outcome {
        let mut ok = self.failures.is_empty();
        let mut detail = format!(
            "{} instances, {} failures",
            self.instances,
            self.failures.len()
        );
        if let Some((took, max)) = limit {
            ok &= took < max;
            detail += &format!(", {:.2?} (limit {:?})", took, max);
        }
        if let Some(first) = self.failures.first() {
            detail += &format!("; first: {first}");
        }
        Outcome { ok, detail }
    }
}

fn from_battery(b: BatteryOutcome, max: Duration) -> Outcome {
    let mut c = Count {
        instances: b.instances,
        failures: b.failures,
    };
    if b.failure_count > c.failures.len() {
        c.failures
            .push(format!("... {} more", b.failure_count - c.failures.len()));
    }
    c.outcome(Some((b.elapsed, max)))
}

fn window(s: &str) -> PrimeWindow {
    s.parse().expect("window literal")
}

fn pr(p: u64) -> Prime {
    Prime::new(p).expect("prime literal")
}

fn dual() -> Result<Outcome> {
    let mut c = Count::default();
    let d = "2,3,1,2".parse::<Index>()?.hoffman_dual();
    c.record(d.to_string() == "1,2,1,3,1", || {
        format!("dual of 2,3,1,2 is {d}")
    });
    let b = from_battery(battery_hoffman_dual(10), Duration::from_secs(5));
    c.record(b.ok, || b.detail.clone());
    let mut out = c.outcome(None);
    out.detail = format!("example ok, {}", b.detail);
    Ok(out)
}

fn eq3() -> Result<Outcome> {
    Ok(from_battery(battery_eq3(6, 3), Duration::from_secs(60)))
}

fn ikz() -> Result<Outcome> {
    Ok(from_battery(battery_ikz(5, 4), Duration::from_secs(60)))
}

fn ohno() -> Result<Outcome> {
    let start = Instant::now();
    let win = window("2:200");
    let mut c = Count::default();
    for k in indices_up_to_weight(7) {
        for n in 0..=3 {
            let floor = u64::from(k.weight()) + u64::from(n) + 3;
            c.report(&check_ohno(&k, n, &win, Some(floor))?);
        }
    }
    Ok(c.outcome(Some((start.elapsed(), Duration::from_secs(300)))))
}

fn sum_formula() -> Result<Outcome> {
    let win = window("2:300");
    let mut c = Count::default();
    for k in 3..=9u32 {
        let floor = u64::from(k) + 3;
        for r in 1..k {
            for i in 1..=r {
                c.report(&check_sum_formula(k, r, i, &win, Some(floor))?);
                c.report(&check_sum_formula_signed(k, r, i, &win, Some(floor))?);
                if k % 2 == 0 {
                    let lhs = sum_formula_lhs(k, r, i)?;
                    for p in win.primes().into_iter().filter(|p| p.get() >= floor) {
                        let v = lhs.eval(p, zeta_mod_p);
                        c.record(v.is_zero(), || {
                            format!("k={k} r={r} i={i}: lhs {v} at p={p}")
                        });
                    }
                }
            }
        }
    }
    Ok(c.outcome(None))
}

fn spot() -> Result<Outcome> {
    let p5 = pr(5);
    let k21: Index = "2,1".parse()?;
    let k12: Index = "1,2".parse()?;
    let mut c = Count::default();
    let fast = zeta_mod_p(&k21, p5).value();
    let nested = zeta_mod_p_nested(&k21, p5).value();
    let bern = bernoulli_mod_p(3, p5)?.value();
    c.record(fast == 1 && nested == 1, || {
        format!("zeta(2,1) mod 5: {fast} / {nested}")
    });
    c.record(bern == 1 && bern == fast, || format!("B_2 mod 5 = {bern}"));
    let fast = zeta_mod_p(&k12, p5).value();
    let nested = zeta_mod_p_nested(&k12, p5).value();
    c.record(fast == 4 && nested == 4, || {
        format!("zeta(1,2) mod 5: {fast} / {nested}")
    });
    Ok(c.outcome(None))
}

fn homogeneous() -> Result<Outcome> {
    let win = window("2:200");
    let mut c = Count::default();
    let mut below = Vec::new();
    for a in 1..=3 {
        for r in 1..=4 {
            let rep = check_homogeneous_zero(a, r, &win, None)?;
            below.extend(
                rep.rows_below_floor()
                    .filter(|row| !row.pass)
                    .map(|row| format!("({a}^{r}) at {}", row.p)),
            );
            c.report(&rep);
        }
    }
    let mut out = c.outcome(None);
    out.detail += &format!("; nonzero below floor: {}", below.join(" "));
    Ok(out)
}

fn algebra_laws() -> Result<Outcome> {
    let b = battery_algebra_laws(120, 100, 6, 0x5eed);
    let mut out = from_battery(b, Duration::from_secs(600));
    out.detail = format!("120 pairs, 100 triples: {}", out.detail);
    Ok(out)
}

fn evaluation_products() -> Result<Outcome> {
    let win = window("2:200");
    let words: Vec<Word> = harmonic_words_up_to(6).collect();
    let mut c = Count::default();
    for a in &words {
        for b in words.iter().filter(|b| a.len() + b.len() <= 6) {
            c.report(&check_stuffle_hom(a, b, &win, Some(9))?);
            if !a.is_empty() && !b.is_empty() {
                c.report(&check_shuffle_duality(a, b, &win, Some(9))?);
            }
        }
    }
    Ok(c.outcome(None))
}

fn oracle() -> Result<Outcome> {
    Ok(from_battery(
        battery_oracle(50, 6, 3),
        Duration::from_secs(600),
    ))
}

fn lemmas() -> Result<Outcome> {
    let win = window("2:200");
    let mut c = Count::default();
    for k in indices_up_to_weight(5) {
        for n in 1..=3 {
            let floor = u64::from(k.weight()) + u64::from(n) + 3;
            let a = check_lemma_eq2(&k, n, &win, Some(floor))?;
            let b = check_key_lemma(&k, n, &win, Some(floor))?;
            c.report(&a);
            c.report(&b);
            let same = a.rows().len() == b.rows().len()
                && a.rows()
                    .iter()
                    .zip(b.rows())
                    .all(|(x, y)| x.p == y.p && x.lhs == y.lhs);
            c.record(same, || format!("readings differ for k={k} n={n}"));
            c.record(key_lemma_terms_agree(&k, n), || {
                format!("terms differ for k={k} n={n}")
            });
        }
    }
    Ok(c.outcome(None))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "dual example, involution and depth identity (wt <= 10)",
            dual,
        ),
        ("symbolic coefficient identity (wt <= 6, n <= 3)", eq3),
        ("truncated series identity (|w| <= 5, through u^4)", ikz),
        (
            "shifted-sum duality (wt <= 7, n <= 3, p in (wt+n+2, 200])",
            ohno,
        ),
        (
            "sum formula (3 <= k <= 9, p in (k+2, 300]) and even-k vanishing",
            sum_formula,
        ),
        ("spot congruences mod 5", spot),
        (
            "homogeneous vanishing (a <= 3, r <= 4, p <= 200)",
            homogeneous,
        ),
        ("product laws on random words (weight <= 6)", algebra_laws),
        (
            "evaluation of products (|w|+|w'| <= 6, p in (8, 200])",
            evaluation_products,
        ),
        (
            "fast evaluator vs nested loops (p <= 50, wt <= 6, depth <= 3)",
            oracle,
        ),
        ("lemma readings vanish and agree (wt <= 5, n <= 3)", lemmas),
    ];
    let total = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match run() {
            Ok(o) => (o.ok, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {name} [{detail}] ({:.2?})",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed()
        );
    }
    println!(
        "acceptance: {} of 11 passed in {:.2?}",
        11 - failed,
        total.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
