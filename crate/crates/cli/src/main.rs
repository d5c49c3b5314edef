use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use fmzv::modp::{bernoulli_mod_p, zeta_mod_p};
use fmzv::verify::suite::{run_suite, BatteryOutcome, SuiteConfig};
use fmzv::verify::{self, CheckReport, Results};
use fmzv::{Index, PrimeWindow, Word};
use serde_json::json;

/// Finite multiple zeta values modulo primes: evaluation and identity checks.
#[derive(Debug, Parser)]
#[command(name = "fmzv", version)]
struct Cli {
    /// Inclusive prime window LO:HI.
    #[arg(
        long,
        global = true,
        env = "FMZV_DEFAULT_PRIMES",
        default_value = "2:200"
    )]
    primes: PrimeWindow,

    /// Primes below this are reported but never counted as failures
    /// (numeric checks only; default weight + n + 3).
    #[arg(long, global = true)]
    floor: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hoffman dual of an index.
    Dual { index: Index },
    /// Residue of the nested harmonic sum at each prime.
    Zeta {
        #[arg(long)]
        index: Index,
    },
    /// B_{p-k} mod p at each prime with k <= p - 2.
    Bernoulli {
        #[arg(long)]
        k: u64,
    },
    /// Check one identity.
    #[command(subcommand)]
    Check(Check),
    /// Run every battery.
    Suite {
        #[arg(long, default_value_t = 7)]
        max_weight: u32,
        #[arg(long, default_value_t = 3)]
        max_n: u32,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum Check {
    /// Shifted sums over an index and over its dual agree.
    Ohno {
        #[arg(long)]
        index: Index,
        #[arg(long)]
        n: u32,
    },
    /// Sum over weight k, depth r, entry i at least 2 against its Bernoulli closed form.
    SumFormula {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        i: u32,
    },
    /// (1^a, 2, 1^b) against its Bernoulli closed form.
    HeightOne {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
    },
    /// Evaluation turns the harmonic product into multiplication.
    Stuffle {
        #[arg(long)]
        w: Word,
        #[arg(long)]
        wp: Word,
    },
    /// Evaluation of a shuffle product as a single signed value.
    Duality {
        #[arg(long)]
        w: Word,
        #[arg(long)]
        wp: Word,
    },
    /// (a, ..., a) with r parts vanishes.
    Homogeneous {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        r: u32,
    },
    /// Signed word-side lemma sum vanishes.
    Lemma2 {
        #[arg(long)]
        index: Index,
        #[arg(long)]
        n: u32,
    },
    /// Index-side lemma sum vanishes and matches the word side term by term.
    KeyLemma {
        #[arg(long)]
        index: Index,
        #[arg(long)]
        n: u32,
    },
    /// Exact u^n coefficient identity (symbolic).
    Eq3 {
        #[arg(long)]
        index: Index,
        #[arg(long)]
        n: u32,
    },
    /// Harmonic and shuffle sides of the u-series identity through u^order (symbolic).
    Ikz {
        #[arg(long)]
        w: Word,
        #[arg(long)]
        order: usize,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    if let Some(j) = cli.jobs {
        if j == 0 {
            bail!("invalid value '0' for '--jobs'");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()?;
    }
    if let Some(f) = cli.floor {
        if f > cli.primes.hi {
            bail!(
                "invalid value '{f}' for '--floor': exceeds window upper bound {}",
                cli.primes.hi
            );
        }
    }
    let (text, ok) = match &cli.command {
        Command::Dual { index } => (render_dual(index, cli.format)?, true),
        Command::Zeta { index } => {
            let rows = cli
                .primes
                .primes()
                .into_iter()
                .map(|p| (p.get(), zeta_mod_p(index, p).value()));
            let meta = json!({"index": index.to_string(), "window": cli.primes.to_string()});
            (render_values(meta, rows.collect(), cli.format)?, true)
        }
        Command::Bernoulli { k } => {
            let rows = cli
                .primes
                .primes()
                .into_iter()
                .filter_map(|p| bernoulli_mod_p(*k, p).ok().map(|b| (p.get(), b.value())));
            let meta = json!({"k": k, "window": cli.primes.to_string()});
            (render_values(meta, rows.collect(), cli.format)?, true)
        }
        Command::Check(c) => {
            let report = run_check(c, &cli.primes, cli.floor)?;
            (render_report(&report, cli.format)?, report.passed())
        }
        Command::Suite {
            max_weight,
            max_n,
            seed,
        } => {
            let cfg = SuiteConfig {
                max_weight: *max_weight,
                max_n: *max_n,
                window: cli.primes,
                seed: *seed,
            };
            let out = run_suite(&cfg)?;
            let ok = out.iter().all(BatteryOutcome::passed);
            (render_suite(&cfg, &out, cli.format)?, ok)
        }
    };
    match &cli.output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(ok)
}

fn run_check(c: &Check, w: &PrimeWindow, floor: Option<u64>) -> fmzv::Result<CheckReport> {
    match c {
        Check::Ohno { index, n } => verify::check_ohno(index, *n, w, floor),
        Check::SumFormula { k, r, i } => verify::check_sum_formula(*k, *r, *i, w, floor),
        Check::HeightOne { a, b } => verify::check_height_one(*a, *b, w, floor),
        Check::Stuffle { w: a, wp } => verify::check_stuffle_hom(a, wp, w, floor),
        Check::Duality { w: a, wp } => verify::check_shuffle_duality(a, wp, w, floor),
        Check::Homogeneous { a, r } => verify::check_homogeneous_zero(*a, *r, w, floor),
        Check::Lemma2 { index, n } => verify::check_lemma_eq2(index, *n, w, floor),
        Check::KeyLemma { index, n } => verify::check_key_lemma(index, *n, w, floor),
        Check::Eq3 { index, n } => Ok(verify::check_eq3_symbolic(index, *n)),
        Check::Ikz { w: word, order } => verify::check_ikz_truncated(word, *order),
    }
}

fn csv_string(
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> anyhow::Result<String> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(header)?;
    for row in rows {
        wtr.write_record(&row)?;
    }
    Ok(String::from_utf8(wtr.into_inner()?)?)
}

fn json_line(v: &serde_json::Value) -> anyhow::Result<String> {
    Ok(serde_json::to_string(v)? + "\n")
}

fn render_dual(index: &Index, format: Format) -> anyhow::Result<String> {
    let dual = index.hoffman_dual();
    match format {
        Format::Table => Ok(format!("{dual}\n")),
        Format::Json => json_line(&json!({"index": index.to_string(), "dual": dual.to_string()})),
        Format::Csv => csv_string(
            &["index", "dual"],
            [vec![index.to_string(), dual.to_string()]],
        ),
    }
}

fn render_values(
    meta: serde_json::Value,
    rows: Vec<(u64, u64)>,
    format: Format,
) -> anyhow::Result<String> {
    match format {
        Format::Table => Ok(rows.iter().map(|(p, v)| format!("{p},{v}\n")).collect()),
        Format::Json => {
            let mut obj = meta;
            obj["values"] = rows
                .iter()
                .map(|&(p, v)| json!({"p": p, "value": v}))
                .collect();
            json_line(&obj)
        }
        Format::Csv => csv_string(
            &["p", "value"],
            rows.iter().map(|(p, v)| vec![p.to_string(), v.to_string()]),
        ),
    }
}

fn render_report(r: &CheckReport, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(r.to_json() + "\n"),
        Format::Csv => match &r.results {
            Results::Numeric(rows) => csv_string(
                &["p", "lhs", "rhs", "pass"],
                rows.iter().map(|x| {
                    vec![
                        x.p.to_string(),
                        x.lhs.to_string(),
                        x.rhs.to_string(),
                        x.pass.to_string(),
                    ]
                }),
            ),
            Results::Symbolic(s) => csv_string(
                &["equal", "lhs", "rhs"],
                [vec![
                    s.equal.to_string(),
                    s.lhs.clone().unwrap_or_default(),
                    s.rhs.clone().unwrap_or_default(),
                ]],
            ),
        },
        Format::Table => Ok(report_table(r)),
    }
}

fn report_table(r: &CheckReport) -> String {
    let mut out = String::new();
    let params: Vec<String> = r
        .params
        .iter()
        .map(|(k, v)| match v {
            serde_json::Value::String(s) => format!("{k}={s}"),
            v => format!("{k}={v}"),
        })
        .collect();
    let _ = writeln!(out, "{} {}", r.identity, params.join(" "));
    match &r.results {
        Results::Symbolic(s) => {
            let _ = writeln!(out, "equal: {}", s.equal);
            if let (Some(l), Some(rr)) = (&s.lhs, &s.rhs) {
                let _ = writeln!(out, "lhs: {l}\nrhs: {rr}");
            }
        }
        Results::Numeric(rows) => {
            let width = |f: fn(&verify::PrimeResult) -> u64, title: &str| {
                rows.iter()
                    .map(|x| f(x).to_string().len())
                    .max()
                    .unwrap_or(0)
                    .max(title.len())
            };
            let (wp, wl, wr) = (
                width(|x| x.p, "p"),
                width(|x| x.lhs, "lhs"),
                width(|x| x.rhs, "rhs"),
            );
            let line = |out: &mut String, p: &str, l: &str, rr: &str, ok: &str| {
                let _ = writeln!(out, "  {p:>wp$}  {l:>wl$}  {rr:>wr$}  {ok}");
            };
            let _ = writeln!(out, "floor: {}", r.floor);
            line(&mut out, "p", "lhs", "rhs", "pass");
            for x in r.rows_above_floor() {
                line(
                    &mut out,
                    &x.p.to_string(),
                    &x.lhs.to_string(),
                    &x.rhs.to_string(),
                    if x.pass { "yes" } else { "NO" },
                );
            }
            let below: Vec<_> = r.rows_below_floor().collect();
            if !below.is_empty() {
                let _ = writeln!(out, "below floor (not counted):");
                for x in below {
                    line(
                        &mut out,
                        &x.p.to_string(),
                        &x.lhs.to_string(),
                        &x.rhs.to_string(),
                        if x.pass { "yes" } else { "no" },
                    );
                }
            }
        }
    }
    let s = &r.summary;
    let _ = writeln!(
        out,
        "{}: {} checked, {} failed above floor",
        if s.pass { "PASS" } else { "FAIL" },
        s.checked,
        s.failed_above_floor
    );
    out
}

fn render_suite(
    cfg: &SuiteConfig,
    out: &[BatteryOutcome],
    format: Format,
) -> anyhow::Result<String> {
    let pass = out.iter().all(BatteryOutcome::passed);
    match format {
        Format::Json => json_line(&json!({
            "max_weight": cfg.max_weight,
            "max_n": cfg.max_n,
            "window": cfg.window.to_string(),
            "seed": cfg.seed,
            "batteries": out,
            "pass": pass,
        })),
        Format::Csv => csv_string(
            &["battery", "instances", "failures", "pass"],
            out.iter().map(|b| {
                vec![
                    b.name.clone(),
                    b.instances.to_string(),
                    b.failure_count.to_string(),
                    b.passed().to_string(),
                ]
            }),
        ),
        Format::Table => {
            let mut s = String::new();
            let wn = out.iter().map(|b| b.name.len()).max().unwrap_or(0);
            for b in out {
                let verdict = if b.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{:<wn$}  {:>7} instances  {:>5} failures  {verdict}",
                    b.name, b.instances, b.failure_count
                );
                for f in &b.failures {
                    let _ = writeln!(s, "    {f}");
                }
            }
            let _ = writeln!(s, "suite: {}", if pass { "PASS" } else { "FAIL" });
            Ok(s)
        }
    }
}
