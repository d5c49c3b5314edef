use std::process::{Command, Output};

use fmzv::CheckReport;

fn fmzv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fmzv"))
        .args(args)
        .env_remove("FMZV_DEFAULT_PRIMES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn dual_example() {
    let o = fmzv(&["dual", "2,3,1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1,2,1,3,1\n");

    let o = fmzv(&["dual", "2,3,1,2", "--format", "json"]);
    assert_eq!(
        stdout(&o),
        "{\"index\":\"2,3,1,2\",\"dual\":\"1,2,1,3,1\"}\n"
    );
}

#[test]
fn zeta_example() {
    let o = fmzv(&["zeta", "--index", "2,1", "--primes", "5:5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5,1\n");

    let o = fmzv(&[
        "zeta", "--index", "1,2", "--primes", "5:7", "--format", "csv",
    ]);
    assert_eq!(stdout(&o), "p,value\n5,4\n7,4\n");
}

#[test]
fn bernoulli_values() {
    let o = fmzv(&["bernoulli", "--k", "3", "--primes", "5:7"]);
    assert_eq!(stdout(&o), "5,1\n7,3\n");
}

#[test]
fn ohno_example_passes() {
    let o = fmzv(&[
        "check", "ohno", "--index", "2,1", "--n", "1", "--primes", "5:200",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("ohno index=2,1 n=1 window=5:200\nfloor: 7\n"));
    assert!(out.contains("below floor (not counted):\n    5    1    1  yes\n"));
    assert!(out.ends_with("PASS: 44 checked, 0 failed above floor\n"));
}

#[test]
fn every_check_subcommand_passes_on_small_input() {
    let cases: &[&[&str]] = &[
        &["check", "sum-formula", "--k", "5", "--r", "3", "--i", "2"],
        &["check", "height-one", "--a", "1", "--b", "2"],
        &["check", "stuffle", "--w", "y", "--wp", "xy"],
        &["check", "duality", "--w", "y", "--wp", "xy"],
        &["check", "homogeneous", "--a", "2", "--r", "3"],
        &["check", "lemma2", "--index", "2,1", "--n", "1"],
        &["check", "key-lemma", "--index", "2,1", "--n", "2"],
        &["check", "eq3", "--index", "2,1", "--n", "2"],
        &["check", "ikz", "--w", "xy", "--order", "2"],
    ];
    for args in cases {
        let o = fmzv(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn failure_above_floor_exits_one() {
    let o = fmzv(&[
        "check",
        "homogeneous",
        "--a",
        "2",
        "--r",
        "1",
        "--primes",
        "2:20",
        "--floor",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL: 8 checked, 2 failed above floor"));
}

#[test]
fn usage_errors_exit_two_and_name_the_token() {
    for (args, token) in [
        (&["check", "ohno", "--index", "2,0", "--n", "1"][..], "2,0"),
        (&["dual", "1", "--primes", "5:x"][..], "5:x"),
        (&["check", "stuffle", "--w", "yx", "--wp", "y"][..], "yx"),
        (
            &[
                "check", "ohno", "--index", "2", "--n", "1", "--floor", "500",
            ][..],
            "500",
        ),
        (
            &["check", "sum-formula", "--k", "3", "--r", "3", "--i", "1"][..],
            "r = 3",
        ),
        (&["zeta", "--index", "2", "--format", "yaml"][..], "yaml"),
        (&["frobnicate"][..], "frobnicate"),
    ] {
        let o = fmzv(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(token), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn json_round_trip_is_byte_identical() {
    for args in [
        &[
            "check", "ohno", "--index", "3,1", "--n", "2", "--format", "json",
        ][..],
        &[
            "check", "eq3", "--index", "2", "--n", "1", "--format", "json",
        ][..],
        &[
            "check",
            "sum-formula",
            "--k",
            "4",
            "--r",
            "2",
            "--i",
            "1",
            "--format",
            "json",
        ][..],
    ] {
        let o = fmzv(args);
        let text = stdout(&o);
        let line = text.trim_end_matches('\n');
        let report = CheckReport::from_json(line).unwrap();
        assert_eq!(report.to_json(), line);
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), line);
    }
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let base = [
        "check",
        "key-lemma",
        "--index",
        "2,1,1",
        "--n",
        "2",
        "--format",
        "json",
    ];
    let first = fmzv(&base).stdout;
    for jobs in ["1", "3"] {
        let mut args = base.to_vec();
        args.extend(["--jobs", jobs]);
        assert_eq!(fmzv(&args).stdout, first);
    }
}

#[test]
fn output_file_and_env_window() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let o = Command::new(env!("CARGO_BIN_EXE_fmzv"))
        .args([
            "check",
            "sum-formula",
            "--k",
            "3",
            "--r",
            "2",
            "--i",
            "1",
            "--format",
            "csv",
            "--output",
        ])
        .arg(&path)
        .env("FMZV_DEFAULT_PRIMES", "5:7")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "p,lhs,rhs,pass\n5,1,1,true\n7,3,3,true\n"
    );
}

#[test]
fn small_suite_passes() {
    let o = fmzv(&[
        "suite",
        "--max-weight",
        "4",
        "--max-n",
        "1",
        "--primes",
        "2:60",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 12);
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true")));
}
