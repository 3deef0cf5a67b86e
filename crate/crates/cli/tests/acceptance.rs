//! End-to-end acceptance run: one PASS/FAIL line per criterion, then a
//! single assertion that every criterion passed.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

fn bufrob(args: &[&str], env: &[(&str, &str)]) -> (Output, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_bufrob"))
        .args(args)
        .envs(env.iter().copied())
        .output()
        .expect("run bufrob");
    (out, start.elapsed())
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).expect("golden file")
}

/// Reports of a suite run as JSON; `Err` carries a description of the problem.
fn suite(args: &[&str]) -> Result<(Vec<Value>, Duration), String> {
    let mut full = vec!["verify", "--format", "json"];
    full.extend_from_slice(args);
    let (out, took) = bufrob(&full, &[]);
    let reports: Vec<Value> = serde_json::from_str(&stdout(&out)).map_err(|e| format!("bad JSON: {e}"))?;
    if !out.status.success() {
        let failed: Vec<String> = reports
            .iter()
            .flat_map(|r| r["checks"].as_array().cloned().unwrap_or_default())
            .filter(|c| c["status"] == "fail")
            .map(|c| format!("{}: {}", c["name"], c["detail"]))
            .collect();
        return Err(format!("exit {:?}; {}", out.status.code(), failed.join("; ")));
    }
    Ok((reports, took))
}

fn within(took: Duration, limit: Duration) -> Result<(), String> {
    if took <= limit {
        Ok(())
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

fn check_names(reports: &[Value], status: &str) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| r["checks"].as_array().cloned().unwrap_or_default())
        .filter(|c| c["status"] == status)
        .filter_map(|c| c["name"].as_str().map(String::from))
        .collect()
}

fn worked_examples() -> Result<(), String> {
    let (reports, took) = suite(&["--suite", "examples"])?;
    within(took, Duration::from_secs(1))?;
    let names = check_names(&reports, "pass");
    for required in ["dyson rank [4]", "overpartitions of 4", "M2 rank", "CL rank", "conjugate"] {
        if !names.iter().any(|n| n == required) {
            return Err(format!("missing check {required}"));
        }
    }
    let (out, _) = bufrob(&["enumerate", "--kind", "overpartition", "--n", "4"], &[]);
    match stdout(&out).lines().count() {
        14 => Ok(()),
        n => Err(format!("{n} overpartitions of 4")),
    }
}

fn algorithm_traces() -> Result<(), String> {
    let cases = [
        (&["map", "--op", "f1-fwd", "--trace", "F1:[3,2,1;4~,4,3~]"][..], "f1_fwd_trace.txt"),
        (&["map", "--op", "f2-fwd", "--trace", "F2:[5,1~;6,5]"][..], "f2_fwd_trace.txt"),
        (&["map", "--op", "f2-inv", "--trace", "[8,7~,2~]"][..], "f2_inv_trace.txt"),
        (&["map", "--op", "js", "--trace", "[4,3,2,2] [3,1,0]"][..], "js_trace.txt"),
    ];
    for (args, file) in cases {
        let (out, took) = bufrob(args, &[]);
        within(took, Duration::from_secs(1))?;
        if stdout(&out) != golden(file) {
            return Err(format!("{file} differs:\n{}", stdout(&out)));
        }
    }
    Ok(())
}

fn bijection_battery() -> Result<(), String> {
    let (_, took) = suite(&["--suite", "bijections", "--N", "10"])?;
    within(took, Duration::from_secs(60))
}

fn single_variable_series() -> Result<(), String> {
    let start = Instant::now();
    for s in ["dyson", "m2", "f1", "f2"] {
        suite(&["--suite", s, "--N", "10"])?;
    }
    within(start.elapsed(), Duration::from_secs(60))
}

fn transformations() -> Result<(), String> {
    let start = Instant::now();
    for s in ["firsthype", "secondhype"] {
        let (reports, _) = suite(&["--suite", s, "--N", "12"])?;
        let names = check_names(&reports, "pass");
        for k in 1..=3 {
            if !names.contains(&format!("k={k} left equals right")) {
                return Err(format!("{s}: k={k} not checked"));
            }
        }
    }
    let (reports, _) = suite(&["--suite", "andrews", "--N", "3"])?;
    let sets = check_names(&reports, "pass").iter().filter(|n| n.contains(" set ")).count();
    if sets != 6 {
        return Err(format!("{sets} andrews parameter checks passed, expected 6"));
    }
    within(start.elapsed(), Duration::from_secs(300))
}

fn main_theorems() -> Result<(), String> {
    let start = Instant::now();
    for s in ["buffered-b1", "buffered-b2"] {
        let (reports, _) = suite(&["--suite", s, "--N", "8"])?;
        let names = check_names(&reports, "pass");
        for k in 1..=3 {
            if !names.contains(&format!("k={k} root-of-unity buckets")) {
                return Err(format!("{s}: k={k} buckets not checked"));
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(600))
}

fn structural_propositions() -> Result<(), String> {
    let start = Instant::now();
    for s in ["structure-b1", "structure-b2"] {
        suite(&["--suite", s, "--k", "3", "--N", "8"])?;
    }
    within(start.elapsed(), Duration::from_secs(300))
}

fn slice_identities() -> Result<(), String> {
    let (reports, _) = suite(&["--suite", "slice", "--N", "10"])?;
    let passed = check_names(&reports, "pass");
    let info = check_names(&reports, "info");
    for k in 1..=3 {
        if !passed.contains(&format!("k={k} slices sum to pbar")) {
            return Err(format!("k={k} slice sum not checked"));
        }
    }
    for k in 1..=2 {
        for m in [1, 2] {
            if !passed.contains(&format!("k={k} m={m} closed form")) {
                return Err(format!("k={k} m={m} closed form not checked"));
            }
        }
    }
    if info != ["k=3 closed form"] {
        return Err(format!("exploratory entries {info:?}"));
    }
    Ok(())
}

fn determinism() -> Result<(), String> {
    let run = |threads: &str| {
        let (out, _) = bufrob(&["verify", "--format", "json"], &[("RAYON_NUM_THREADS", threads)]);
        out.stdout
    };
    let (a, b, c) = (run("1"), run("1"), run("4"));
    if a.is_empty() {
        return Err("empty report".into());
    }
    if a != b {
        return Err("two runs differ".into());
    }
    if a != c {
        return Err("thread counts differ".into());
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Result<(), String>); 9] = [
        ("worked examples", worked_examples),
        ("algorithm traces", algorithm_traces),
        ("bijection battery", bijection_battery),
        ("single-variable series", single_variable_series),
        ("transformation identities", transformations),
        ("main theorems", main_theorems),
        ("structural propositions", structural_propositions),
        ("slice identities", slice_identities),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(e) => {
                println!("criterion {}: FAIL  {name}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
