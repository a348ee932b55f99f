//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use idsball::verify::{self, Check, GridSpec, Status, VerificationReport};
use idsball::{bijection_insertion, injection_idp, matching_set, Alphabet, IndexSet, Sequence};

type Outcome = Result<String, String>;

fn seq(text: &str, q: u32) -> Sequence {
    Sequence::parse(text, Alphabet::new(q).unwrap()).unwrap()
}

fn set(positions: &[usize], ambient: usize) -> IndexSet {
    IndexSet::new(positions.to_vec(), ambient).unwrap()
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn main_grid() -> GridSpec {
    GridSpec {
        q_values: vec![1, 2, 3],
        n_max: 5,
        budget_max: 2,
        word_cap: 1_000_000,
        checks: Check::ALL.to_vec(),
    }
}

/// Zero failures, nothing skipped and at least one record.
fn clean(report: &VerificationReport) -> Outcome {
    if let Some(f) = report.failures.first() {
        return Err(format!(
            "{} failures, first: {} {} q={} n={} t={:?} s={:?} p={:?} x={:?}: {}",
            report.summary.failures,
            f.check,
            f.label,
            f.q,
            f.n,
            f.t,
            f.s,
            f.p,
            f.x,
            f.detail.as_deref().unwrap_or("")
        ));
    }
    ensure(report.summary.cases_skipped == 0, || {
        format!("{} cases skipped by the cap", report.summary.cases_skipped)
    })?;
    ensure(!report.records.is_empty(), || "no cases ran".into())?;
    Ok(format!("{} cases", report.summary.cases_run))
}

fn enum_example() -> Outcome {
    let out = idsball_cli::run([
        "idsball", "enum", "--x", "0000", "--q", "2", "-t", "1", "-s", "1", "-p", "1",
    ]);
    ensure(out.code == 0, || {
        format!("exit {}: {}", out.code, out.stderr)
    })?;
    let got: BTreeSet<String> = out.stdout.lines().map(String::from).collect();
    let excluded = ["1111", "1110", "1101", "1011", "0111"];
    let expected: BTreeSet<String> = (0..16u32)
        .map(|v| format!("{v:04b}"))
        .filter(|w| !excluded.contains(&w.as_str()))
        .collect();
    ensure(got == expected && out.stdout.lines().count() == 11, || {
        format!("got {got:?}")
    })?;
    Ok("11 words".into())
}

fn matching_example() -> Outcome {
    let m = matching_set(&seq("110", 3), &seq("21010", 3)).map_err(|e| e.to_string())?;
    ensure(m == set(&[2, 4, 5], 5), || format!("got {m}"))?;
    Ok(format!("M = {m}"))
}

fn bijection_example() -> Outcome {
    let trace =
        bijection_insertion(&seq("20100100", 3), &seq("1001", 3), 4).map_err(|e| e.to_string())?;
    ensure(trace.matched == set(&[2, 4, 5, 7], 8), || {
        format!("I = {}", trace.matched)
    })?;
    ensure(trace.output == seq("01100210", 3), || {
        format!("z = {}", trace.output)
    })?;
    Ok(format!("I = {}, z = {}", trace.matched, trace.output))
}

fn injection_example() -> Outcome {
    let trace =
        injection_idp(&seq("20100100", 3), &seq("1001", 3), 4, 2).map_err(|e| e.to_string())?;
    let (j, k) = (trace.fill.clone().unwrap(), trace.anchors.clone().unwrap());
    ensure(trace.matched == set(&[2, 4], 8), || {
        format!("I = {}", trace.matched)
    })?;
    ensure(j == set(&[1, 3], 8), || format!("J = {j}"))?;
    ensure(k == set(&[1, 2, 3, 4], 8), || format!("K = {k}"))?;
    ensure(trace.output == seq("00110100", 3), || {
        format!("z = {}", trace.output)
    })?;
    Ok(format!(
        "I = {}, J = {j}, K = {k}, z = {}",
        trace.matched, trace.output
    ))
}

fn run_checks(grid: &GridSpec, checks: &[Check]) -> Result<VerificationReport, String> {
    verify::run(&grid.clone().with_checks(checks.iter().copied())).map_err(|e| e.to_string())
}

fn theorem() -> Outcome {
    let report = run_checks(&main_grid(), &[Check::Theorem])?;
    let summary = clean(&report)?;
    let strict = report
        .records
        .iter()
        .filter(|r| r.predicted_equal == Some(false))
        .count();
    let tight = report
        .records
        .iter()
        .filter(|r| r.predicted_equal == Some(true))
        .count();
    ensure(strict > 0 && tight > 0, || {
        "one direction of the iff was never exercised".into()
    })?;
    Ok(format!("{summary}, {tight} tight, {strict} strict"))
}

fn formulas() -> Outcome {
    let report = run_checks(&main_grid(), &[Check::Formulas])?;
    let labels: BTreeSet<&str> = report.records.iter().map(|r| r.label.as_str()).collect();
    for label in [
        "substitution-size",
        "insertion-size",
        "insertion-uniform",
        "zero-ball-size",
    ] {
        ensure(labels.contains(label), || format!("no {label} records"))?;
    }
    clean(&report)
}

fn intersection() -> Outcome {
    let grid = GridSpec {
        q_values: vec![2],
        n_max: 4,
        budget_max: 2,
        ..main_grid()
    };
    let report = run_checks(&grid, &[Check::Intersection])?;
    let rows: Vec<_> = report
        .records
        .iter()
        .filter(|r| (2..=4).contains(&r.n) && matches!(r.p, Some(1 | 2)))
        .collect();
    ensure(rows.len() == 6, || {
        format!("expected 6 rows, got {}", rows.len())
    })?;
    for r in &rows {
        ensure(
            r.status == Status::Pass && r.enumerated_size == r.bound,
            || {
                format!(
                    "n={} p={:?}: max {:?} vs formula {:?}",
                    r.n, r.p, r.enumerated_size, r.bound
                )
            },
        )?;
    }
    clean(&report)
}

fn mappings() -> Outcome {
    let base = GridSpec {
        q_values: vec![2, 3],
        n_max: 4,
        ..main_grid()
    };
    let bijection = run_checks(
        &GridSpec {
            budget_max: 3,
            ..base.clone()
        },
        &[Check::Bijection],
    )?;
    let injection = run_checks(
        &GridSpec {
            budget_max: 2,
            ..base
        },
        &[Check::Injection],
    )?;
    let b = clean(&bijection).map_err(|e| format!("bijection: {e}"))?;
    let i = clean(&injection).map_err(|e| format!("injection: {e}"))?;
    let strict = injection
        .records
        .iter()
        .filter(|r| r.predicted_equal == Some(false))
        .count();
    let witnessed = injection
        .records
        .iter()
        .filter(|r| {
            r.detail
                .as_deref()
                .is_some_and(|d| d.starts_with("witness"))
        })
        .count();
    ensure(strict > 0 && witnessed == strict, || {
        format!("{strict} strict cases, {witnessed} witnessed")
    })?;
    Ok(format!(
        "bijection {b}, injection {i} ({strict} strict, each witnessed)"
    ))
}

fn containments() -> Outcome {
    let report = run_checks(&main_grid(), &[Check::Containments])?;
    let labels: BTreeSet<&str> = report.records.iter().map(|r| r.label.as_str()).collect();
    ensure(labels.len() == 3, || format!("labels {labels:?}"))?;
    clean(&report)
}

fn witnesses() -> Outcome {
    let report = run_checks(&main_grid(), &[Check::Witnesses])?;
    let checked: usize = report.records.iter().map(|r| r.witnesses_checked).sum();
    let labels: BTreeSet<&str> = report.records.iter().map(|r| r.label.as_str()).collect();
    ensure(labels.len() == 3, || format!("labels {labels:?}"))?;
    Ok(format!("{}, {checked} witnesses", clean(&report)?))
}

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Duration,
    body: fn() -> Outcome,
}

fn main() -> ExitCode {
    let second = Duration::from_secs(1);
    let minute = Duration::from_secs(60);
    let criteria = [
        Criterion {
            id: 1,
            name: "ball example via enum",
            budget: second,
            body: enum_example,
        },
        Criterion {
            id: 2,
            name: "matching set example",
            budget: second,
            body: matching_example,
        },
        Criterion {
            id: 3,
            name: "insertion bijection example",
            budget: second,
            body: bijection_example,
        },
        Criterion {
            id: 4,
            name: "idp injection example",
            budget: second,
            body: injection_example,
        },
        Criterion {
            id: 5,
            name: "minimum-size theorem, exhaustive",
            budget: 3 * minute,
            body: theorem,
        },
        Criterion {
            id: 6,
            name: "formulas against enumeration",
            budget: minute,
            body: formulas,
        },
        Criterion {
            id: 7,
            name: "substitution ball intersection max",
            budget: minute,
            body: intersection,
        },
        Criterion {
            id: 8,
            name: "mapping properties",
            budget: 2 * minute,
            body: mappings,
        },
        Criterion {
            id: 9,
            name: "containment reductions",
            budget: 3 * minute,
            body: containments,
        },
        Criterion {
            id: 10,
            name: "witness postconditions",
            budget: minute,
            body: witnesses,
        },
    ];
    let mut failed = 0;
    let mut theorem_time = Duration::ZERO;
    for c in &criteria {
        let start = Instant::now();
        let mut result = (c.body)();
        let elapsed = start.elapsed();
        let mut allowed = c.budget;
        match c.id {
            5 => theorem_time = elapsed,
            9 => allowed = c.budget.saturating_sub(theorem_time),
            _ => {}
        }
        if result.is_ok() && elapsed > allowed {
            result = Err(format!("took {elapsed:.2?}, budget {allowed:.2?}"));
        }
        match result {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {} [{elapsed:.2?}] {detail}",
                c.id, c.name
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL  {} [{elapsed:.2?}] {detail}",
                    c.id, c.name
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
