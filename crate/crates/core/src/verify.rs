//! Exhaustive cross-checks of every size formula, containment, map and witness
//! against brute-force enumeration over a parameter grid.
//!
//! Grid points are visited in ascending `(q, n, t, s, p, x)` order, with `x`
//! ordered lexicographically. Work per grid point is spread over a rayon pool,
//! but records are collected in visiting order so reports are byte-stable.
//! Points whose word space exceeds the cap are recorded with status `skip`.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::balls::{
    ball, check_word_cap, deletion_ball, insertion_ball, substitution_ball, word_count, BallParams,
    BallSet,
};
use crate::constructions::{
    bijection_insertion, bijection_insertion_inverse, injection_idp, witness_deletion_pair,
    witness_nonsurjective, witness_swap_flip,
};
use crate::error::{Error, Result};
use crate::formulas::{
    levenshtein_intersection_max, min_ball_bound, minimality_predicate, size_insertion_ball,
    size_substitution_ball, size_zero_ball,
};
use crate::seqcore::{run_count, Alphabet, Sequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Theorem,
    Formulas,
    Containments,
    Bijection,
    Injection,
    Witnesses,
    Intersection,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Theorem,
        Check::Formulas,
        Check::Containments,
        Check::Bijection,
        Check::Injection,
        Check::Witnesses,
        Check::Intersection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem => "theorem",
            Check::Formulas => "formulas",
            Check::Containments => "containments",
            Check::Bijection => "bijection",
            Check::Injection => "injection",
            Check::Witnesses => "witnesses",
            Check::Intersection => "intersection",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse {
                text: s.to_string(),
                reason: "unknown check".to_string(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub q_values: Vec<u32>,
    pub n_max: usize,
    /// Upper bound on each of `t`, `s` and `p`.
    pub budget_max: usize,
    /// Largest word space `q^len` any single enumeration may touch.
    pub word_cap: u64,
    pub checks: Vec<Check>,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            q_values: vec![1, 2, 3],
            n_max: 5,
            budget_max: 2,
            word_cap: 1_000_000,
            checks: Check::ALL.to_vec(),
        }
    }
}

impl GridSpec {
    pub fn with_checks(mut self, checks: impl IntoIterator<Item = Check>) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    /// Sorted, deduplicated alphabets, rejecting invalid sizes.
    fn alphabets(&self) -> Result<Vec<Alphabet>> {
        let unique: BTreeSet<u32> = self.q_values.iter().copied().collect();
        unique.into_iter().map(Alphabet::new).collect()
    }

    pub fn validate(&self) -> Result<()> {
        self.alphabets()?;
        if self.q_values.is_empty() {
            return Err(Error::Precondition("grid has no alphabet sizes".into()));
        }
        if self.word_cap == 0 {
            return Err(Error::Precondition("word cap must be positive".into()));
        }
        Ok(())
    }

    fn selected(&self) -> BTreeSet<Check> {
        self.checks.iter().copied().collect()
    }

    fn budgets(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.budget_max
    }

    fn triples(&self, n: usize) -> impl Iterator<Item = BallParams> + '_ {
        let b = self.budget_max;
        (0..=b).flat_map(move |t| {
            (0..=b.min(n)).flat_map(move |s| (0..=b).map(move |p| BallParams::new(t, s, p)))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// One checked grid point. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub check: Check,
    /// The specific property checked, e.g. `zero-ball-structure`.
    pub label: String,
    pub q: u32,
    pub n: usize,
    pub t: Option<usize>,
    pub s: Option<usize>,
    pub p: Option<usize>,
    pub x: Option<String>,
    pub enumerated_size: Option<String>,
    pub bound: Option<String>,
    pub predicted_equal: Option<bool>,
    pub observed_equal: Option<bool>,
    pub witnesses_checked: usize,
    pub status: Status,
    pub detail: Option<String>,
}

impl CaseRecord {
    fn new(check: Check, label: &str, q: Alphabet, n: usize) -> Self {
        CaseRecord {
            check,
            label: label.to_string(),
            q: q.size(),
            n,
            t: None,
            s: None,
            p: None,
            x: None,
            enumerated_size: None,
            bound: None,
            predicted_equal: None,
            observed_equal: None,
            witnesses_checked: 0,
            status: Status::Pass,
            detail: None,
        }
    }

    fn params(mut self, t: Option<usize>, s: Option<usize>, p: Option<usize>) -> Self {
        (self.t, self.s, self.p) = (t, s, p);
        self
    }

    fn triple(self, params: BallParams) -> Self {
        self.params(Some(params.t), Some(params.s), Some(params.p))
    }

    fn word(mut self, x: &Sequence) -> Self {
        self.x = Some(x.to_string());
        self
    }

    fn sizes(mut self, enumerated: impl ToString, bound: impl ToString) -> Self {
        self.enumerated_size = Some(enumerated.to_string());
        self.bound = Some(bound.to_string());
        self
    }

    fn fail(&mut self, why: impl Into<String>) {
        self.status = Status::Fail;
        let why = why.into();
        self.detail = Some(match self.detail.take() {
            Some(prev) => format!("{prev}; {why}"),
            None => why,
        });
    }

    fn expect(&mut self, ok: bool, why: impl FnOnce() -> String) {
        if !ok {
            self.fail(why());
        }
    }

    fn skipped(mut self, words: BigUint, cap: u64) -> Self {
        self.status = Status::Skip;
        self.detail = Some(format!("{words} words exceed cap {cap}"));
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub cases_run: usize,
    pub cases_skipped: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub grid: GridSpec,
    pub summary: Summary,
    pub records: Vec<CaseRecord>,
    /// Copies of the failed records, each with its full parameters.
    pub failures: Vec<CaseRecord>,
}

impl VerificationReport {
    fn from_records(grid: &GridSpec, records: Vec<CaseRecord>) -> Self {
        let failures: Vec<CaseRecord> = records
            .iter()
            .filter(|r| r.status == Status::Fail)
            .cloned()
            .collect();
        let cases_skipped = records.iter().filter(|r| r.status == Status::Skip).count();
        let summary = Summary {
            cases_run: records.len() - cases_skipped,
            cases_skipped,
            failures: failures.len(),
        };
        VerificationReport {
            grid: grid.clone(),
            summary,
            records,
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn records_for(&self, check: Check) -> impl Iterator<Item = &CaseRecord> {
        self.records.iter().filter(move |r| r.check == check)
    }

    pub fn skipped(&self) -> impl Iterator<Item = &CaseRecord> {
        self.records.iter().filter(|r| r.status == Status::Skip)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// One row per record, header first, in [`CaseRecord`] field order.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        if self.records.is_empty() {
            writer.write_record(CSV_COLUMNS).expect("in-memory write");
        }
        for record in &self.records {
            writer.serialize(record).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn summary_line(&self) -> String {
        let Summary {
            cases_run,
            cases_skipped,
            failures,
        } = self.summary;
        format!("cases run: {cases_run}, skipped: {cases_skipped}, failures: {failures}")
    }

    /// Aligned table of every record followed by the summary line.
    pub fn to_text(&self) -> String {
        let header = [
            "check", "label", "q", "n", "t", "s", "p", "x", "size", "bound", "pred", "obs", "wit",
            "status", "detail",
        ];
        let opt = |v: &Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        let yes_no = |v: &Option<bool>| match v {
            Some(true) => "yes".to_string(),
            Some(false) => "no".to_string(),
            None => "-".to_string(),
        };
        let rows: Vec<[String; 15]> = self
            .records
            .iter()
            .map(|r| {
                [
                    r.check.to_string(),
                    r.label.clone(),
                    r.q.to_string(),
                    r.n.to_string(),
                    opt(&r.t),
                    opt(&r.s),
                    opt(&r.p),
                    r.x.clone()
                        .map_or("-".into(), |x| if x.is_empty() { "ε".into() } else { x }),
                    r.enumerated_size.clone().unwrap_or_else(|| "-".into()),
                    r.bound.clone().unwrap_or_else(|| "-".into()),
                    yes_no(&r.predicted_equal),
                    yes_no(&r.observed_equal),
                    r.witnesses_checked.to_string(),
                    r.status.to_string(),
                    r.detail.clone().unwrap_or_default(),
                ]
            })
            .collect();
        let mut widths = header.map(|h| h.chars().count());
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |cells: &[&str]| {
            let mut text = String::new();
            for (k, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                if k + 1 == cells.len() {
                    text.push_str(cell);
                } else {
                    let pad = w - cell.chars().count();
                    text.push_str(cell);
                    text.extend(std::iter::repeat_n(' ', pad + 2));
                }
            }
            writeln!(out, "{}", text.trim_end()).unwrap();
        };
        line(&header);
        for row in &rows {
            line(&row.each_ref().map(String::as_str));
        }
        writeln!(out, "{}", self.summary_line()).unwrap();
        out
    }
}

pub const CSV_COLUMNS: [&str; 15] = [
    "check",
    "label",
    "q",
    "n",
    "t",
    "s",
    "p",
    "x",
    "enumerated_size",
    "bound",
    "predicted_equal",
    "observed_equal",
    "witnesses_checked",
    "status",
    "detail",
];

/// Applies `f` to every `x ∈ A_q^n` in parallel, keeping lexicographic order.
fn per_word<F>(q: Alphabet, n: usize, f: F) -> Vec<CaseRecord>
where
    F: Fn(&Sequence) -> CaseRecord + Sync + Send,
{
    let words: Vec<Sequence> = Sequence::all(q, n).collect();
    words.par_iter().map(f).collect()
}

/// `Some(skip record)` if `q^len` is over the cap.
fn over_cap(
    grid: &GridSpec,
    q: Alphabet,
    len: usize,
    base: impl FnOnce() -> CaseRecord,
) -> Option<CaseRecord> {
    check_word_cap(q, len, grid.word_cap)
        .err()
        .map(|_| base().skipped(word_count(q, len), grid.word_cap))
}

fn record_error(mut record: CaseRecord, err: Error) -> CaseRecord {
    record.fail(err.to_string());
    record
}

/// Enumerated `|B_{t,s,p}(x)|` against the bound and its equality condition.
pub fn verify_theorem(grid: &GridSpec) -> Result<VerificationReport> {
    grid.validate()?;
    let mut records = Vec::new();
    for q in grid.alphabets()? {
        for n in 0..=grid.n_max {
            for params in grid.triples(n) {
                let base = || CaseRecord::new(Check::Theorem, "theorem", q, n).triple(params);
                let len = params.output_len(n);
                if let Some(skip) = over_cap(grid, q, len.max(n), base) {
                    records.push(skip);
                    continue;
                }
                let bound = min_ball_bound(n, q, params)?;
                records.extend(per_word(q, n, |x| {
                    let record = base().word(x);
                    let outcome =
                        ball(x, params).and_then(|b| Ok((b, minimality_predicate(x, params)?)));
                    let (set, report) = match outcome {
                        Ok(v) => v,
                        Err(e) => return record_error(record, e),
                    };
                    let size = BigUint::from(set.len());
                    let observed = size == bound;
                    let mut record = record.sizes(&size, &bound);
                    record.predicted_equal = Some(report.minimal_predicted);
                    record.observed_equal = Some(observed);
                    if !report.conditions.is_empty() {
                        record.detail = Some(
                            report
                                .conditions
                                .iter()
                                .map(|c| c.to_string())
                                .collect::<Vec<_>>()
                                .join(","),
                        );
                    }
                    record.expect(size >= bound, || "size below bound".into());
                    record.expect(observed == report.minimal_predicted, || {
                        "equality disagrees with the minimality condition".into()
                    });
                    record
                }));
            }
        }
    }
    Ok(VerificationReport::from_records(grid, records))
}

/// Closed-form sizes against enumeration, with insertion-ball uniformity and
/// the nonzero-count description of the zero-centre ball.
pub fn verify_formulas(grid: &GridSpec) -> Result<VerificationReport> {
    grid.validate()?;
    let mut records = Vec::new();
    for q in grid.alphabets()? {
        for n in 0..=grid.n_max {
            for p in grid.budgets() {
                let base = || {
                    CaseRecord::new(Check::Formulas, "substitution-size", q, n).params(
                        None,
                        None,
                        Some(p),
                    )
                };
                if let Some(skip) = over_cap(grid, q, n, base) {
                    records.push(skip);
                    continue;
                }
                let formula = size_substitution_ball(n, q, p);
                records.extend(per_word(q, n, |x| {
                    let size = BigUint::from(substitution_ball(x, p).len());
                    let mut record = base().word(x).sizes(&size, &formula);
                    record.expect(size == formula, || "size differs from formula".into());
                    record
                }));
            }
            for t in grid.budgets() {
                let base = |label| {
                    CaseRecord::new(Check::Formulas, label, q, n).params(Some(t), None, None)
                };
                if let Some(skip) = over_cap(grid, q, n + t, || base("insertion-size")) {
                    records.push(skip);
                    continue;
                }
                let formula = size_insertion_ball(n, q, t);
                let per_x = per_word(q, n, |x| {
                    let size = BigUint::from(insertion_ball(x, t).len());
                    let mut record = base("insertion-size").word(x).sizes(&size, &formula);
                    record.expect(size == formula, || "size differs from formula".into());
                    record
                });
                let distinct: BTreeSet<&String> = per_x
                    .iter()
                    .filter_map(|r| r.enumerated_size.as_ref())
                    .collect();
                let mut uniform = base("insertion-uniform");
                uniform.witnesses_checked = per_x.len();
                uniform.detail = Some(format!(
                    "{} distinct sizes over {} centres",
                    distinct.len(),
                    per_x.len()
                ));
                if distinct.len() != 1 {
                    uniform.status = Status::Fail;
                }
                records.extend(per_x);
                records.push(uniform);
            }
            for params in grid.triples(n) {
                let base = |label| CaseRecord::new(Check::Formulas, label, q, n).triple(params);
                let len = params.output_len(n);
                if let Some(skip) = over_cap(grid, q, len, || base("zero-ball-size")) {
                    records.push(skip);
                    continue;
                }
                let zeros = Sequence::zeros(q, n);
                let set = ball(&zeros, params)?;
                let formula = size_zero_ball(n, q, params)?;
                let size = BigUint::from(set.len());
                let mut record = base("zero-ball-size").word(&zeros).sizes(&size, &formula);
                record.expect(size == formula, || "size differs from formula".into());
                records.push(record);

                let budget = params.t + params.p;
                let described = BallSet::from_words(
                    q,
                    len,
                    Sequence::all(q, len).filter(|y| y.count_nonzero() <= budget),
                )?;
                let mut record = base("zero-ball-structure").word(&zeros);
                record.detail = Some(format!("words with at most {budget} nonzero symbols"));
                record.expect(described == set, || {
                    "ball differs from its nonzero-count description".into()
                });
                records.push(record);
            }
        }
    }
    Ok(VerificationReport::from_records(grid, records))
}

/// The three reductions: `B_{t,t,p} ⊇ B_{0,0,t+p}`, `B_{t,s,p} ⊇ B_{0,s-t,t+p}`
/// for `t < s`, and `B_{t,s,p} ⊇ B_{t-s,0,s+p}` for `t > s`.
pub fn verify_containments(grid: &GridSpec) -> Result<VerificationReport> {
    grid.validate()?;
    let mut records = Vec::new();
    for q in grid.alphabets()? {
        for n in 0..=grid.n_max {
            for params in grid.triples(n) {
                let BallParams { t, s, p } = params;
                let (label, reduced) = match t.cmp(&s) {
                    std::cmp::Ordering::Equal => ("equal-indels", BallParams::new(0, 0, t + p)),
                    std::cmp::Ordering::Less => {
                        ("more-deletions", BallParams::new(0, s - t, t + p))
                    }
                    std::cmp::Ordering::Greater => {
                        ("more-insertions", BallParams::new(t - s, 0, s + p))
                    }
                };
                let base = || {
                    let mut r = CaseRecord::new(Check::Containments, label, q, n).triple(params);
                    r.detail = Some(format!(
                        "contains B_{{{},{},{}}}",
                        reduced.t, reduced.s, reduced.p
                    ));
                    r
                };
                if let Some(skip) = over_cap(grid, q, params.output_len(n).max(n), base) {
                    records.push(skip);
                    continue;
                }
                records.extend(per_word(q, n, |x| {
                    let outer = ball(x, params);
                    let inner = ball(x, reduced);
                    match (outer, inner) {
                        (Ok(outer), Ok(inner)) => {
                            let mut record = base().word(x).sizes(outer.len(), inner.len());
                            if let Some(z) = inner.difference(&outer).next() {
                                record.fail(format!("{z} is in the reduced ball only"));
                            }
                            record
                        }
                        (Err(e), _) | (_, Err(e)) => record_error(base().word(x), e),
                    }
                }));
            }
        }
    }
    Ok(VerificationReport::from_records(grid, records))
}

/// Brute-force `max_{x≠y} |B_{0,0,p}(x) ∩ B_{0,0,p}(y)|` against the closed form.
///
/// The pair sweep costs `q^{2n}` comparisons, and that is what the cap is
/// applied to. Only alphabets with `q >= 2` are swept.
pub fn verify_intersection_max(grid: &GridSpec) -> Result<VerificationReport> {
    grid.validate()?;
    let mut records = Vec::new();
    for q in grid.alphabets()?.into_iter().filter(|q| q.size() >= 2) {
        for n in 1..=grid.n_max {
            for p in grid.budgets() {
                let base = || {
                    CaseRecord::new(Check::Intersection, "intersection-max", q, n).params(
                        None,
                        None,
                        Some(p),
                    )
                };
                if let Some(skip) = over_cap(grid, q, 2 * n, base) {
                    records.push(skip);
                    continue;
                }
                let formula = levenshtein_intersection_max(n, q, p)?;
                let words: Vec<Sequence> = Sequence::all(q, n).collect();
                let balls: Vec<BallSet> =
                    words.par_iter().map(|x| substitution_ball(x, p)).collect();
                let (best, pairs) = (0..balls.len())
                    .into_par_iter()
                    .map(|i| {
                        let best = balls[i + 1..]
                            .iter()
                            .map(|other| balls[i].intersection_len(other))
                            .max()
                            .unwrap_or(0);
                        (best, balls.len() - i - 1)
                    })
                    .reduce(|| (0, 0), |a, b| (a.0.max(b.0), a.1 + b.1));
                let best = BigUint::from(best);
                let mut record = base().sizes(&best, &formula);
                record.witnesses_checked = pairs;
                record.observed_equal = Some(best == formula);
                record.expect(best == formula, || {
                    "pair-sweep maximum differs from formula".into()
                });
                records.push(record);
            }
        }
    }
    Ok(VerificationReport::from_records(grid, records))
}

fn check_bijection(
    x: &Sequence,
    t: usize,
    domain: &BallSet,
    mut record: CaseRecord,
) -> Result<CaseRecord> {
    let target = insertion_ball(x, t);
    let mut image = Vec::with_capacity(domain.len());
    let mut round_trip_failures = 0;
    for y in domain {
        let trace = bijection_insertion(y, x, t)?;
        if bijection_insertion_inverse(&trace.output, x, t)? != *y {
            round_trip_failures += 1;
        }
        if x.is_zero() && trace.output != *y {
            record.fail(format!("not the identity at {y}"));
        }
        image.push(trace.output);
    }
    let image = BallSet::from_words(x.alphabet(), x.len() + t, image)?;
    record = record.sizes(image.len(), target.len());
    record.witnesses_checked = domain.len();
    record.observed_equal = Some(image == target);
    record.expect(image.len() == domain.len(), || "not injective".into());
    record.expect(image == target, || "image differs from I_t(x)".into());
    record.expect(round_trip_failures == 0, || {
        format!("{round_trip_failures} round trips failed")
    });
    Ok(record)
}

fn check_injection(
    x: &Sequence,
    t: usize,
    p: usize,
    domain: &BallSet,
    mut record: CaseRecord,
) -> Result<CaseRecord> {
    let params = BallParams::new(t, 0, p);
    let target = ball(x, params)?;
    let mut image = Vec::with_capacity(domain.len());
    for y in domain {
        let z = injection_idp(y, x, t, p)?.output;
        if x.is_zero() && z != *y {
            record.fail(format!("not the identity at {y}"));
        }
        image.push(z);
    }
    let image = BallSet::from_words(x.alphabet(), x.len() + t, image)?;
    let strict = t >= 1 && p >= 1 && p < x.len() && run_count(x) > 1;
    record = record.sizes(image.len(), target.len());
    record.witnesses_checked = domain.len();
    record.predicted_equal = Some(!strict);
    record.observed_equal = Some(image == target);
    record.expect(image.len() == domain.len(), || "not injective".into());
    record.expect(image.is_subset(&target), || {
        "image escapes B_{t,0,p}(x)".into()
    });
    record.expect(strict != (image == target), || {
        "image/target equality contradicts the condition".into()
    });
    if strict {
        let witness = witness_nonsurjective(x, t, p)?.word;
        record.expect(target.contains(&witness), || {
            format!("witness {witness} not in the ball")
        });
        record.expect(!image.contains(&witness), || {
            format!("witness {witness} has a preimage")
        });
        record.detail = Some(format!("witness {witness}"));
    }
    Ok(record)
}

/// The insertion bijection and the `B_{t,0,p}` injection, each applied to the
/// whole of its domain for every centre `x`.
pub fn verify_mappings(grid: &GridSpec) -> Result<VerificationReport> {
    grid.validate()?;
    let selected = grid.selected();
    let mut records = Vec::new();
    for q in grid.alphabets()? {
        for n in 0..=grid.n_max {
            if selected.contains(&Check::Bijection) {
                for t in grid.budgets() {
                    let base = || {
                        CaseRecord::new(Check::Bijection, "insertion-bijection", q, n).params(
                            Some(t),
                            None,
                            None,
                        )
                    };
                    if let Some(skip) = over_cap(grid, q, n + t, base) {
                        records.push(skip);
                        continue;
                    }
                    let domain = insertion_ball(&Sequence::zeros(q, n), t);
                    records.extend(per_word(q, n, |x| {
                        check_bijection(x, t, &domain, base().word(x))
                            .unwrap_or_else(|e| record_error(base().word(x), e))
                    }));
                }
            }
            if selected.contains(&Check::Injection) {
                for t in grid.budgets() {
                    for p in grid.budgets() {
                        let base = || {
                            CaseRecord::new(Check::Injection, "idp-injection", q, n).params(
                                Some(t),
                                Some(0),
                                Some(p),
                            )
                        };
                        if let Some(skip) = over_cap(grid, q, n + t, base) {
                            records.push(skip);
                            continue;
                        }
                        let domain = ball(&Sequence::zeros(q, n), BallParams::new(t, 0, p))?;
                        records.extend(per_word(q, n, |x| {
                            check_injection(x, t, p, &domain, base().word(x))
                                .unwrap_or_else(|e| record_error(base().word(x), e))
                        }));
                    }
                }
            }
        }
    }
    Ok(VerificationReport::from_records(grid, records))
}

fn check_swap_flip(x: &Sequence, t: usize, p: usize, mut record: CaseRecord) -> Result<CaseRecord> {
    let w = witness_swap_flip(x, t, p)?;
    let outer = ball(x, BallParams::new(t, t, p))?;
    let inner = substitution_ball(x, t + p);
    record.detail = Some(format!("z={} m={} E={}", w.word, w.pivot, w.flips));
    record.witnesses_checked = 1;
    record.expect(outer.contains(&w.word), || {
        "witness not in the enumerated ball".into()
    });
    record.expect(!inner.contains(&w.word), || {
        "witness inside B_{0,0,t+p}(x)".into()
    });
    Ok(record)
}

fn check_deletion_pair(
    x: &Sequence,
    s: usize,
    grid_p: usize,
    mut record: CaseRecord,
) -> Result<CaseRecord> {
    let w = witness_deletion_pair(x, s)?;
    let deleted = deletion_ball(x, s)?;
    record.detail = Some(format!(
        "u={} v={} m={} E={}",
        w.first, w.second, w.pivot, w.kept
    ));
    record.expect(w.first != w.second, || "u = v".into());
    record.expect(
        deleted.contains(&w.first) && deleted.contains(&w.second),
        || "u or v not in D_s(x)".into(),
    );
    // The two substitution balls overlap in strictly fewer words than either holds.
    let mut checked = 1;
    for p in 1..=grid_p {
        if s + p >= x.len() {
            break;
        }
        let overlap =
            substitution_ball(&w.first, p).intersection_len(&substitution_ball(&w.second, p));
        let size = size_substitution_ball(x.len() - s, x.alphabet(), p);
        record.expect(BigUint::from(overlap) < size, || {
            format!("overlap {overlap} not below {size} at p={p}")
        });
        checked += 1;
    }
    record.witnesses_checked = checked;
    Ok(record)
}

fn check_nonsurjective(
    x: &Sequence,
    t: usize,
    p: usize,
    mut record: CaseRecord,
) -> Result<CaseRecord> {
    let w = witness_nonsurjective(x, t, p)?;
    let target = ball(x, BallParams::new(t, 0, p))?;
    record.detail = Some(format!(
        "z={} w={} case={:?} i={}",
        w.word, w.intermediate, w.case, w.pivot
    ));
    record.witnesses_checked = 1;
    record.expect(target.contains(&w.word), || {
        "witness not in the enumerated ball".into()
    });
    Ok(record)
}

/// Every witness constructor at every grid point meeting its preconditions.
pub fn verify_witnesses(grid: &GridSpec) -> Result<VerificationReport> {
    grid.validate()?;
    let mut records = Vec::new();
    for q in grid.alphabets()?.into_iter().filter(|q| q.size() >= 2) {
        for n in 2..=grid.n_max {
            for params in grid.triples(n) {
                let BallParams { t, s, p } = params;
                let len = params.output_len(n).max(n);
                type Job = fn(&Sequence, BallParams, usize, CaseRecord) -> Result<CaseRecord>;
                let mut jobs: Vec<(&str, BallParams, Job)> = Vec::new();
                // A witness ignores part of the triple; it is visited only where
                // the budgets it ignores are zero.
                if t == s && t >= 1 && t + p < n {
                    jobs.push(("swap-flip", params, |x, b, _, r| {
                        check_swap_flip(x, b.t, b.p, r)
                    }));
                }
                if t == 0 && p == 0 && s >= 1 && s < n {
                    jobs.push(("deletion-pair", params, |x, b, budget, r| {
                        check_deletion_pair(x, b.s, budget, r)
                    }));
                }
                if s == 0 && t >= 1 && p >= 1 && p < n {
                    jobs.push(("nonsurjective", params, |x, b, _, r| {
                        check_nonsurjective(x, b.t, b.p, r)
                    }));
                }
                for (label, at, job) in jobs {
                    let base = || CaseRecord::new(Check::Witnesses, label, q, n).triple(at);
                    if let Some(skip) = over_cap(grid, q, len, base) {
                        records.push(skip);
                        continue;
                    }
                    let budget = grid.budget_max;
                    let mut per_x = per_word(q, n, |x| {
                        if run_count(x) < 2 {
                            return base().word(x);
                        }
                        job(x, at, budget, base().word(x))
                            .unwrap_or_else(|e| record_error(base().word(x), e))
                    });
                    per_x.retain(|r| r.witnesses_checked > 0 || r.status == Status::Fail);
                    records.extend(per_x);
                }
            }
        }
    }
    Ok(VerificationReport::from_records(grid, records))
}

/// Runs every check named in the grid, in [`Check`] order, as one report.
pub fn run(grid: &GridSpec) -> Result<VerificationReport> {
    grid.validate()?;
    let selected = grid.selected();
    let mut records = Vec::new();
    for check in Check::ALL {
        if !selected.contains(&check) {
            continue;
        }
        let part = match check {
            Check::Theorem => verify_theorem(grid)?,
            Check::Formulas => verify_formulas(grid)?,
            Check::Containments => verify_containments(grid)?,
            Check::Bijection => verify_mappings(&grid.clone().with_checks([Check::Bijection]))?,
            Check::Injection => verify_mappings(&grid.clone().with_checks([Check::Injection]))?,
            Check::Witnesses => verify_witnesses(grid)?,
            Check::Intersection => verify_intersection_max(grid)?,
        };
        records.extend(part.records);
    }
    Ok(VerificationReport::from_records(grid, records))
}
