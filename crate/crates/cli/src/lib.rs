//! Command-line front end for `idsball`.
//!
//! [`run`] does all the work and returns what a process would print, so the
//! binary is a thin wrapper and tests can drive commands in-process.
//!
//! Exit codes: 0 success, 1 usage/parse/domain error, 2 a verification or
//! witness check failed, 3 an enumeration hit the word cap.

pub mod args;
pub mod output;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use idsball::verify::{self, GridSpec};
use idsball::{
    ball_size_capped, balls::check_word_cap, bijection_insertion, hamming, injection_idp,
    is_subsequence, member_definitional, minimality_predicate, witness_deletion_pair,
    witness_nonsurjective, witness_swap_flip, Alphabet, BallParams, Error, NonSurjectionCase,
    NonSurjectionVerdict, Sequence, DEFAULT_WORD_CAP,
};

use crate::args::{
    BallArgs, Cli, Command, Format, MapArgs, MapKind, VerifyArgs, WitnessArgs, WitnessKind,
};
use crate::output::{EnumOutput, MapOutput, Output, SizeOutput, WitnessOutput};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Everything one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(err: &Error) -> Self {
        let code = match err {
            Error::WordCapExceeded { .. } => EXIT_CAP,
            Error::Postcondition(_) => EXIT_FAILED,
            _ => EXIT_ERROR,
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(rendered),
                _ => Outcome {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let mut outcome = match execute(&cli) {
        Ok(outcome) => outcome,
        Err(err) => Outcome::error(&err),
    };
    if cli.verbose > 0 {
        let cap = cli
            .word_cap
            .map_or_else(|| "default".to_string(), |c| c.to_string());
        outcome.stderr.insert_str(
            0,
            &format!("format={:?} word_cap={cap}\n", cli.format).to_lowercase(),
        );
    }
    outcome
}

fn execute(cli: &Cli) -> idsball::Result<Outcome> {
    if cli.format == Format::Csv && !matches!(cli.command, Command::Verify(_)) {
        return Err(Error::Precondition(
            "csv output is only available for verify".into(),
        ));
    }
    let cap = cli.word_cap.unwrap_or(DEFAULT_WORD_CAP);
    let output = match &cli.command {
        Command::Size(a) => cmd_size(a, cap)?,
        Command::Enum(a) => cmd_enum(a, cap)?,
        Command::Map(a) => cmd_map(a)?,
        Command::Witness(a) => cmd_witness(a)?,
        Command::Verify(a) => return cmd_verify(a, cli),
    };
    let text = match cli.format {
        Format::Json => output.to_json(),
        _ => output.render_text(),
    };
    let code = match &output {
        Output::Witness(w) if !w.passed() => EXIT_FAILED,
        _ => EXIT_OK,
    };
    Ok(Outcome {
        code,
        stdout: text,
        stderr: String::new(),
    })
}

fn alphabet(q: u32) -> idsball::Result<Alphabet> {
    Alphabet::new(q)
}

fn params(b: &args::Budgets) -> BallParams {
    BallParams::new(b.t, b.s, b.p)
}

pub fn cmd_size(a: &BallArgs, cap: u64) -> idsball::Result<Output> {
    let x = Sequence::parse(&a.x, alphabet(a.q)?)?;
    let params = params(&a.budgets);
    let report = minimality_predicate(&x, params)?;
    let size = ball_size_capped(&x, params, cap)?;
    Ok(Output::Size(SizeOutput {
        x: x.to_string(),
        q: a.q,
        t: params.t,
        s: params.s,
        p: params.p,
        observed_equal: size == report.bound,
        size: size.to_string(),
        bound: report.bound.to_string(),
        predicted_equal: report.minimal_predicted,
        conditions: report.conditions.iter().map(ToString::to_string).collect(),
    }))
}

pub fn cmd_enum(a: &BallArgs, cap: u64) -> idsball::Result<Output> {
    let x = Sequence::parse(&a.x, alphabet(a.q)?)?;
    let params = params(&a.budgets);
    params.check_length(x.len())?;
    check_word_cap(x.alphabet(), params.output_len(x.len()), cap)?;
    let members = idsball::ball(&x, params)?;
    Ok(Output::Enum(EnumOutput {
        x: x.to_string(),
        q: a.q,
        t: params.t,
        s: params.s,
        p: params.p,
        word_length: members.word_length(),
        count: members.len(),
        words: members.iter().map(ToString::to_string).collect(),
    }))
}

pub fn cmd_map(a: &MapArgs) -> idsball::Result<Output> {
    let q = alphabet(a.q)?;
    let y = Sequence::parse(&a.y, q)?;
    let x = Sequence::parse(&a.x, q)?;
    let trace = match a.kind {
        MapKind::Bijection => {
            if a.p.is_some() {
                return Err(Error::Precondition(
                    "the bijection takes no substitution budget".into(),
                ));
            }
            bijection_insertion(&y, &x, a.t)?
        }
        MapKind::Injection => injection_idp(&y, &x, a.t, a.p.unwrap_or(0))?,
    };
    Ok(Output::Map(MapOutput {
        kind: match a.kind {
            MapKind::Bijection => "bijection".into(),
            MapKind::Injection => "injection".into(),
        },
        y: y.to_string(),
        x: x.to_string(),
        q: a.q,
        t: a.t,
        p: match a.kind {
            MapKind::Bijection => None,
            MapKind::Injection => Some(a.p.unwrap_or(0)),
        },
        matched: trace.matched.to_string(),
        fill: trace.fill.map(|j| j.to_string()),
        anchors: trace.anchors.map(|k| k.to_string()),
        z: trace.output.to_string(),
    }))
}

pub fn cmd_witness(a: &WitnessArgs) -> idsball::Result<Output> {
    let x = Sequence::parse(&a.x, alphabet(a.q)?)?;
    let args::Budgets { t, s, p } = a.budgets;
    let witness = match a.kind {
        WitnessKind::SwapFlip => {
            let w = witness_swap_flip(&x, t, p)?;
            WitnessOutput::SwapFlip {
                x: x.to_string(),
                q: a.q,
                t,
                p,
                pivot: w.pivot,
                flips: w.flips.to_string(),
                hamming: hamming(&x, &w.word)?,
                expected_hamming: t + p + 1,
                member: member_definitional(&w.word, &x, BallParams::new(t, t, p))?,
                z: w.word.to_string(),
            }
        }
        WitnessKind::DeletionPair => {
            let w = witness_deletion_pair(&x, s)?;
            let in_deletion_ball = |u: &Sequence| u.len() + s == x.len() && is_subsequence(u, &x);
            WitnessOutput::DeletionPair {
                x: x.to_string(),
                q: a.q,
                s,
                pivot: w.pivot,
                kept: w.kept.to_string(),
                distinct: w.first != w.second,
                members: in_deletion_ball(&w.first) && in_deletion_ball(&w.second),
                u: w.first.to_string(),
                v: w.second.to_string(),
            }
        }
        WitnessKind::Nonsurjective => {
            let w = witness_nonsurjective(&x, t, p)?;
            let verdict = NonSurjectionVerdict::evaluate(&w.word, &x, t, p)?;
            WitnessOutput::Nonsurjective {
                x: x.to_string(),
                q: a.q,
                t,
                p,
                w: w.intermediate.to_string(),
                case: match w.case {
                    NonSurjectionCase::Prefix => "prefix".into(),
                    NonSurjectionCase::Suffix => "suffix".into(),
                },
                pivot: w.pivot,
                z: w.word.to_string(),
                member: verdict.member,
                prefix_differs: verdict.prefix_differs,
                tail_not_embedded: verdict.tail_not_embedded,
            }
        }
    };
    Ok(Output::Witness(witness))
}

pub fn grid_from_args(a: &VerifyArgs, word_cap: Option<u64>) -> GridSpec {
    let defaults = GridSpec::default();
    GridSpec {
        q_values: a.q_list.clone(),
        n_max: a.n_max,
        budget_max: a.budget_max,
        word_cap: word_cap.unwrap_or(defaults.word_cap),
        checks: if a.checks.is_empty() {
            defaults.checks
        } else {
            a.checks.clone()
        },
    }
}

fn cmd_verify(a: &VerifyArgs, cli: &Cli) -> idsball::Result<Outcome> {
    let grid = grid_from_args(a, cli.word_cap);
    let report = verify::run(&grid)?;
    let rendered = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => {
            let mut json = report.to_json();
            json.push('\n');
            json
        }
        Format::Csv => report.to_csv(),
    };
    let stdout = match &a.out {
        Some(path) => {
            std::fs::write(path, &rendered).map_err(|e| {
                Error::Precondition(format!("cannot write {}: {e}", path.display()))
            })?;
            format!("{}\n", report.summary_line())
        }
        None => rendered,
    };
    let mut stderr = String::new();
    if cli.verbose > 0 {
        for record in report.skipped() {
            stderr.push_str(&format!(
                "skipped {} {} q={} n={}: {}\n",
                record.check,
                record.label,
                record.q,
                record.n,
                record.detail.as_deref().unwrap_or("")
            ));
        }
    }
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    Ok(Outcome {
        code,
        stdout,
        stderr,
    })
}
