use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use idsball::verify::Check;

pub const WORD_CAP_ENV: &str = "IDSBALL_WORD_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "idsball",
    version,
    about = "Insertion, deletion and substitution balls over q-ary words"
)]
pub struct Cli {
    /// Output format; csv is only available for `verify`.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest word space q^len any single enumeration may touch.
    #[arg(long, global = true, env = WORD_CAP_ENV)]
    pub word_cap: Option<u64>,

    /// Print resolved settings and, for `verify`, skipped cases to stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerated ball size next to the minimum bound and its equality condition.
    Size(BallArgs),
    /// List every member of a ball in lexicographic order.
    Enum(BallArgs),
    /// Apply one of the insertion maps to a single word.
    Map(MapArgs),
    /// Build a witness word and re-check its properties.
    Witness(WitnessArgs),
    /// Run the exhaustive verification grid.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct Budgets {
    /// Number of insertions.
    #[arg(short = 't', long = "insertions", default_value_t = 0)]
    pub t: usize,
    /// Number of deletions.
    #[arg(short = 's', long = "deletions", default_value_t = 0)]
    pub s: usize,
    /// Maximum number of substitutions.
    #[arg(short = 'p', long = "substitutions", default_value_t = 0)]
    pub p: usize,
}

#[derive(Debug, Args)]
pub struct BallArgs {
    /// Centre word; pass "" for the empty word.
    #[arg(long)]
    pub x: String,
    #[arg(long)]
    pub q: u32,
    #[command(flatten)]
    pub budgets: Budgets,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    /// I_t(0^n) -> I_t(x)
    Bijection,
    /// B_{t,0,p}(0^n) -> B_{t,0,p}(x)
    Injection,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[arg(value_enum)]
    pub kind: MapKind,
    /// Input word from the ball around 0^n.
    #[arg(long)]
    pub y: String,
    /// Target centre word.
    #[arg(long)]
    pub x: String,
    #[arg(long)]
    pub q: u32,
    #[arg(short = 't', long = "insertions")]
    pub t: usize,
    /// Substitution budget; injection only.
    #[arg(short = 'p', long = "substitutions")]
    pub p: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessKind {
    /// A word at Hamming distance t+p+1 inside B_{t,t,p}(x).
    #[value(name = "swap-flip", alias = "lemma41")]
    SwapFlip,
    /// Two distinct words of D_s(x) differing in one position.
    #[value(name = "deletion-pair", alias = "lemma51")]
    DeletionPair,
    /// A member of B_{t,0,p}(x) outside the image of the injection.
    #[value(name = "nonsurjective", alias = "lemma61")]
    Nonsurjective,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[arg(value_enum)]
    pub kind: WitnessKind,
    #[arg(long)]
    pub x: String,
    #[arg(long)]
    pub q: u32,
    #[command(flatten)]
    pub budgets: Budgets,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Alphabet sizes, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [1u32, 2, 3])]
    pub q_list: Vec<u32>,
    #[arg(long, default_value_t = 5)]
    pub n_max: usize,
    /// Upper limit for each of t, s and p.
    #[arg(long, default_value_t = 2)]
    pub budget_max: usize,
    /// Checks to run, comma separated; defaults to all of them.
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<Check>,
    /// Write the report here and print only the summary line.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
