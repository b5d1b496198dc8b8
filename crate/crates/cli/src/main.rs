//! `kmonoid`: validation, normal forms, prefix codes, group elements and
//! self-similar actions from the command line.
//!
//! Exit codes: 0 success, 1 usage, 2 square failure, 3 cube failure,
//! 4 any other failed check or precondition.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "kmonoid",
    version,
    about = "Compute in k-monoids given by squares"
)]
pub struct Cli {
    /// Output layout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// Tab separated records.
    Tabular,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check completeness, the inverse law and every cube of a presentation.
    Validate { file: PathBuf },
    /// Normal form of a word.
    Nf { file: PathBuf, letters: Vec<String> },
    /// Product of two words: `mul FILE LHS… -- RHS…`.
    Mul {
        file: PathBuf,
        lhs: Vec<String>,
        #[arg(last = true)]
        rhs: Vec<String>,
    },
    /// Split an element at a degree.
    Factor {
        file: PathBuf,
        letters: Vec<String>,
        /// Degree of the left factor, as `m1,m2,…`.
        #[arg(long)]
        at: String,
    },
    /// Minimal common extensions: `join FILE A… -- B…`.
    Join {
        file: PathBuf,
        a: Vec<String>,
        #[arg(last = true)]
        b: Vec<String>,
    },
    /// Prefix code checks.
    Code {
        #[command(subcommand)]
        op: CodeOp,
    },
    /// Group elements given by code bijections.
    Group {
        #[command(subcommand)]
        op: GroupOp,
    },
    /// Self-similar actions.
    Selfsim {
        #[command(subcommand)]
        op: SelfsimOp,
    },
    /// Write a named fixture: prod22, counterexample3, counterexample3-repaired,
    /// adding-machine, rsv, nk(K).
    Fixture {
        name: String,
        /// Target directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Largest |a ⊔ b| over pairs of degree at most the bound.
    Align {
        file: PathBuf,
        #[arg(long)]
        bound: String,
    },
    /// Random cancellativity, conicality, degree and Levi checks.
    Props {
        file: PathBuf,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        /// Largest degree sampled, as `m1,m2,…`; defaults to 2 in every color.
        #[arg(long)]
        max: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    pub file: PathBuf,
    /// One element per line.
    #[arg(long)]
    pub code: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum CodeOp {
    /// Are the elements pairwise incomparable?
    Check(CodeArgs),
    /// Is the code maximal?
    Maximal(CodeArgs),
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    pub file: PathBuf,
    /// Element files of `d… -> r…` lines.
    #[arg(long = "elt")]
    pub elts: Vec<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GroupOp {
    /// `φ∘θ` for `--elt φ --elt θ`, refined to a common code.
    Compose(GroupArgs),
    /// The inverse bijection.
    Invert(GroupArgs),
    /// Equality in the group.
    Equal(GroupArgs),
}

#[derive(Debug, Subcommand)]
pub enum SelfsimOp {
    /// `g·u` and `g|_u`.
    Act {
        action: PathBuf,
        /// Group word, space separated.
        #[arg(long, default_value = "")]
        word: String,
        letters: Vec<String>,
    },
    /// Product of two elements written `u… | g…`.
    Mul {
        action: PathBuf,
        lhs: String,
        rhs: String,
    },
    /// Action validity, the coherence identities and the windowed
    /// factorization check.
    Check {
        action: PathBuf,
        /// Degree bound, as `m1,m2,…`; a single number applies to every color.
        #[arg(long, default_value = "2")]
        bound: String,
        #[arg(long, default_value_t = 3)]
        window: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    let outcome = commands::run(&cli);
    let mut stdout = std::io::stdout().lock();
    for line in &outcome.lines {
        let _ = writeln!(stdout, "{line}");
    }
    if let Some(message) = &outcome.error {
        eprintln!("error: {message}");
    }
    ExitCode::from(outcome.code)
}
