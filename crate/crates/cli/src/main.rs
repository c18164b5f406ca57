//! `schurhopf`: exact computations in the ring of symmetric functions and the
//! universal character rings of GL, O and Sp.
//!
//! Exit codes: 0 success, 2 parse error, 3 degree overflow, 4 basis misuse,
//! 5 verification failure.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use schurhopf::char_rings::BasisLabel;
use schurhopf::error::Error;
use schurhopf::series::SeriesName;
use schurhopf::verify::Suite;

/// Largest `--max-degree` accepted.
pub const MAX_DEGREE_LIMIT: usize = 24;

#[derive(Parser, Debug)]
#[command(
    name = "schurhopf",
    version,
    about = "Symmetric functions and universal characters of GL, O and Sp"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Truncation degree for every Schur-function series.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_degree: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Operations on Schur functions.
    #[command(subcommand)]
    Schur(SchurCommand),
    /// Print a Littlewood series degree by degree.
    Series {
        /// One of A, B, C, D.
        name: SeriesName,
    },
    /// Operations on universal characters.
    #[command(subcommand)]
    Char(CharCommand),
    /// Evaluate a universal character at a group element.
    Eval {
        /// Group, e.g. `GL(3)`, `SO(5)`, `O(4)-`, `Sp(4)`.
        group: String,
        /// Partition labelling the character.
        partition: String,
        /// Free eigenvalue parameters as `p/q` rationals, comma separated.
        #[arg(long = "at", value_delimiter = ',', allow_hyphen_values = true)]
        values: Vec<String>,
        /// Basis of the character.
        #[arg(long, default_value = "GL")]
        basis: BasisLabel,
    },
    /// Run a verification suite.
    Verify {
        /// One of hopf, series, cauchy, tables, all.
        #[arg(default_value = "all")]
        suite: Suite,
    },
}

#[derive(Subcommand, Debug)]
pub enum SchurCommand {
    /// `s_λ · s_μ`.
    Mul { lambda: String, mu: String },
    /// `s_{λ/μ}`.
    Skew { lambda: String, mu: String },
    /// `Δ(s_λ)`.
    Coproduct { lambda: String },
    /// `S(s_λ)`.
    Antipode { lambda: String },
    /// `ε(s_λ)`.
    Counit { lambda: String },
    /// `(s_λ | s_μ)`.
    Scalar { lambda: String, mu: String },
}

#[derive(Subcommand, Debug)]
pub enum CharCommand {
    /// Restrict `{λ}` from GL to O or Sp.
    Branch {
        #[arg(long)]
        to: BasisLabel,
        lambda: String,
    },
    /// Decompose a tensor product.
    Tensor {
        #[arg(long)]
        basis: BasisLabel,
        lambda: String,
        mu: String,
        /// Use the series-driven product instead of the direct rule.
        #[arg(long)]
        generic: bool,
    },
    /// Re-express a character in another basis.
    Convert {
        #[arg(long)]
        from: BasisLabel,
        #[arg(long)]
        to: BasisLabel,
        lambda: String,
    },
    /// Coproduct of a basis character.
    Coproduct {
        #[arg(long)]
        basis: BasisLabel,
        lambda: String,
    },
    /// Antipode of a basis character.
    Antipode {
        #[arg(long)]
        basis: BasisLabel,
        lambda: String,
    },
    /// Counit of a basis character.
    Counit {
        #[arg(long)]
        basis: BasisLabel,
        lambda: String,
    },
}

pub enum Failure {
    Error(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidPartition { .. }
        | Error::WeightLimit { .. }
        | Error::InvalidSpec(_)
        | Error::InvalidNumber(_)
        | Error::ZeroValue
        | Error::SingularDenominator => 2,
        Error::DegreeOverflow { .. } | Error::DegreeMismatch { .. } | Error::NotInvertible => 3,
        Error::MixedBasis { .. } | Error::BasisMisuse { .. } | Error::OutOfStableRange { .. } => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Verification(report)) => {
            println!("{report}");
            ExitCode::from(5)
        }
    }
}
