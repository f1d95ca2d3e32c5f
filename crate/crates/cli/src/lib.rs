//! Command-line front end for `strata-core`.
//!
//! [`run`] takes an argument vector and returns the exit code together with
//! everything that would be written to stdout and stderr, which keeps the
//! binary a thin shell and the commands testable in-process.

pub mod commands;
pub mod expr;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use strata_core::exact_ring::Rational;
use strata_core::{Error as CoreError, LyapunovTable, Partition};

use crate::expr::{parse_partition, parse_q};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "strata",
    version,
    about = "Exact intersection numbers for strata of abelian differentials"
)]
pub struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Append decimal approximations (marked inexact) to rationals in text output.
    #[arg(long, global = true)]
    pub approx: bool,

    /// Load the Lyapunov table from this file instead of the built-in copy.
    #[arg(long, global = true, value_name = "PATH")]
    pub table_file: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// κ_μ = (1/12) Σ m(m+2)/(m+1).
    Kappa {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
    /// Porteous class of the pointed Brill–Noether locus BN^r_μ.
    BnClass {
        #[arg(long = "g")]
        g: u32,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long = "r")]
        r: u32,
        /// Eliminate even λ's.
        #[arg(long)]
        reduce: bool,
    },
    /// Class of the stratum PH(μ) in M_{g,n}, μ a partition of 2g-2.
    StratumClass {
        #[arg(long = "g")]
        g: u32,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        reduce: bool,
    },
    /// Class of the double-zero divisor PH̄(2,1^{2g-4}).
    StratumDivisor {
        #[arg(long = "g")]
        g: u32,
        /// Only the class on the open part (no boundary terms).
        #[arg(long)]
        interior: bool,
    },
    /// Pair the double-zero divisor with a test curve.
    Pair {
        #[arg(long = "g")]
        g: Option<u32>,
        /// Intersection numbers ψ,λ,δ0,…,δ⌊g/2⌋.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "fixture")]
        curve: Option<String>,
        /// Built-in test curve: plane-quartic-pencil or canonical-pencil.
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long)]
        interior: bool,
    },
    /// Intersection numbers of a Teichmüller curve, per unit χ/2.
    Ratios {
        #[arg(long = "g")]
        g: u32,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long = "L", value_parser = parse_q, allow_hyphen_values = true)]
        l: Rational,
        /// Divisor a,b1,…,bk,c meaning aλ + Σ b_i ω_i + c δ0.
        #[arg(long, allow_hyphen_values = true)]
        divisor: Option<String>,
        #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
        chi_half: Option<Rational>,
    },
    /// Extremality certificate for a pointed Brill–Noether divisor.
    Certify {
        /// A row of the Lyapunov table, e.g. W-g2.
        #[arg(long, conflicts_with_all = ["g", "a", "l", "kind"])]
        case: Option<String>,
        #[arg(long = "g")]
        g: Option<u32>,
        #[arg(long = "a", value_parser = parse_partition)]
        a: Option<Partition>,
        #[arg(long = "L", value_parser = parse_q, allow_hyphen_values = true)]
        l: Option<Rational>,
        /// exact or limit
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
        epsilon: Option<Rational>,
        #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
        s: Option<Rational>,
    },
    /// Print the Lyapunov table.
    Table,
    /// Replay every built-in check.
    Verify,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::PartitionSyntax { .. } | CoreError::RationalSyntax(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Domain(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Per-invocation settings shared by the commands.
pub struct Context {
    pub json: bool,
    pub approx: bool,
    table_file: Option<PathBuf>,
}

impl Context {
    pub fn table(&self) -> Result<(LyapunovTable, String), CliError> {
        match &self.table_file {
            None => Ok((LyapunovTable::builtin().clone(), "built-in".to_string())),
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    CliError::Usage(format!("cannot read {}: {e}", path.display()))
                })?;
                let table = LyapunovTable::parse(&text)
                    .map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
                Ok((table, path.display().to_string()))
            }
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let ctx = Context {
        json: cli.json,
        approx: cli.approx,
        table_file: cli.table_file.clone(),
    };
    match commands::dispatch(&ctx, &cli.command) {
        Ok((doc, code)) => Outcome {
            code,
            stdout: doc.render(ctx.json),
            stderr: String::new(),
        },
        Err(CliError::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(CliError::Domain(msg)) => Outcome {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}
