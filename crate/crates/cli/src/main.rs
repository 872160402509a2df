//! `towergaps`: bases, dimensions, gap sets and verification suites from
//! the command line.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

/// Exit code for a verification mismatch.
const EXIT_MISMATCH: u8 = 1;
/// Exit code for usage and validation errors.
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "towergaps", version, about = "Riemann-Roch spaces and Weierstrass gaps on the third level of the tower")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Prime power q.
    #[arg(long, global = true)]
    pub q: Option<i64>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads; TOWERGAPS_THREADS takes precedence.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Progress on stderr; repeat for more.
    #[arg(long, short, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus of the n-th function field of the tower.
    Genus {
        #[arg(long, default_value_t = 3)]
        level: i64,
    },
    /// Divisor of a monomial on the third level.
    Divisor(DivisorArgs),
    /// Dimension of L(G).
    Dim(CoeffArgs),
    /// Monomial basis of L(G).
    Basis {
        #[command(flatten)]
        coeffs: CoeffArgs,
        /// Monomial family; `auto` picks xwv for scalar s and t, multi otherwise.
        #[arg(long, value_enum, default_value_t = VariantArg::Auto)]
        variant: VariantArg,
    },
    /// Pure gaps at a selection of places.
    Gaps {
        /// Comma-separated places `Q1..Qk` then `P1..Pl`.
        #[arg(long, default_value = "Q1")]
        places: String,
        /// Per-coordinate bound; defaults to 2g - 1.
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Semigroup membership and pure-gap status of one tuple.
    Check {
        #[arg(long)]
        places: String,
        /// Comma-separated non-negative entries, one per place.
        #[arg(long)]
        tuple: String,
    },
    /// Run verification suites.
    Verify {
        /// Suite names, `identities` or `all`, comma-separated.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "box", value_enum, default_value_t = BoxArg::Default)]
        box_size: BoxArg,
        /// Include wall times in the report.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct DivisorArgs {
    /// `i,j,k` for x1^i w^j v^k.
    #[arg(long, allow_hyphen_values = true)]
    pub xwv: Option<String>,
    /// `i,j,k` for x1^i x2^j x3^k.
    #[arg(long, allow_hyphen_values = true)]
    pub x123: Option<String>,
    /// `i:(j_1,..):(k_1,..)` for x1^i prod (z2 - a_nu)^j_nu prod (z3 - a_mu)^k_mu.
    #[arg(long, allow_hyphen_values = true)]
    pub multi: Option<String>,
}

/// Coefficients of `G = rQ + sum s_mu S0_mu + sum t_nu S1_nu + uP`. `s` and
/// `t` take one value for every place of the block or a full list.
#[derive(Debug, Args)]
pub struct CoeffArgs {
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub r: i64,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub s: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub t: String,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub u: i64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    Auto,
    Xwv,
    X1x2x3,
    Multi,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BoxArg {
    Tiny,
    Default,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Err(e) = configure_threads(cli.global.threads) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    match commands::run(&cli) {
        Ok(out) => {
            if let Err(e) = out.write(&cli.global) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            if out.mismatch {
                ExitCode::from(EXIT_MISMATCH)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn configure_threads(hint: Option<usize>) -> Result<(), String> {
    let n = match std::env::var("TOWERGAPS_THREADS") {
        Ok(v) => Some(
            v.trim()
                .parse::<usize>()
                .map_err(|_| format!("TOWERGAPS_THREADS must be a positive integer, got {v:?}"))?,
        ),
        Err(_) => hint,
    };
    match n {
        Some(0) => Err("thread count must be positive".into()),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| e.to_string()),
        None => Ok(()),
    }
}
