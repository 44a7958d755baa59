//! `binomiacci` — exact Binomiacci numbers (OEIS A074829) on the command
//! line: the table and triangle, generating-function coefficients, the
//! asymptotic comparison table, and the cross-verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{SeriesKind, SuiteSelection};
use output::OutputFormat;

/// Per-dimension cap that keeps accidental huge allocations at bay.
const SIZE_GUARD: usize = 10_000;

#[derive(Parser)]
#[command(
    name = "binomiacci",
    version,
    about = "Exact Binomiacci numbers (OEIS A074829): tables, generating functions, residue checks, asymptotics"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "pretty")]
    format: OutputFormat,

    /// Write the output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the table B(k, n) for k = 0..=rows, n = 0..=cols
    Table {
        /// Largest row index k
        #[arg(long)]
        rows: usize,
        /// Largest column index n
        #[arg(long)]
        cols: usize,
        /// Override the size guard of 10000 per dimension
        #[arg(long)]
        force: bool,
    },
    /// Print the first `rows` rows of the centered triangle
    Triangle {
        /// Number of triangle rows (at least 1)
        #[arg(long)]
        rows: usize,
    },
    /// Print exact generating-function coefficients
    Series {
        /// Which series: fib, central, bivariate, or row:K
        #[arg(long, value_parser = SeriesKind::parse)]
        which: SeriesKind,
        /// Truncation order (coefficients 0..=order)
        #[arg(long)]
        order: usize,
        /// Override the size guard of 10000 on the order
        #[arg(long)]
        force: bool,
    },
    /// Exact values vs the asymptotic estimate 3·4^n/sqrt(pi n)
    Asympt {
        /// Largest n (at least 1, at most 500)
        #[arg(long)]
        max: usize,
    },
    /// Run cross-verification suites and report each check
    Verify {
        /// all, recurrence, gf, diagonal, residues, or asymptotics
        #[arg(long, value_parser = SuiteSelection::parse)]
        suite: SuiteSelection,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let (report, exit) = match cli.command {
        Command::Table { rows, cols, force } => {
            if !force && (rows > SIZE_GUARD || cols > SIZE_GUARD) {
                return Err(format!(
                    "table dimensions are capped at {SIZE_GUARD} (use --force to override)"
                ));
            }
            (commands::table_report(rows, cols, force), ExitCode::SUCCESS)
        }
        Command::Triangle { rows } => {
            if rows == 0 {
                return Err("triangle needs at least one row".to_string());
            }
            (commands::triangle_report(rows), ExitCode::SUCCESS)
        }
        Command::Series {
            which,
            order,
            force,
        } => {
            if !force && order > SIZE_GUARD {
                return Err(format!(
                    "series order is capped at {SIZE_GUARD} (use --force to override)"
                ));
            }
            if let SeriesKind::Row(k) = which {
                if !force && k > SIZE_GUARD {
                    return Err(format!(
                        "row index is capped at {SIZE_GUARD} (use --force to override)"
                    ));
                }
            }
            (
                commands::series_report(which, order, force),
                ExitCode::SUCCESS,
            )
        }
        Command::Asympt { max } => (commands::asympt_report(max)?, ExitCode::SUCCESS),
        Command::Verify { suite } => {
            let (report, all_passed) = commands::verify_report(suite);
            let exit = if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
            (report, exit)
        }
    };

    let rendered = report.render(cli.format);
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(exit)
}
