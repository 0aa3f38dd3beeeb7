//! Command-line front end: argument parsing, codebook files and table reproduction.
//!
//! Exit codes: 0 success, 1 failed check or internal error, 2 usage error, 3 budget exhausted.

use std::ffi::OsString;
use std::io::Write;

use aldkit_core::budget::Budget;
use clap::Parser;

pub mod args;
pub mod codebook_file;
mod commands;
pub mod error;
pub mod expected;
pub mod tables;

pub use error::{CliError, CliResult};

/// Parses `argv` and runs it, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let budget = match cli.budget {
        Some(s) if !s.is_finite() || s < 0.0 => {
            let _ = writeln!(err, "error: --budget must be a nonnegative number of seconds");
            return 2;
        }
        Some(s) => Budget::from_secs(s),
        None => Budget::unlimited(),
    };
    match commands::execute(cli.command, &budget, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
