//! Command-line driver for the `parablend` kernel.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 parse or configuration error,
//! 3 geometry error, 4 failed continuity check.

pub mod commands;
pub mod config;
mod report;

use clap::Parser;

use crate::commands::{cmd_check, cmd_curve, cmd_surface, exit};
use crate::config::{Cli, Command};

/// Parses `args` and runs the selected subcommand, returning the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::PARSE } else { exit::OK };
        }
    };
    let result = match &cli.command {
        Command::Curve(args) => cmd_curve(args),
        Command::Surface(args) => cmd_surface(args),
        Command::Check(args) => cmd_check(args),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {failure}");
            failure.code
        }
    }
}
