//! `sigmak` command-line front end.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or
//! environment error.

pub mod args;
pub mod cache;
pub mod commands;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::Parser;

use crate::args::{Cli, Command};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// A bad flag combination or value that clap itself cannot catch.
#[derive(Debug)]
pub struct UsageError(String);

impl UsageError {
    pub fn new(msg: impl Into<String>) -> Self {
        UsageError(msg.into())
    }
}

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Parses `argv` and runs the command, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = if e.use_stderr() { e.render().to_string() } else { e.to_string() };
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Search(a) => commands::search::run(a, out),
        Command::Profile(a) => commands::profile::run(a, out),
        Command::Boundary(a) => commands::boundary::run(a, out),
        Command::Verify(a) => verify::run(a, out),
        Command::Index(a) => commands::index::run(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}
