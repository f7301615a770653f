//! Command-line front end: argument parsing, JSON file formats and exit codes.
//!
//! Exit status is 0 on success, 2 when a verification ran and failed, and 1
//! for malformed input. Errors are printed to standard error as
//! `{"error": {"code": …, "message": …}}`.

pub mod commands;
pub mod error;
pub mod json;
pub mod spec;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

pub use commands::{execute, Cli, Output};
pub use error::{CliError, EXIT_FAILED, EXIT_MALFORMED};

/// Everything one invocation prints, and its exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Outcome {
                code: 0,
                stdout: e.to_string(),
                stderr: String::new(),
            }
        }
        Err(e) => {
            let err = CliError::malformed("usage", e.to_string().trim_end());
            return Outcome {
                code: err.exit,
                stdout: String::new(),
                stderr: err.to_json(),
            };
        }
    };
    match execute(&cli) {
        Ok(out) => Outcome {
            code: out.code,
            stdout: out.stdout,
            stderr: String::new(),
        },
        Err(err) => Outcome {
            code: err.exit,
            stdout: String::new(),
            stderr: err.to_json(),
        },
    }
}
