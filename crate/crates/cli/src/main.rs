//! `tlschur`: decomposition tables, cover reports and the oracle
//! verification suite from the command line.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage errors.

mod args;
mod commands;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use tlschur::Error;

const CHECK_FAILED: u8 = 1;
const USAGE: u8 = 2;

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Usage(_) | Error::Parse(_) | Error::CapExceeded(_) | Error::DimensionMismatch(_) | Error::ParamMismatch(_) => {
            USAGE
        }
        Error::Construction(_) | Error::Cancelled => CHECK_FAILED,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    let report = match commands::run(&cli.command, cli.format) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &report.text),
        None => std::io::stdout().lock().write_all(report.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(USAGE);
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(CHECK_FAILED)
    }
}
