//! `bianchi`: polynomial first integrals of the Bianchi class A systems.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

/// Exit status of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let result = match &cli.command {
        Command::Catalog(a) => commands::catalog::run(&cli.common, a),
        Command::Find(a) => commands::find::run(&cli.common, a),
        Command::Verify(a) => commands::verify::run(&cli.common, a),
        Command::Simulate(a) => commands::simulate::run(&cli.common, a),
        Command::Lemma(a) => commands::lemma::run(&cli.common, a),
        Command::Report(a) => commands::report::run(&cli.common, a),
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
