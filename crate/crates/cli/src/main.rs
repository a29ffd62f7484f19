mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::{normalise_args, Cli, Command};
use commands::{Outcome, Output};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn run(cli: &Cli) -> pocket_spectra::Result<Outcome> {
    let timing = !cli.no_timing;
    match &cli.command {
        Command::Build(a) => commands::build(a, timing),
        Command::Charpoly(a) => commands::charpoly(a, timing),
        Command::Spectrum(a) => commands::spectrum(a, timing),
        Command::Verify(a) => commands::verify(a, timing),
        Command::Cospectral(c) => commands::cospectral(c, timing),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(normalise_args(std::env::args())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            let text = match outcome.output {
                Output::Text(t) => t,
                Output::Report(r) => {
                    let text = if cli.compact { serde_json::to_string(&r) } else { serde_json::to_string_pretty(&r) };
                    text.expect("reports serialise")
                }
            };
            // a closed pipe downstream is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if outcome.mismatch {
                ExitCode::from(EXIT_MISMATCH)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::from(EXIT_USAGE)
        }
    }
}
