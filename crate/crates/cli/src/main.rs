mod args;
mod commands;
mod error;
mod range;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Format};
use error::{EXIT_INPUT, EXIT_MISMATCH};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_INPUT),
            };
        }
    };

    let started = Instant::now();
    match commands::run(&cli.command, &cli.global) {
        Ok(mut outcome) => {
            if !cli.global.no_timing {
                outcome.report.timing_ms = Some(started.elapsed().as_millis() as u64);
            }
            let _ = std::io::stdout().write_all(outcome.report.render(cli.global.format).as_bytes());
            if cli.global.format == Format::Tsv {
                for w in &outcome.report.warnings {
                    eprintln!("warning: {w}");
                }
            }
            if outcome.mismatch {
                ExitCode::from(EXIT_MISMATCH)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("symdef: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
