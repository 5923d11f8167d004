//! `qsurf`: code parameters, distances, hypermap conversion and oracle
//! checks for qudit surface codes.
//!
//! Exit codes: 0 success, 1 unreadable input, 2 invalid input,
//! 3 malformed input, 4 budget exceeded, 5 route mismatch, 64 usage error.

mod commands;
mod failure;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qudit_surface::distance::DEFAULT_DISTANCE_BUDGET;

use crate::commands::Level;
use crate::input::InputArgs;
use crate::report::Format;

const USAGE_EXIT: u8 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "qsurf",
    version,
    about = "Qudit surface codes from 2-complexes and hypermaps"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a document describes a valid complex, hypermap or code.
    Validate {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Report n, |S|, K, distance, generator weights and orientability.
    Params {
        #[command(flatten)]
        input: InputArgs,
        /// Cross-check K against the homology and dense-projector routes.
        #[arg(long)]
        verify: bool,
        /// Candidates the distance search may examine.
        #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
        budget: u64,
    },
    /// Compute the distance by the CSS and homological routes.
    Distance {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
        budget: u64,
    },
    /// Convert a hypermap to a 2-complex with an equivalence certificate.
    Convert {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run the brute-force oracle checks that fit the instance.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
        #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
        budget: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE_EXIT } else { 0 });
        }
    };
    let format = cli.format;
    let result = match &cli.command {
        Command::Validate { input } => commands::validate(input, format),
        Command::Params {
            input,
            verify,
            budget,
        } => commands::params(input, format, *budget, *verify),
        Command::Distance { input, budget } => commands::distance(input, format, *budget),
        Command::Convert { input } => commands::convert(input, format),
        Command::Verify {
            input,
            level,
            budget,
        } => commands::verify(input, format, *budget, *level),
    };
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            if outcome.code == commands::MISMATCH_EXIT {
                eprintln!("qsurf: independent routes disagree; see the report above");
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(failure) => {
            eprintln!("qsurf: {failure}");
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
