//! Command-line workbench tying the constructions, detectors, formulas and
//! exact searches into reproducible experiments.
//!
//! Exit codes: 0 success (for `check`: witness found), 1 pattern absent /
//! disagreement found, 2 inconclusive or resource-capped, 64 usage error.
//! Identical invocations produce byte-identical artifacts. The environment
//! variable `TURAN_NODE_CAP` overrides the default backtracking budget.

mod commands;
mod grid;

use clap::Parser;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "starforest", version, about = "Extremal star-forest workbench")]
struct Cli {
    #[command(subcommand)]
    command: commands::Command,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help and version requests are not usage errors
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(64);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(64)
        }
    }
}
