use std::process::ExitCode;

use clap::Parser;

use fibocube::cli::Cli;

fn main() -> ExitCode {
    ExitCode::from(Cli::parse().run())
}
