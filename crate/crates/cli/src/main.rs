mod args;
mod commands;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Table(c) => commands::table::run(c),
        Command::Matrices(m) => commands::matrices::run(m),
        Command::Scan(s) => commands::scan::run(s),
        Command::Verify(c) => commands::verify::run(c),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hypercx: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
