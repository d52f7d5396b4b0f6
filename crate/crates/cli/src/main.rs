use std::process::ExitCode;

use clap::Parser;
use ratsq_cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ratsq: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
