use std::process::ExitCode;

use clap::Parser;

use ringel::{commands, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ringel: {e}");
            e.exit_code()
        }
    }
}
