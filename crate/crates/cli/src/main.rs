use std::process::ExitCode;

use clap::Parser;
use repeatvote_cli::app::{execute, threads_from_env, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = threads_from_env().and_then(|threads| execute(&cli.command, threads));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("repeatvote: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
