use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod error;
mod password;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Encrypt(a) => commands::encrypt(a),
        Command::Decrypt(a) => commands::decrypt(a),
        Command::Analyze(a) => commands::analyze(a),
        Command::Spectrum(a) => commands::spectrum(a),
        Command::Bench(a) => commands::bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lzx: {e}");
            e.exit_code()
        }
    }
}
