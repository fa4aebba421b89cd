use std::process::ExitCode;

use clap::Parser;

use brody_lab::cli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match brody_lab::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("brody-lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
