use std::io::ErrorKind;
use std::process::ExitCode;

use clap::Parser;
use pairframe::cli::CliError;

fn main() -> ExitCode {
    let cli = pairframe::cli::Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match pairframe::cli::run(&cli, &mut stdout) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Io(e)) if e.kind() == ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
