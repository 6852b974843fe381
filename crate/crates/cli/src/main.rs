use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use epicalc_cli::{Cli, EXIT_INTERNAL};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match epicalc_cli::run(&cli) {
        Ok(bytes) => {
            let written = match &cli.run.out {
                Some(path) => std::fs::write(path, &bytes)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => std::io::stdout()
                    .write_all(&bytes)
                    .map_err(|e| format!("cannot write stdout: {e}")),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(message) => {
                    eprintln!("error: {message}");
                    ExitCode::from(EXIT_INTERNAL as u8)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
