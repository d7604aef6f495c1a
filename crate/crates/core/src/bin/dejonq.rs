use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use dejonquieres::cli::{execute, Cli, EXIT_INVALID};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((output, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(output.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::FAILURE;
            }
            ExitCode::from(code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_INVALID as u8)
        }
    }
}
