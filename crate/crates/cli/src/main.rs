use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = lscoinv_cli::Cli::parse();
    match lscoinv_cli::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(out.stdout.as_bytes()).and_then(|()| stdout.flush()) {
                eprintln!("error: writing output: {e}");
                return ExitCode::FAILURE;
            }
            if out.success {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: verification failed");
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
