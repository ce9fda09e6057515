use std::io::Write;
use std::process::ExitCode;

use cxj_cli::commands::RunError;

fn main() -> ExitCode {
    match cxj_cli::run(std::env::args_os()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(RunError::Clap(e)) if !e.use_stderr() => {
            // --help / --version
            let _ = e.print();
            ExitCode::SUCCESS
        }
        Err(RunError::Clap(e)) => {
            eprintln!("{}", cxj_cli::commands::one_line(&e));
            ExitCode::from(2)
        }
        Err(RunError::Cli(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
