use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rccloop_cli::args::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // keep usage errors clear of the reserved codes 2..=7
            return ExitCode::from(if e.use_stderr() { rccloop_cli::EXIT_USAGE as u8 } else { 0 });
        }
    };
    let outcome = rccloop_cli::run(&cli);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    if !outcome.stderr.is_empty() {
        eprintln!("{}", outcome.stderr);
    }
    ExitCode::from(outcome.code as u8)
}
