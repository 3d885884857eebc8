use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use og10_llv_cli::args::Format;
use og10_llv_cli::render::{to_json, to_text};
use og10_llv_cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(&cli, argv) {
        Ok(outcome) => {
            let text = match cli.format {
                Format::Json => to_json(&outcome.envelope),
                Format::Text => to_text(&outcome.envelope),
            };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_USAGE as u8);
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.0);
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
