use std::io::{self, BufWriter};
use std::process::ExitCode;

use clap::Parser;
use touchard_cli::{exit_code, run, Cli, Outcome};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = BufWriter::new(io::stdout().lock());
    let result = run(&cli, out);
    match &result {
        Ok(Outcome::Passed) => {}
        Ok(Outcome::Counterexample(msg)) => eprintln!("touchard: check failed: {msg}"),
        Err(e) => eprintln!("touchard: {e}"),
    }
    ExitCode::from(exit_code(&result))
}
