use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tk5::cli::{run, Cli};

fn main() -> ExitCode {
    let out = run(Cli::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.exit.map_or(0, |e| e.code()) as u8)
}
