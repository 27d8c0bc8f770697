use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use satsemi_cli::{color_from_env, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let res = run(&cli, &mut out, color_from_env());
    let flushed = out.flush();
    match res.map_err(|e| e.to_string()).and(flushed.map_err(|e| e.to_string())) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("satsemi: {msg}");
            ExitCode::from(1)
        }
    }
}
