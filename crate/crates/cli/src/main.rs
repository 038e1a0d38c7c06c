use std::io::Write;
use std::process::ExitCode;

use bihom_cli::{run, thread_count, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = std::env::var("BIHOM_THREADS").ok();
    let result = thread_count(threads.as_deref()).and_then(|n| run(&cli, n));
    match result {
        Ok(out) => {
            print!("{}", out.text);
            let _ = std::io::stdout().flush();
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
