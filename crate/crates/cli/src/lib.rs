//! Instance files and command implementations behind the `bihom` binary.

pub mod commands;
pub mod error;
pub mod format;
pub mod render;
pub mod samples;

pub use commands::{run, Cli, Outcome};
pub use error::{CliError, CliResult};

/// Worker count from `BIHOM_THREADS`, else the machine's parallelism.
pub fn thread_count(var: Option<&str>) -> CliResult<usize> {
    match var {
        Some(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Usage(format!("BIHOM_THREADS must be a positive integer, got `{v}`"))),
        },
        None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}
