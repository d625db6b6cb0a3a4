//! The `tilepack` command: `solve`, `verify`, `gen` and `bench`.
//!
//! Exit status is 0 on success, 2 when a solver budget is exceeded and 1
//! for every other failure. Failures print one `error[<kind>]: <message>`
//! line on stderr.

pub mod args;
pub mod bench;
pub mod commands;
pub mod error;
pub mod sweep;

use std::io::Write;

pub use args::Cli;
pub use error::CliError;

/// Runs one parsed command line, writing normal output to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        args::Command::Solve(a) => commands::solve(a, out),
        args::Command::Verify(a) => commands::verify(a, out),
        args::Command::Gen(a) => commands::gen(a, out),
        args::Command::Bench(a) => commands::bench(a, out),
    }
}
