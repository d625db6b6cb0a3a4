use std::path::PathBuf;

use thiserror::Error;
use tilepack::{GenError, ParseError, SolveError, Violation};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("placement is invalid: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("{0}")]
    Usage(String),
}

fn join(vs: &[Violation]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl CliError {
    /// 2 when a solver budget was exceeded, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solve(SolveError::CapExceeded { .. }) => 2,
            _ => 1,
        }
    }

    /// Short tag for the machine-readable error line.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::Solve(SolveError::CapExceeded { .. }) => "cap_exceeded",
            CliError::Solve(_) => "unsupported",
            CliError::Gen(_) => "generator",
            CliError::Invalid(_) => "invalid_placement",
            CliError::Usage(_) => "usage",
        }
    }

    /// `error[<kind>]: <message>`, the line printed on stderr.
    pub fn report_line(&self) -> String {
        format!("error[{}]: {}", self.kind(), self)
    }
}
