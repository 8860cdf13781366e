//! Failure categories of the command-line tool and their exit codes.

use std::fmt;
use std::path::Path;

use crystal::graph::GraphError;
use crystal::symfunc::SymError;
use crystal::tableau::TableauError;

/// A failed command. Axiom violations are not errors; they are reported
/// through the verdict and exit code 1.
#[derive(Debug)]
pub enum CliError {
    /// Invalid arguments or unparseable input (exit 2).
    Invalid(String),
    /// Reading or writing a file failed (exit 3).
    Io(String),
    /// A graph closure exceeded the configured vertex budget (exit 4).
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Io(_) => 3,
            CliError::Budget(_) => 4,
        }
    }

    pub fn io(path: &Path, err: std::io::Error) -> Self {
        CliError::Io(format!("{}: {err}", path.display()))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) | CliError::Io(m) | CliError::Budget(m) => f.write_str(m),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::ClosureBudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<TableauError> for CliError {
    fn from(e: TableauError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<SymError> for CliError {
    fn from(e: SymError) -> Self {
        match e {
            SymError::Graph(g) => g.into(),
            other => CliError::Invalid(other.to_string()),
        }
    }
}
