use std::fmt;

use qudit_surface::Error;

/// A command failure, carrying the process exit code it maps to.
#[derive(Debug)]
pub enum Failure {
    /// The input file could not be read.
    Io(String),
    /// The document is not well-formed JSON or check-matrix text, or has
    /// the wrong shape.
    Parse(String),
    /// The document parsed but describes an invalid object. Each entry is
    /// printed on its own line.
    Invalid(Vec<String>),
    Budget(String),
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure::Invalid(vec![message.into()])
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Io(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Parse(_) => 3,
            Failure::Budget(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Io(m) => write!(f, "cannot read input: {m}"),
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Invalid(lines) => write!(f, "{}", lines.join("\n")),
            Failure::Budget(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => Failure::Parse(m),
            Error::InvalidComplex(violations) => {
                Failure::Invalid(violations.iter().map(|v| v.to_string()).collect())
            }
            Error::BudgetExceeded(_) | Error::CapExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::invalid(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;
