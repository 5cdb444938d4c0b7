use std::fmt;
use std::io;

use charp_core::{Error, HslFailure};

/// Anything that ends a command, mapped to a process exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Hsl(HslFailure),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let core = match self {
            CliError::Usage(_) => return 1,
            CliError::Io(_) => return 1,
            CliError::Core(e) => e,
            CliError::Hsl(h) => &h.error,
        };
        match core {
            Error::ResourceLimit(_) | Error::Interrupted => 2,
            Error::InvariantViolation(_) => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Hsl(h) => write!(f, "{h}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<HslFailure> for CliError {
    fn from(e: HslFailure) -> Self {
        CliError::Hsl(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}
