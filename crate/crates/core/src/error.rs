use alloc::string::String;
use core::fmt;

/// Errors raised by ring construction, parsing and the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    DuplicateVariable(String),
    EmptyVariableList,
    InvalidVariableName(String),
    Syntax { offset: usize, message: &'static str },
    UnknownVariable { offset: usize, name: String },
    RingMismatch,
    ZeroPolynomial,
    UnitPolynomial,
    /// A configured resource guard was hit. The string names the guard.
    ResourceLimit(String),
    /// Cooperative cancellation was requested through [`crate::Limits::interrupt`].
    Interrupted,
    OutOfInterval,
    PartsMismatch,
    InvalidArgument(&'static str),
    /// An internal consistency check failed; indicates a defect.
    InvariantViolation(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

impl Error {
    pub(crate) fn limit(what: impl Into<String>) -> Self {
        Error::ResourceLimit(what.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::DuplicateVariable(v) => write!(f, "duplicate variable `{v}`"),
            Error::EmptyVariableList => f.write_str("variable list is empty"),
            Error::InvalidVariableName(v) => write!(f, "invalid variable name `{v}`"),
            Error::Syntax { offset, message } => {
                write!(f, "syntax error at offset {offset}: {message}")
            }
            Error::UnknownVariable { offset, name } => {
                write!(f, "unknown variable `{name}` at offset {offset}")
            }
            Error::RingMismatch => f.write_str("operands belong to different rings"),
            Error::ZeroPolynomial => f.write_str("polynomial is zero"),
            Error::UnitPolynomial => f.write_str("polynomial is a unit"),
            Error::ResourceLimit(what) => write!(f, "resource limit exceeded: {what}"),
            Error::Interrupted => f.write_str("computation interrupted"),
            Error::OutOfInterval => f.write_str("value lies outside the admissible interval"),
            Error::PartsMismatch => f.write_str("parts do not sum to the total"),
            Error::InvalidArgument(what) => write!(f, "invalid argument: {what}"),
            Error::InvariantViolation(what) => write!(f, "internal invariant violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}
