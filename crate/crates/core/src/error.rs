use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A dense polynomial does not factor into rational linear factors.
    NotSplit,
    /// A linear system has no solution.
    Inconsistent,
    /// A rational literal could not be parsed.
    Parse(String),
    /// An operation was called outside its domain.
    Precondition(String),
    /// A family description violates its structural constraints.
    InvalidFamily(String),
    /// A weight does not belong to the family's weight model.
    InvalidWeight(String),
    /// Two independent computations of the same quantity disagree.
    Mismatch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSplit => f.write_str("polynomial does not split over the rationals"),
            Error::Inconsistent => f.write_str("linear system is inconsistent"),
            Error::Parse(s) => write!(f, "cannot parse rational: {s}"),
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
            Error::InvalidFamily(s) => write!(f, "invalid family: {s}"),
            Error::InvalidWeight(s) => write!(f, "invalid weight: {s}"),
            Error::Mismatch(s) => write!(f, "independent routes disagree: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    /// True for errors that signal an internal mathematical inconsistency
    /// rather than bad input.
    pub fn is_inconsistency(&self) -> bool {
        matches!(self, Error::Mismatch(_))
    }
}
