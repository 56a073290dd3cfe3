//! Error type shared by the whole crate.

use core::fmt;

/// Errors produced by field construction, vector arithmetic, subspace
/// operations, and code enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values belong to different field contexts.
    ContextMismatch,
    /// Vector or matrix dimensions do not agree.
    LengthMismatch { left: usize, right: usize },
    /// Multiplicative inverse of zero was requested.
    DivisionByZero,
    /// A parameter is outside the domain of the operation.
    Domain(String),
    /// An exhaustive operation would exceed the configured enumeration cap.
    CapExceeded { required: u128, cap: u128 },
    /// The generator vector of a code is not linearly independent over GF(q).
    InvalidGenerator(String),
    /// The requested computation has no supported evaluation path.
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ContextMismatch => write!(f, "values belong to different field contexts"),
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::CapExceeded { required, cap } => {
                write!(f, "enumeration cap exceeded: need {required}, cap is {cap}")
            }
            Error::InvalidGenerator(msg) => write!(f, "invalid generator: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
