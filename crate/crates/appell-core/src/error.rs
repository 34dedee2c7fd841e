//! Crate-wide error type.

use std::fmt;

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands have different matrix orders.
    OrderMismatch { left: usize, right: usize },
    /// A geometric diagonal `diag[l^0..l^m]` was requested with `l = 0`.
    ZeroScale,
    /// Triangular inversion hit a zero diagonal entry; `index` is the first.
    SingularMatrix { index: usize },
    /// The family's transfer matrix is singular (`c0 = 0`), so the inverse
    /// coefficient sequence does not exist.
    NotInvertible { family: String },
    /// Classical Legendre/Chebyshev reconstruction needs `x^2 < 1`.
    OutOfDomain { x: Rat },
    /// A custom family was given a coefficient vector with `c0 = 0` or no
    /// entries at all.
    InvalidCustomCoeffs,
    /// No family with this serialization name exists.
    UnknownFamily { name: String },
    /// A parameter was missing, superfluous, or malformed.
    BadParameter { message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderMismatch { left, right } => {
                write!(f, "matrix order mismatch: {left} vs {right}")
            }
            Error::ZeroScale => write!(f, "geometric diagonal requires a nonzero scale"),
            Error::SingularMatrix { index } => {
                write!(
                    f,
                    "singular triangular matrix: zero diagonal entry at index {index}"
                )
            }
            Error::NotInvertible { family } => {
                write!(f, "transfer matrix singular for family {family} (c0 = 0)")
            }
            Error::OutOfDomain { x } => {
                write!(f, "argument {x} outside the open interval (-1, 1)")
            }
            Error::InvalidCustomCoeffs => {
                write!(
                    f,
                    "custom family requires a nonempty coefficient vector with c0 != 0"
                )
            }
            Error::UnknownFamily { name } => write!(f, "unknown family {name:?}"),
            Error::BadParameter { message } => write!(f, "{message}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
