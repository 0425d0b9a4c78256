use std::fmt;

use num_bigint::{BigInt, BigUint};

/// Errors shared by the expansion, solver and sequence modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `d` is a perfect square, so √d is rational and has no periodic expansion.
    PerfectSquare(BigUint),
    /// An argument lies outside an operation's domain.
    OutOfDomain(String),
    /// The requested equation has no positive integer solutions.
    NotSolvable { d: BigUint, n: i64 },
    /// The pair passed as a unit does not satisfy r² − d·s² = 1.
    BadUnit { r: BigInt, s: BigInt },
    /// Sequence parameters must be non-zero with k² + 4s > 0.
    InvalidParams { k: BigInt, s: BigInt },
    /// Right-hand sides other than 1, -1, 4, -4 are not supported.
    UnsupportedRhs(i64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PerfectSquare(d) => write!(f, "d = {d} is a perfect square"),
            Error::OutOfDomain(msg) => write!(f, "out of domain: {msg}"),
            Error::NotSolvable { d, n } => {
                write!(f, "x^2 - {d}y^2 = {n} has no positive integer solutions")
            }
            Error::BadUnit { r, s } => {
                write!(f, "({r}, {s}) is not a solution of x^2 - dy^2 = 1")
            }
            Error::InvalidParams { k, s } => {
                write!(f, "invalid sequence parameters (k, s) = ({k}, {s})")
            }
            Error::UnsupportedRhs(n) => {
                write!(f, "unsupported right-hand side N = {n} (expected 1, -1, 4 or -4)")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
