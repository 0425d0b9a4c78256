//! Exact arithmetic for the Pell equations x² − d·y² = N with N ∈ {1, −1, 4, −4}.
//!
//! The crate expands √d as a periodic continued fraction ([`cf`]), solves the
//! four equations for arbitrary nonsquare d ≥ 2 ([`pell`]), evaluates
//! generalized Fibonacci and Lucas sequences with two independent computation
//! paths ([`lucas`]), provides closed forms for the family d = a² + 2a
//! ([`family`]), and ships a brute-force oracle ([`oracle`]) that everything
//! else is tested against. Every value is an arbitrary-precision integer;
//! there is no floating point anywhere.
//!
//! All operations are pure functions of their inputs and all values are
//! immutable once built, so everything here is safe to use from multiple
//! threads.

mod arith;
pub mod cf;
pub mod error;
pub mod family;
pub mod lucas;
pub mod oracle;
pub mod pell;

pub use cf::{CfExpansion, Convergent, Rational};
pub use error::{Error, Result};
pub use family::FamilyParam;
pub use lucas::SequenceParams;
pub use oracle::SearchBound;
pub use pell::{PellSolution, Reason, Sign, Verdict};
