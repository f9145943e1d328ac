//! Exact scalar and matrix arithmetic.
//!
//! The coefficient field for the whole workbench is the cyclotomic field of
//! conductor 24 in its power basis, reduced modulo `x^8 - x^4 + 1`. It is the
//! smallest cyclotomic field containing every scalar needed by the matrix
//! groups treated here: `i`, `sqrt2`, `sqrt3` and the primitive cube root of
//! unity. Rationals are arbitrary precision throughout.

mod cyclotomic;
mod matrix;
mod modular;
mod rational;

pub use cyclotomic::{Cyclotomic, PHI24_DEGREE};
pub use matrix::ExactMatrix;
pub use modular::{is_prime, primitive_root, ModMatrix, ModularScalar};
pub use rational::{parse_rational, rat, rat_int, Rational};

use thiserror::Error;

/// Errors raised by exact arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero in the cyclotomic field")]
    DivisionByZero,
    #[error("malformed scalar literal `{0}`")]
    Parse(String),
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
    #[error("modulus {0} is not usable here: {1}")]
    BadModulus(u64, String),
}
