//! Exact arithmetic: arbitrary-precision rationals and univariate
//! polynomial algebra over them.
//!
//! Everything here is pure and immutable; values can be shared freely
//! across threads.

mod rat;
mod roots;
mod upoly;
mod xpoly;

pub use rat::{rat, rat_div, rat_from_f64, rat_i64, rat_sign, rat_to_f64, Rat};
pub use roots::{rational_roots, rational_roots_budgeted};
pub use upoly::UPoly;
pub use xpoly::{sylvester_resultant, XPoly};

use thiserror::Error;

/// Errors from exact-arithmetic operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdBothZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("rescale factor must be nonzero")]
    ZeroScale,
}
