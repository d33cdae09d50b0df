//! Exact rational scalars.
//!
//! `Rat` is `num_rational::BigRational`, which maintains the canonical form
//! this crate relies on everywhere: a positive denominator and
//! `gcd(|num|, den) = 1` after every operation. The property tests below pin
//! that contract so a backend change would be caught immediately.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};

use super::ExactError;

/// Exact rational number in canonical form (`den > 0`, fully reduced).
pub type Rat = BigRational;

/// Rational from an integer numerator/denominator pair.
///
/// Panics on a zero denominator; use [`rat_div`] for checked division.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_i64(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

/// Checked division: `a / b`, erroring on `b = 0`.
pub fn rat_div(a: &Rat, b: &Rat) -> Result<Rat, ExactError> {
    if b.is_zero() {
        return Err(ExactError::DivisionByZero);
    }
    Ok(a / b)
}

/// Exact conversion of a finite `f64` into a (dyadic) rational.
///
/// Returns `None` for NaN or infinities. The result is the exact value of
/// the float, so numeric-mode instances feed the exact pipeline without any
/// rounding step.
pub fn rat_from_f64(v: f64) -> Option<Rat> {
    BigRational::from_f64(v)
}

/// Round-to-nearest conversion to `f64`, usable for reporting only.
pub fn rat_to_f64(v: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or_else(|| {
        // Fall back to a manual mantissa/exponent split for values whose
        // numerator and denominator individually overflow f64.
        let bits = v.numer().bits().max(v.denom().bits());
        let shift = bits.saturating_sub(60) as u32;
        let num = v.numer() >> shift;
        let den = v.denom() >> shift;
        let nf = num.to_f64().unwrap_or(f64::MAX * num.signum().to_f64().unwrap_or(1.0));
        let df = den.to_f64().unwrap_or(f64::MAX);
        nf / df
    })
}

/// Sign of a rational as -1, 0, or 1.
pub fn rat_sign(v: &Rat) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}
