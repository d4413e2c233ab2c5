//! Exact rational numbers.
//!
//! Weights and matrix entries are arbitrary precision rationals kept in
//! lowest terms with a positive denominator; this is exactly what
//! [`num_rational::BigRational`] maintains, so it is used directly.

use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{CheckedDiv, One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
}

/// The integer `v` as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den`, reduced. Panics when `den` is zero.
pub fn frac(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational, RationalError> {
    a.checked_div(b).ok_or(RationalError::DivisionByZero)
}

/// Parses `"n"` or `"p/q"` (optionally signed). The result is normalised, so
/// `"4/2"` parses to `2`; callers that require canonical text compare the
/// rendered value against the input.
pub fn parse(text: &str) -> Result<Rational, RationalError> {
    let text = text.trim();
    let bad = || RationalError::Invalid(String::from(text));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = match den {
        Some(d) if d.starts_with(['+', '-']) => return Err(bad()),
        Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(RationalError::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// True when `x` is strictly positive.
pub fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}
