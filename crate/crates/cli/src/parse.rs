//! Exact parsing of numeric command-line arguments.

use linkage_betti_core::BigRational;
use num_bigint::BigInt;
use num_traits::{Pow, Zero};

use crate::CliError;

/// Parses `a/b`, an integer, or a decimal such as `-1.25` or `3e-2`.
///
/// Decimals are read exactly as fractions over powers of ten.
pub fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let s = text.trim();
    let bad = || CliError::Parse(format!("not a rational number: {text:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = integer(num.trim()).ok_or_else(bad)?;
        let den: BigInt = integer(den.trim()).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(CliError::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(BigRational::new(num, den));
    }
    decimal(s).ok_or_else(bad)
}

/// Comma-separated list of rationals; empty entries are rejected.
pub fn parse_rational_list(text: &str) -> Result<Vec<BigRational>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_rational).collect()
}

fn integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.strip_prefix('+').unwrap_or(s).parse().ok()
}

fn decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(at) => (&s[..at], s[at + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .bytes()
        .chain(frac.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let digits: BigInt = format!("0{whole}{frac}").parse().ok()?;
    let shift = exponent.checked_sub(i32::try_from(frac.len()).ok()?)?;
    let ten = BigInt::from(10u8);
    let value = if shift >= 0 {
        BigRational::from_integer(digits * ten.pow(shift.unsigned_abs()))
    } else {
        BigRational::new(digits, ten.pow(shift.unsigned_abs()))
    };
    Some(if negative { -value } else { value })
}
