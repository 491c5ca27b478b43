//! Exact rationals: parsing from `num/den` text and rendering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("`{0}` is not an exact rational (expected an integer or `num/den`)")]
    Malformed(String),
    #[error("`{0}` has a zero denominator")]
    ZeroDenominator(String),
}

/// Parses `n` or `n/d`. Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational, RationalError> {
    let text = text.trim();
    let malformed = || RationalError::Malformed(text.to_string());
    let parse_int = |s: &str| -> Result<BigInt, RationalError> {
        let s = s.trim();
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(malformed());
        }
        s.parse::<BigInt>().map_err(|_| malformed())
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(RationalError::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// `num/den` in lowest terms, always with an explicit denominator.
pub fn exact(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Integer when the denominator is one, `num/den` otherwise.
pub fn compact(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        exact(r)
    }
}

/// Decimal rendering rounded (half away from zero) to `digits` significant
/// digits, in plain positional notation with trailing zeros removed.
pub fn decimal(r: &Rational, digits: u32) -> String {
    if r.is_zero() {
        return "0".into();
    }
    assert!(digits > 0);
    let negative = r.is_negative();
    let x = r.abs();
    let ten = BigInt::from(10);
    let magnitude = |n: &BigInt| n.to_string().len() as i64;
    let mut exponent = magnitude(x.numer()) - magnitude(x.denom());
    if x < pow10(exponent) {
        exponent -= 1;
    }
    let shift = digits as i64 - 1 - exponent;
    let scaled = &x * pow10(shift);
    let (quotient, remainder) = scaled.numer().div_rem(scaled.denom());
    let mut q = quotient;
    if remainder * 2 >= *scaled.denom() {
        q += 1;
    }
    if q == num_traits::pow(ten.clone(), digits as usize) {
        q /= &ten;
        exponent += 1;
    }
    let body = q.to_string();
    let point = exponent + 1;
    let mut out = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), body)
    } else if point as usize >= body.len() {
        format!("{}{}", body, "0".repeat(point as usize - body.len()))
    } else {
        format!("{}.{}", &body[..point as usize], &body[point as usize..])
    };
    if out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    if negative {
        out.insert(0, '-');
    }
    out
}

fn pow10(exponent: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10), exponent.unsigned_abs() as usize);
    if exponent >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
