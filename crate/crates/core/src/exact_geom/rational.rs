//! Helpers around the arbitrary-precision rational scalar.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. Always kept in canonical form (denominator > 0, gcd 1).
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den`, panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `2^e` for any signed exponent.
pub fn pow2(e: i64) -> Rational {
    let mag = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(mag)
    } else {
        Rational::new_raw(BigInt::one(), mag)
    }
}

/// `2^-n`, the precision threshold used everywhere.
pub fn eps(n: u32) -> Rational {
    pow2(-(n as i64))
}

/// Smallest `n >= 0` with `2^-n < x`. `x` must be positive.
pub fn min_exponent_below(x: &Rational) -> u32 {
    assert!(x.is_positive(), "min_exponent_below needs a positive bound");
    // 2^-n < x  <=>  den < x.numer * 2^n
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    let guess = den.bits() as i64 - num.bits() as i64;
    let mut n = guess.max(0) as u32;
    while n > 0 && eps(n - 1) < *x {
        n -= 1;
    }
    while eps(n) >= *x {
        n += 1;
    }
    n
}

/// Largest integer `e` such that `2^e <= x`, for positive `x`.
pub fn floor_log2(x: &Rational) -> i64 {
    assert!(x.is_positive(), "floor_log2 needs a positive value");
    let mut e = x.numer().bits() as i64 - x.denom().bits() as i64;
    while pow2(e) > *x {
        e -= 1;
    }
    while pow2(e + 1) <= *x {
        e += 1;
    }
    e
}

/// Smallest `e >= 0` with `sq <= 4^e`, i.e. `2^e` bounds `sqrt(sq)` from above.
pub fn half_log2_ceil(sq: &Rational) -> u32 {
    let mut e = 0u32;
    while *sq > pow2(2 * e as i64) {
        e += 1;
    }
    e
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"p/q"` or `"p"` with optional sign on the numerator.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let parse_int = |s: &str| -> Result<BigInt, ParseRationalError> {
        let s = s.trim();
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseRationalError::BadInteger(s.to_string()));
        }
        s.parse::<BigInt>()
            .map_err(|_| ParseRationalError::BadInteger(s.to_string()))
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Lossy conversion for display only.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Display adapter printing a rational in `p/q` form.
pub struct Exact<'a>(pub &'a Rational);

impl fmt::Display for Exact<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(self.0))
    }
}
