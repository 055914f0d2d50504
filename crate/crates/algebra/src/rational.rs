//! Rational numbers and the `"p/q"` text form used across the toolkit.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::AlgebraError;

/// Exact rational, always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"7"`, `"-3/4"` or `" 10 / 6 "`.
pub fn parse_rational(text: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::Parse(format!("not a rational number: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(AlgebraError::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Renders as `"p/q"`, or `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // huge numerators: scale down before converting
        let n = q.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Closest dyadic rational with `bits` fractional bits.
pub fn from_f64_dyadic(x: f64, bits: u32) -> Rational {
    let scale = 2f64.powi(bits as i32);
    let n = (x * scale).round();
    Rational::new(
        BigInt::from(n as i128),
        BigInt::from(1u8) << bits as usize,
    )
}

pub fn floor(q: &Rational) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn frac(q: &Rational) -> Rational {
    q - Rational::from_integer(floor(q))
}

pub fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("10/6").unwrap(), rat(5, 3));
        assert_eq!(parse_rational(" -3 / 4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(format_rational(&rat(10, -4)), "-5/2");
        assert_eq!(format_rational(&int(3)), "3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn floor_and_frac() {
        assert_eq!(floor(&rat(-1, 3)), BigInt::from(-1));
        assert_eq!(frac(&rat(7, 6)), rat(1, 6));
        assert_eq!(frac(&int(2)), int(0));
    }
}
