//! The universal scalar: unbounded rationals, plus the handful of decimal
//! helpers (power-of-ten scaling, half-even rounding, fixed-point printing)
//! that the ball-arithmetic code leans on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact unbounded fraction. Always stored reduced with a positive
/// denominator; zero is 0/1.
pub type Rational = BigRational;

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "rational with zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer rational `n/1`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// 10^k as a big integer.
pub fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// Parse `"p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = |msg: &str| Error::Format(format!("bad rational {text:?}: {msg}"));
    let mut parts = text.trim().splitn(2, '/');
    let numer_text = parts.next().unwrap_or("");
    let numer: BigInt = numer_text
        .trim()
        .parse()
        .map_err(|_| err("numerator is not an integer"))?;
    match parts.next() {
        None => Ok(Rational::from_integer(numer)),
        Some(denom_text) => {
            let denom: BigInt = denom_text
                .trim()
                .parse()
                .map_err(|_| err("denominator is not an integer"))?;
            if denom.is_zero() {
                return Err(err("denominator is zero"));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Render as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nearest integer to `r`, ties to even.
pub fn round_half_even(r: &Rational) -> BigInt {
    let (quot, rem) = r.numer().div_mod_floor(r.denom());
    // 0 <= rem < denom, so r = quot + rem/denom with quot = floor(r).
    let twice = &rem * 2;
    match twice.cmp(r.denom()) {
        std::cmp::Ordering::Less => quot,
        std::cmp::Ordering::Greater => quot + 1,
        std::cmp::Ordering::Equal => {
            if quot.is_even() {
                quot
            } else {
                quot + 1
            }
        }
    }
}

/// Round `r` to `places` decimal places, ties to even. The result differs
/// from `r` by at most 10^-places / 2.
pub fn round_to_decimals(r: &Rational, places: u32) -> Rational {
    let scale = pow10(places);
    let scaled = r * Rational::from_integer(scale.clone());
    Rational::new(round_half_even(&scaled), scale)
}

/// Fixed-point decimal rendering with exactly `places` fractional digits,
/// rounded half-even.
pub fn decimal_string(r: &Rational, places: u32) -> String {
    let scale = pow10(places);
    let scaled = round_half_even(&(r * Rational::from_integer(scale.clone())));
    let sign = if scaled.is_negative() { "-" } else { "" };
    let mag = scaled.abs();
    let (whole, frac) = mag.div_rem(&scale);
    if places == 0 {
        return format!("{sign}{whole}");
    }
    format!("{sign}{whole}.{frac:0>width$}", width = places as usize)
}

/// Short scientific upper bound for a nonnegative radius, e.g. "3.0e-52".
/// Rounds the mantissa up so the printed value never understates `r`.
pub fn radius_string(r: &Rational) -> String {
    assert!(!r.is_negative(), "radius must be nonnegative");
    if r.is_zero() {
        return "0".to_string();
    }
    // Find e with 10^e <= r < 10^(e+1).
    let mut exp: i64 = 0;
    let one = Rational::one();
    let ten = int(10);
    let mut x = r.clone();
    while x >= ten {
        x /= ten.clone();
        exp += 1;
    }
    while x < one {
        x *= ten.clone();
        exp -= 1;
    }
    // One digit before the point, one after, rounded up.
    let mantissa_tenths = (x * ten.clone()).ceil().to_integer();
    let (mantissa_tenths, exp) = if mantissa_tenths == BigInt::from(100) {
        (BigInt::from(10), exp + 1)
    } else {
        (mantissa_tenths, exp)
    };
    let (whole, tenth) = mantissa_tenths.div_rem(&BigInt::from(10));
    format!("{whole}.{tenth}e{exp}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "1", "-7", "1/3", "-22/315"] {
            let r = parse_rational(text).unwrap();
            assert_eq!(format_rational(&r), text);
        }
        assert_eq!(parse_rational("4/8").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("3/-6").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn half_even_rounding() {
        assert_eq!(round_half_even(&rat(5, 2)), BigInt::from(2));
        assert_eq!(round_half_even(&rat(7, 2)), BigInt::from(4));
        assert_eq!(round_half_even(&rat(-5, 2)), BigInt::from(-2));
        assert_eq!(round_half_even(&rat(-7, 2)), BigInt::from(-4));
        assert_eq!(round_half_even(&rat(1, 3)), BigInt::from(0));
        assert_eq!(round_half_even(&rat(2, 3)), BigInt::from(1));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 3), 6), "0.333333");
        assert_eq!(decimal_string(&rat(-1, 8), 3), "-0.125");
        assert_eq!(decimal_string(&rat(22, 7), 4), "3.1429");
        assert_eq!(decimal_string(&int(5), 0), "5");
        // ties to even at the last printed digit
        assert_eq!(decimal_string(&rat(25, 1000), 2), "0.02");
        assert_eq!(decimal_string(&rat(35, 1000), 2), "0.04");
    }

    #[test]
    fn radius_rendering_never_understates() {
        assert_eq!(radius_string(&Rational::zero()), "0");
        assert_eq!(radius_string(&rat(1, 1000)), "1.0e-3");
        assert_eq!(radius_string(&rat(31, 100000)), "3.1e-4");
        // mantissa rounds up, including across a power of ten
        assert_eq!(radius_string(&rat(314159, 100000000)), "3.2e-3");
        assert_eq!(radius_string(&rat(999, 1000)), "1.0e0");
    }
}
