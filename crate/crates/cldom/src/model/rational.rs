//! Exact numeric types.
//!
//! Every tally, margin, and score in this crate is exact: voter counts are
//! arbitrary-precision naturals and scores are arbitrary-precision rationals.
//! No floating point enters any election computation (Monte Carlo reports
//! convert exact counts to `f64` only at the very end, for display).

use num::bigint::Sign;
use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number: always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Exact nonnegative voter count.
pub type Count = BigUint;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn count(n: u64) -> Count {
    Count::from(n)
}

pub fn count_to_rational(c: &Count) -> Rational {
    Rational::from_integer(BigInt::from_biguint(Sign::Plus, c.clone()))
}

/// Parses an exact rational from `p/q`, integer, or decimal notation.
///
/// Decimals are exact: `0.25` parses as `1/4`, not a float.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((num, den)) = text.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {text:?}")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {text:?}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, fract)) = text.split_once('.') {
        let negative = int.trim_start().starts_with('-');
        let i: BigInt = if int == "-" || int.is_empty() {
            BigInt::zero()
        } else {
            int.parse()
                .map_err(|_| Error::Parse(format!("bad decimal in {text:?}")))?
        };
        if fract.is_empty() || !fract.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad decimal in {text:?}")));
        }
        let f: BigInt = fract
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal in {text:?}")))?;
        let scale = BigInt::from(10u8).pow(fract.len() as u32);
        let magnitude = Rational::from_integer(i.abs()) + Rational::new(f, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let n: BigInt = text
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {text:?}")))?;
    Ok(Rational::from_integer(n))
}

/// Renders a rational as `p/q`, or plain `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("3/4").unwrap(), frac(3, 4));
        assert_eq!(parse_rational(" -2/8 ").unwrap(), frac(-1, 4));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("0.25").unwrap(), frac(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("0.1").unwrap(), frac(1, 10));
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "1/0", "a", "1.2.3", "1.", "2/", "--3"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn always_lowest_terms_with_positive_denominator() {
        let r = Rational::new(BigInt::from(6), BigInt::from(-8));
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(4));
        let sum = frac(1, 6) + frac(1, 3);
        assert_eq!(sum, frac(1, 2));
        assert_eq!(sum.denom(), &BigInt::from(2));
    }

    #[test]
    fn formats_back_to_input_notation() {
        assert_eq!(format_rational(&frac(1, 2)), "1/2");
        assert_eq!(format_rational(&rat(5)), "5");
        assert_eq!(format_rational(&frac(-3, 4)), "-3/4");
    }
}
