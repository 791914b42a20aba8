//! Exact rational scalars and their canonical text form.
//!
//! Every coordinate, ratio and product in the crate is a [`Rational`]. The
//! text form is `"p/q"` with `q > 0` and `gcd(|p|, q) = 1`, or just `"p"` when
//! `q = 1`. Parsing is strict: only the canonical spelling of a value is
//! accepted, so a parsed file always re-serializes to the same bytes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("`{0}` is not a rational of the form p or p/q")]
    Syntax(String),
    #[error("`{0}` has a zero denominator")]
    ZeroDenominator(String),
    #[error("`{input}` is not in canonical form (expected `{canonical}`)")]
    NotCanonical { input: String, canonical: String },
}

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(-1)^n`
pub fn sign_power(n: usize) -> Rational {
    if n % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_integer(part: &str, input: &str) -> Result<BigInt, ParseRationalError> {
    let digits = part.strip_prefix('-').unwrap_or(part);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseRationalError::Syntax(input.to_owned()));
    }
    part.parse()
        .map_err(|_| ParseRationalError::Syntax(input.to_owned()))
}

pub fn parse_rational(input: &str) -> Result<Rational, ParseRationalError> {
    let (numer, denom) = match input.split_once('/') {
        Some((n, d)) => (parse_integer(n, input)?, parse_integer(d, input)?),
        None => (parse_integer(input, input)?, BigInt::one()),
    };
    if denom.is_zero() {
        return Err(ParseRationalError::ZeroDenominator(input.to_owned()));
    }
    let value = Rational::new(numer, denom);
    let canonical = format_rational(&value);
    if canonical != input {
        return Err(ParseRationalError::NotCanonical {
            input: input.to_owned(),
            canonical,
        });
    }
    Ok(value)
}

/// Lossy conversion used only for drawing and the floating-point oracle.
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format_rational(&int(-7)), "-7");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat(3, -6)), "-1/2");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn parses_canonical_forms() {
        assert_eq!(parse_rational("4/3").unwrap(), rat(4, 3));
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("0").unwrap(), int(0));
        assert_eq!(parse_rational("12").unwrap(), int(12));
    }

    #[test]
    fn rejects_malformed_and_non_canonical() {
        assert!(matches!(parse_rational("1/0"), Err(ParseRationalError::ZeroDenominator(_))));
        for bad in ["", "/", "1/", "a", "1.5", "1/2/3", "+1", "- 1"] {
            assert!(matches!(parse_rational(bad), Err(ParseRationalError::Syntax(_))), "{bad}");
        }
        for bad in ["2/4", "3/1", "-0", "007", "1/02", "1/-2"] {
            assert!(
                matches!(parse_rational(bad), Err(ParseRationalError::NotCanonical { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn sign_power_alternates() {
        assert_eq!(sign_power(3), int(-1));
        assert_eq!(sign_power(4), int(1));
    }

    proptest! {
        #[test]
        fn text_form_round_trips(n in any::<i64>(), d in 1i64..=i64::MAX) {
            let q = rat(n, d);
            prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
    }
}
