//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator (both
//! guaranteed by `num-rational`). Floating point appears nowhere; text
//! input containing a float literal is rejected outright.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

pub type Rational = BigRational;

/// Shorthand for `n/d`. Panics on `d == 0`; intended for literals in code
/// and tests.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("floating-point literal {0:?} is not allowed; write an exact fraction like 1/2")]
    FloatLiteral(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("malformed rational {0:?}")]
    Malformed(String),
}

/// Parses `p`, `-p` or `p/q` with arbitrary-precision integers.
///
/// Anything that looks like a float (`0.5`, `1e-3`) is refused with a
/// dedicated error so that callers can say why.
pub fn parse_rational(token: &str) -> Result<Rational, RationalParseError> {
    let malformed = || RationalParseError::Malformed(token.to_string());
    if token.is_empty() {
        return Err(malformed());
    }
    if token.contains(['.', 'e', 'E']) {
        return Err(RationalParseError::FloatLiteral(token.to_string()));
    }
    let parse_int = |s: &str, allow_sign: bool| -> Result<BigInt, RationalParseError> {
        let ok = !s.is_empty()
            && s.chars()
                .enumerate()
                .all(|(i, c)| c.is_ascii_digit() || (allow_sign && i == 0 && (c == '-' || c == '+')));
        if !ok || s == "-" || s == "+" {
            return Err(malformed());
        }
        s.parse::<BigInt>().map_err(|_| malformed())
    };
    match token.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(token, true)?)),
        Some((num, den)) => {
            let num = parse_int(num, true)?;
            // denominators are written as plain positive integers
            let den = parse_int(den, false)?;
            if den.is_zero() {
                return Err(RationalParseError::ZeroDenominator(token.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Canonical rendering: lowest terms, `p/q` for non-integers, plain integer
/// otherwise. Inverse of [`parse_rational`] on its output.
pub fn render_rational(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parse_integer_and_fraction() {
        assert_eq!(parse_rational("3").unwrap(), rat_int(3));
        assert_eq!(parse_rational("-3").unwrap(), rat_int(-3));
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-2/4").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("+7/3").unwrap(), rat(7, 3));
    }

    #[test]
    fn normalised_to_lowest_terms_with_positive_denominator() {
        // signs are only allowed on the numerator
        assert!(parse_rational("6/-4").is_err());
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert!(r.denom() > &num_bigint::BigInt::zero());
        assert_eq!(render_rational(&r), "-3/2");
        assert_eq!(render_rational(&rat(4, 2)), "2");
    }

    #[test]
    fn floats_rejected() {
        for bad in ["0.5", ".5", "1.", "1e3", "2E-4"] {
            match parse_rational(bad) {
                Err(RationalParseError::FloatLiteral(_)) => {}
                other => panic!("{bad:?} should be refused as a float, got {other:?}"),
            }
        }
    }

    #[test]
    fn junk_rejected() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("1 /2").is_err());
        assert_eq!(
            parse_rational("1/0"),
            Err(RationalParseError::ZeroDenominator("1/0".into()))
        );
    }

    #[test]
    fn render_parse_round_trip() {
        for r in [rat(0, 1), rat(1, 1), rat(-5, 3), rat(22, 7), rat(100, 25)] {
            assert_eq!(parse_rational(&render_rational(&r)).unwrap(), r);
        }
        assert!(rat(1, 1).is_one());
    }
}
