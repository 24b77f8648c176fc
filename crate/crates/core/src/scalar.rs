//! Exact rational scalars.
//!
//! The ground field is the rationals. Values are arbitrary-precision
//! fractions kept in lowest terms with a positive denominator, so equality
//! of values is equality of representations and every computation in this
//! crate is exact. The textual form is `p/q`, or just `p` when `q = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

pub type Scalar = BigRational;

/// The integer `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// The fraction `n/d`. Panics if `d` is zero.
pub fn rat(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("empty scalar literal")]
    Empty,
    #[error("invalid integer part in scalar literal `{0}`")]
    BadInteger(String),
    #[error("zero denominator in scalar literal `{0}`")]
    ZeroDenominator(String),
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
}

/// Parses `p` or `p/q` into a scalar, normalizing on the way in.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let mut parts = trimmed.splitn(3, '/');
    let numer_text = parts.next().ok_or(ScalarParseError::Empty)?;
    let numer: BigInt = numer_text
        .parse()
        .map_err(|_| ScalarParseError::BadInteger(trimmed.to_string()))?;
    let denom: BigInt = match parts.next() {
        None => BigInt::from(1),
        Some(denom_text) => denom_text
            .parse()
            .map_err(|_| ScalarParseError::BadInteger(trimmed.to_string()))?,
    };
    if parts.next().is_some() {
        return Err(ScalarParseError::Malformed(trimmed.to_string()));
    }
    if denom.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(trimmed.to_string()));
    }
    Ok(BigRational::new(numer, denom))
}

/// Formats a scalar as `p/q`, or `p` when the denominator is 1.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "7", "-3", "1/2", "-5/8", "22/7"] {
            let x = parse_scalar(text).unwrap();
            assert_eq!(format_scalar(&x), text);
        }
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(parse_scalar("4/8").unwrap(), rat(1, 2));
        assert_eq!(parse_scalar("3/-9").unwrap(), rat(-1, 3));
        assert_eq!(parse_scalar("-0").unwrap(), int(0));
        assert_eq!(format_scalar(&parse_scalar("6/-4").unwrap()), "-3/2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!(parse_scalar(""), Err(ScalarParseError::Empty));
        assert!(matches!(parse_scalar("1/0"), Err(ScalarParseError::ZeroDenominator(_))));
        assert!(matches!(parse_scalar("a/b"), Err(ScalarParseError::BadInteger(_))));
        assert!(matches!(parse_scalar("1/2/3"), Err(ScalarParseError::Malformed(_))));
        assert!(matches!(parse_scalar("1.5"), Err(ScalarParseError::BadInteger(_))));
    }

    #[test]
    fn denominator_is_positive_after_arithmetic() {
        let x = rat(1, -2);
        assert!(x.denom() > &num_bigint::BigInt::from(0));
        let y = &x * &rat(-2, 1);
        assert!(y.is_one());
    }
}
