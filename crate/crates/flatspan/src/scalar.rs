//! Exact rational scalars.
//!
//! All geometry in this crate is carried out over arbitrary-precision rationals.
//! `Scalar` is kept in lowest terms with a positive denominator by construction,
//! so equality, ordering and hashing are structural.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;
use thiserror::Error;

pub type Scalar = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part {0:?}")]
    InvalidInteger(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the reduced fraction n/d. Panics on d = 0.
pub fn ratio(n: i64, d: i64) -> Scalar {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "a" or "a/b" into a reduced scalar. Rejects zero denominators.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ScalarParseError::Empty);
    }
    let (num_part, den_part) = match trimmed.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (trimmed, None),
    };
    let numer = BigInt::from_str(num_part.trim())
        .map_err(|_| ScalarParseError::InvalidInteger(num_part.trim().to_string()))?;
    let denom = match den_part {
        Some(d) => BigInt::from_str(d.trim())
            .map_err(|_| ScalarParseError::InvalidInteger(d.trim().to_string()))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(trimmed.to_string()));
    }
    Ok(BigRational::new(numer, denom))
}

/// Formats a scalar as "a" or "a/b" in lowest terms.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact square root: `Some(b)` with b*b = x and b >= 0, when one exists.
pub fn rational_sqrt(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let num_root = x.numer().sqrt();
    let den_root = x.denom().sqrt();
    if &(&num_root * &num_root) == x.numer() && &(&den_root * &den_root) == x.denom() {
        Some(BigRational::new(num_root, den_root))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "7", "-3", "2/3", "-5/9", "10/4"] {
            let x = parse_scalar(text).unwrap();
            let rendered = format_scalar(&x);
            assert_eq!(parse_scalar(&rendered).unwrap(), x);
        }
        assert_eq!(format_scalar(&parse_scalar("10/4").unwrap()), "5/2");
        assert_eq!(format_scalar(&parse_scalar("-4/2").unwrap()), "-2");
        assert_eq!(format_scalar(&parse_scalar(" 2 / 6 ").unwrap()), "1/3");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            parse_scalar("2/0"),
            Err(ScalarParseError::ZeroDenominator("2/0".to_string()))
        );
    }

    #[test]
    fn garbage_rejected() {
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("1/y").is_err());
        assert!(parse_scalar("1.5").is_err());
    }

    #[test]
    fn negative_denominator_normalizes() {
        let x = parse_scalar("3/-6").unwrap();
        assert_eq!(x, ratio(-1, 2));
        assert_eq!(format_scalar(&x), "-1/2");
    }

    #[test]
    fn sqrt_exact_only() {
        assert_eq!(rational_sqrt(&ratio(9, 16)), Some(ratio(3, 4)));
        assert_eq!(rational_sqrt(&int(49)), Some(int(7)));
        assert_eq!(rational_sqrt(&ratio(1, 2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
    }
}
