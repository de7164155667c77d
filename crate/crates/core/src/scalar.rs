//! Exact rational scalars and their text literals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; every weight and coefficient in the crate uses it.
pub type Scalar = BigRational;

/// Which literal forms [`parse_scalar`] accepts.
/// The default accepts integers and fractions only.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LiteralSyntax {
    /// Accept decimal strings such as `0.25`, converted exactly to `1/4`.
    pub allow_decimal: bool,
}

impl LiteralSyntax {
    pub const DECIMAL: LiteralSyntax = LiteralSyntax { allow_decimal: true };
}

/// Parses an integer (`-3`), a fraction (`p/q`) or, when allowed, a decimal
/// string (`-1.25`). Exponent notation and non-finite values are rejected.
pub fn parse_scalar(text: &str, syntax: LiteralSyntax) -> Result<Scalar> {
    let bad = || Error::Literal(text.to_string());
    let t = text.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = t.split_once('/') {
        let num = parse_int(num).ok_or_else(bad)?;
        if den.starts_with(['+', '-']) {
            return Err(bad());
        }
        let den = parse_int(den).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        if !syntax.allow_decimal {
            return Err(bad());
        }
        let (negative, digits) = match int_part.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(digits) || !all_digits(frac_part) || (digits.is_empty() && frac_part.is_empty()) {
            return Err(bad());
        }
        let mantissa: BigInt = format!("{digits}{frac_part}").parse().unwrap_or_else(|_| BigInt::zero());
        let scale = num_traits::pow(BigInt::from(10u32), frac_part.len());
        let value = BigRational::new(mantissa, scale);
        return Ok(if negative { -value } else { value });
    }
    parse_int(t).map(BigRational::from_integer).ok_or_else(bad)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Normalized literal: `p` for integers, `p/q` in lowest terms otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    value.to_string()
}

pub(crate) fn is_zero_or_one(value: &Scalar) -> bool {
    value.is_zero() || value.is_one()
}

pub fn from_i64(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn literal_forms() {
        let s = LiteralSyntax::DECIMAL;
        assert_eq!(parse_scalar("7", s).unwrap(), q(7, 1));
        assert_eq!(parse_scalar("-3", s).unwrap(), q(-3, 1));
        assert_eq!(parse_scalar("1/3", s).unwrap(), q(1, 3));
        assert_eq!(parse_scalar("-2/4", s).unwrap(), q(-1, 2));
        assert_eq!(parse_scalar("0.25", s).unwrap(), q(1, 4));
        assert_eq!(parse_scalar("-1.5", s).unwrap(), q(-3, 2));
        assert_eq!(parse_scalar(".5", s).unwrap(), q(1, 2));
        assert_eq!(parse_scalar("2.", s).unwrap(), q(2, 1));
    }

    #[test]
    fn rejects_malformed() {
        let s = LiteralSyntax::DECIMAL;
        for bad in ["", "abc", "1/0", "1e3", "1/-2", "--1", ".", "1.2.3", "nan", "inf", "1/2/3", "0x10"] {
            assert!(parse_scalar(bad, s).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn decimals_need_opt_in() {
        let strict = LiteralSyntax::default();
        assert!(parse_scalar("0.5", strict).is_err());
        assert_eq!(parse_scalar("1/2", strict).unwrap(), q(1, 2));
    }

    #[test]
    fn format_is_lowest_terms() {
        assert_eq!(format_scalar(&q(6, 4)), "3/2");
        assert_eq!(format_scalar(&q(-4, 2)), "-2");
        assert_eq!(format_scalar(&q(0, 5)), "0");
    }
}
