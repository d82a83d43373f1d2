//! Exact rational arithmetic for quantum numbers.
//!
//! Backed by `num_rational::Ratio<i64>`, which keeps every value reduced with a
//! positive denominator.

use core::fmt;

use num_traits::{Signed, Zero};

pub type Rational = num_rational::Ratio<i64>;

/// Error returned when a `"p/q"` literal cannot be read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalParseError {
    pub text: alloc::string::String,
}

impl fmt::Display for RationalParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}", self.text)
    }
}

impl core::error::Error for RationalParseError {}

/// Shorthand for `Rational::new(num, den)`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(value)
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`; whitespace around the parts is ignored.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let err = || RationalParseError { text: text.into() };
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: i64 = num.parse().map_err(|_| err())?;
    let den: i64 = den.parse().map_err(|_| err())?;
    if den == 0 {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Renders as `"p/q"` (or `"p"` for integers), the inverse of [`parse_rational`].
pub fn format_rational(value: &Rational) -> alloc::string::String {
    alloc::format!("{value}")
}

/// `true` when `value` is a non-negative multiple of one half.
pub fn is_half_multiple(value: &Rational) -> bool {
    !value.is_negative() && (value * int(2)).is_integer()
}

pub fn to_f64(value: &Rational) -> f64 {
    *value.numer() as f64 / *value.denom() as f64
}

pub(crate) fn is_zero(value: &Rational) -> bool {
    value.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("2/3").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational("-1/3").unwrap(), ratio(-1, 3));
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational(" 5 ").unwrap(), int(5));
        assert_eq!(parse_rational("1/-2").unwrap(), ratio(-1, 2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/3").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(format_rational(&ratio(4, -6)), "-2/3");
        assert_eq!(format_rational(&int(3)), "3");
    }

    #[test]
    fn half_multiples() {
        assert!(is_half_multiple(&ratio(3, 2)));
        assert!(is_half_multiple(&int(0)));
        assert!(!is_half_multiple(&ratio(1, 3)));
        assert!(!is_half_multiple(&ratio(-1, 2)));
    }
}
