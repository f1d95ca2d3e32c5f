//! Exact rational scalars.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so it is used directly; this module only adds the small
//! helpers the rest of the crate leans on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num / den` in lowest terms. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `p/q` or a plain integer, with optional sign and surrounding
/// whitespace. Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::RationalSyntax(text.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Canonical `p/q` rendering; integers are rendered without a denominator.
pub fn render(q: &Rational) -> String {
    q.to_string()
}

pub(crate) fn require_positive(what: &'static str, q: &Rational) -> Result<()> {
    if q.is_positive() {
        Ok(())
    } else {
        Err(Error::NotPositive {
            what,
            value: render(q),
        })
    }
}

pub(crate) fn require_non_negative(what: &'static str, q: &Rational) -> Result<()> {
    if q.is_negative() {
        Err(Error::Negative {
            what,
            value: render(q),
        })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 5), zero());
        assert_eq!(rat(0, 5).denom(), &BigInt::from(1));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_rational("235761/93428").unwrap(), rat(235761, 93428));
        assert_eq!(parse_rational(" -2/4 ").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(render(&rat(-1, 24)), "-1/24");
        assert_eq!(render(&int(6)), "6");
    }

    #[test]
    fn big_values_stay_exact() {
        let big = parse_rational("123456789012345678901234567890/3").unwrap();
        assert_eq!(render(&big), "41152263004115226300411522630");
    }
}
