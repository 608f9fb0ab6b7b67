//! Exact rational scalars and their textual forms.
//!
//! All quantities in the engine are `Rat` values. The canonical textual form
//! is `"p"` for integers and `"p/q"` for proper fractions, always in lowest
//! terms with the sign on the numerator; that form is used in every file
//! format and report.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics if `d == 0`; use [`parse_rat`] for user input.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with optional leading sign. Rejects zero
/// denominators and empty input.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_str.parse().map_err(|_| bad())?;
    let den: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Canonical display form: lowest terms, `p` or `p/q`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering with `digits` fractional digits, computed by exact long
/// division (no floating point). Exact when the expansion terminates within
/// `digits`, truncated toward zero otherwise.
pub fn decimal_string(r: &Rat, digits: u32) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let a = r.abs();
    let int_part = a.numer() / a.denom();
    let mut rem = a.numer() - &int_part * a.denom();
    if rem.is_zero() {
        return format!("{sign}{int_part}");
    }
    let mut frac = String::new();
    for _ in 0..digits {
        rem *= 10;
        let digit = &rem / a.denom();
        frac.push_str(&digit.to_string());
        rem -= &digit * a.denom();
        if rem.is_zero() {
            break;
        }
    }
    format!("{sign}{int_part}.{frac}")
}

pub fn parse_rat_vec(parts: &[impl AsRef<str>]) -> Result<Vec<Rat>> {
    parts.iter().map(|p| parse_rat(p.as_ref())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rat(" 14/5 ").unwrap(), ratio(14, 5));
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(parse_rat("3/0").is_err());
        assert!(parse_rat("").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn canonical_format() {
        assert_eq!(fmt_rat(&ratio(6, 4)), "3/2");
        assert_eq!(fmt_rat(&ratio(-8, 2)), "-4");
    }

    #[test]
    fn decimal_is_exact_long_division() {
        assert_eq!(decimal_string(&ratio(1, 8), 9), "0.125");
        assert_eq!(decimal_string(&ratio(-14, 5), 9), "-2.8");
        assert_eq!(decimal_string(&ratio(1, 3), 4), "0.3333");
    }
}
