//! Arbitrary-precision rationals and their text form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Exact rational scalar. `num_rational::Ratio` keeps the invariants we
/// need: always in lowest terms, denominator positive, structural equality.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `p/q` or a finite decimal such as `-0.25`, all exactly.
pub fn parse_rational(input: &str) -> Result<Rational, Error> {
    let s = input.trim();
    let bad = |reason: &str| Error::BadRational {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(bad("empty string"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad("bad numerator"))?;
        let d: BigInt = den.trim().parse().map_err(|_| bad("bad denominator"))?;
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let int_digits = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            "0".to_string()
        } else {
            int_part.to_string()
        };
        let n: BigInt = int_digits.parse().map_err(|_| bad("bad integer part"))?;
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("bad fractional part"));
        }
        let frac: BigInt = frac_part.parse().map_err(|_| bad("bad fractional part"))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let magnitude = n.abs() * &scale + frac;
        let signed = if negative { -magnitude } else { magnitude };
        return Ok(Rational::new(signed, scale));
    }
    let n: BigInt = s.parse().map_err(|_| bad("not an integer"))?;
    Ok(Rational::from_integer(n))
}

/// Canonical text form: `p` when the denominator is 1, otherwise `p/q`.
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
    fn parses_integers_fractions_and_decimals() {
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("0.5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_rational(" 2/4 ").unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
        assert!(parse_rational("1.2.3").is_err());
        assert!(parse_rational("1.-2").is_err());
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert_eq!(format_rational(&rat(-1, 3)), "-1/3");
    }
}
