//! Exact arbitrary-precision scalars and the text encodings used for them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Largest magnitude that survives a round trip through a JSON number
/// (IEEE double mantissa). Anything bigger is written as a decimal string.
pub const JSON_SAFE_MAX: i128 = 1 << 53;

pub fn int_pow(base: &Int, exp: u64) -> Int {
    Pow::pow(base, exp)
}

pub fn rat_from_i128(v: i128) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    Pow::pow(base.clone(), exp as i32)
}

/// Parses an exact rational: `"7"`, `"-3/4"`.
pub fn parse_rational(text: &str) -> Result<Rat> {
    let text = text.trim();
    let mk_err = || Error::input(format!("invalid rational literal {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: Int = num.trim().parse().map_err(|_| mk_err())?;
    let denom: Int = match den {
        Some(d) => d.trim().parse().map_err(|_| mk_err())?,
        None => Int::one(),
    };
    if denom.is_zero() {
        return Err(Error::input(format!("zero denominator in {text:?}")));
    }
    Ok(Rat::new(numer, denom))
}

/// Formats a rational in lowest terms: integer part only when the
/// denominator is one, `p/q` otherwise. `BigRational` keeps the
/// denominator positive, so no extra normalization is needed.
pub fn format_rational(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn rat_is_integer(value: &Rat) -> bool {
    value.denom().is_one()
}

/// Exact conversion to `i128`; fails when fractional or out of range.
pub fn rat_to_i128(value: &Rat) -> Result<i128> {
    if !rat_is_integer(value) {
        return Err(Error::input(format!(
            "expected integer, got {}",
            format_rational(value)
        )));
    }
    int_to_i128(value.numer())
}

pub fn int_to_i128(value: &Int) -> Result<i128> {
    i128::try_from(value.clone())
        .map_err(|_| Error::input(format!("integer {value} out of i128 range")))
}

pub fn rat_abs(value: &Rat) -> Rat {
    value.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for text in ["0", "7", "-3", "3/4", "-10/4"] {
            let r = parse_rational(text).unwrap();
            let again = parse_rational(&format_rational(&r)).unwrap();
            assert_eq!(r, again);
        }
        assert_eq!(format_rational(&parse_rational("-10/4").unwrap()), "-5/2");
    }

    #[test]
    fn rational_rejects_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let three = Int::from(3);
        assert_eq!(int_pow(&three, 0), Int::one());
        assert_eq!(int_pow(&three, 5), Int::from(243));
    }
}
