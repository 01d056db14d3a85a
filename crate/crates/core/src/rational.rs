//! Exact rational scalars.
//!
//! Every field value in this crate is a [`Rational`]. Textual form is `p/q`
//! in lowest terms, or just `p` when the denominator is one.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Integer-valued rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse(text: &str) -> Result<Rational> {
    let t = text.trim();
    let r = Rational::from_str(t).map_err(|_| Error::Parse(format!("not a rational: {t:?}")))?;
    Ok(r)
}

/// Canonical text: lowest terms, `p` when q = 1.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// Random integer vector with entries drawn uniformly from `[-9, 9]`.
pub fn random_ints<R: Rng>(rng: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| int(rng.gen_range(-9..=9))).collect()
}

/// [`random_ints`] from a ChaCha8 stream seeded with `seed`.
pub fn seeded_ints(seed: u64, len: usize) -> Vec<Rational> {
    use rand::SeedableRng;
    random_ints(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), len)
}

pub fn vec_from_ints(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| int(v)).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(zero(), |acc, (x, y)| acc + x * y)
}

pub fn format_vec(values: &[Rational]) -> Vec<String> {
    values.iter().map(format).collect()
}

/// A probability given as `p/q`, `p` or a finite decimal such as `0.25`.
pub fn parse_probability(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::InvalidProbability(t.to_string());
    let r = if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{whole}{frac}");
        let numer = BigInt::from_str(&digits).map_err(|_| bad())?;
        Rational::new(numer, num_traits::pow(BigInt::from(10), frac.len()))
    } else {
        Rational::from_str(t).map_err(|_| bad())?
    };
    if r.is_negative() || r > one() {
        return Err(bad());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_is_lowest_terms() {
        assert_eq!(format(&parse("6/4").unwrap()), "3/2");
        assert_eq!(format(&parse("-8/2").unwrap()), "-4");
        assert_eq!(format(&zero()), "0");
    }

    #[test]
    fn probabilities() {
        assert_eq!(parse_probability("0.25").unwrap(), parse("1/4").unwrap());
        assert_eq!(parse_probability("1").unwrap(), one());
        assert!(parse_probability("3/2").is_err());
        assert!(parse_probability("-0.1").is_err());
        assert!(parse_probability("abc").is_err());
    }
}
