//! Exact rational scalars.
//!
//! `BigRat` is `num_rational::BigRational`, which already maintains the
//! invariants we need: always reduced, denominator positive. The helpers here
//! cover the small amount of glue the rest of the crate wants (integer
//! conversions, gcd chains, parsing of `p/q` strings).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced, denominator >= 1.
pub type BigRat = BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> BigRat {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// True iff the rational is an integer.
pub fn is_integer(r: &BigRat) -> bool {
    r.denom().is_one()
}

/// The integer value, if the rational is one.
pub fn to_bigint(r: &BigRat) -> Option<BigInt> {
    is_integer(r).then(|| r.numer().clone())
}

/// The value as a `u64`, if it is a non-negative integer that fits.
pub fn to_u64(r: &BigRat) -> Option<u64> {
    to_bigint(r).and_then(|n| n.to_u64())
}

/// gcd of a non-empty slice of positive integers.
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0u64, |acc, &v| acc.gcd(&v))
}

/// Running gcds `e_k = gcd(v_0, ..., v_k)`.
pub fn gcd_chain(values: &[u64]) -> Vec<u64> {
    let mut chain = Vec::with_capacity(values.len());
    let mut acc = 0u64;
    for &v in values {
        acc = acc.gcd(&v);
        chain.push(acc);
    }
    chain
}

/// Parse `"p"` or `"p/q"` with optional sign into a rational.
pub fn parse_rat(text: &str) -> Result<BigRat> {
    let s = text.trim();
    let err = |msg: &str| Error::MalformedSequence(format!("{msg}: {text:?}"));
    if s.is_empty() {
        return Err(err("empty number"));
    }
    let (num_part, den_part) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = num_part.parse().map_err(|_| err("bad integer"))?;
    let denom: BigInt = match den_part {
        Some(d) => d.parse().map_err(|_| err("bad denominator"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(numer, denom))
}

/// Canonical `p/q` form (just `p` when integral).
pub fn fmt_rat(r: &BigRat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True iff `r > 0`.
pub fn is_positive(r: &BigRat) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("7/2").unwrap(), ratio(7, 2));
        assert_eq!(parse_rat(" -3 ").unwrap(), rat(-3));
        assert_eq!(parse_rat("6/4").unwrap(), ratio(3, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
        assert_eq!(fmt_rat(&ratio(14, 2)), "7");
        assert_eq!(fmt_rat(&ratio(-5, 3)), "-5/3");
    }

    #[test]
    fn gcd_helpers() {
        assert_eq!(gcd_all(&[4, 6, 13]), 1);
        assert_eq!(gcd_all(&[4, 6, 14]), 2);
        assert_eq!(gcd_chain(&[4, 6, 7]), vec![4, 2, 1]);
    }

    #[test]
    fn integer_detection() {
        assert!(is_integer(&rat(5)));
        assert!(!is_integer(&ratio(5, 2)));
        assert_eq!(to_u64(&rat(9)), Some(9));
        assert_eq!(to_u64(&rat(-9)), None);
        assert_eq!(to_u64(&ratio(9, 2)), None);
    }
}
