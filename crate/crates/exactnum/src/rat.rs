//! Small helpers around `num_rational::BigRational`.

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use crate::{NumError, Result};
use num_traits::{One, Signed, Zero};

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "a/b" or "a".
pub fn parse(s: &str) -> Result<BigRational> {
    let bad = || NumError::Parse(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Always "num/den", including integers ("3/1"), so consumers can parse
/// without special cases.
pub fn to_string(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn pow(x: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

pub fn abs(x: &BigRational) -> BigRational {
    x.abs()
}

pub fn is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}

/// p-adic valuation of a nonzero rational.
pub fn valuation(x: &BigRational, p: u64) -> i64 {
    assert!(!x.is_zero());
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut n = x.numer().abs();
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    let mut d = x.denom().clone();
    while (&d % &p).is_zero() {
        d /= &p;
        v -= 1;
    }
    v
}

/// Serde adapter: rationals travel as "num/den" strings.
pub mod serde_str {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_string(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["31/384", "-5/6", "7/1", "0/1"] {
            assert_eq!(to_string(&parse(s).unwrap()), s);
        }
        assert_eq!(parse("4/6").unwrap(), rat(2, 3));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&rat(31, 384), 2), -7);
        assert_eq!(valuation(&rat(50, 3), 5), 2);
    }
}
