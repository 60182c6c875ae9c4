use crate::rat::{BigInt, BigRational};
use crate::{NumError, Result};
use num_bigint::Sign;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

const MR_BASES: [u64; 20] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71];

/// Miller–Rabin over the first twenty prime bases. Deterministic below
/// 3.3·10^24 and overwhelmingly reliable beyond; only used on cofactors
/// left after trial division.
pub fn is_probable_prime(n: &BigInt) -> bool {
    let n = n.abs();
    let two = BigInt::from(2u32);
    if n < two {
        return false;
    }
    for &b in &MR_BASES {
        let b = BigInt::from(b);
        if n == b {
            return true;
        }
        if (&n % &b).is_zero() {
            return false;
        }
    }
    let nm1 = &n - 1u32;
    let mut d = nm1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'outer: for &b in &MR_BASES {
        let mut x = BigInt::from(b).modpow(&d, &n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % &n;
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Complete factorization of a small integer by trial division.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Trial division of |n| up to `bound`. Returns the prime factors found and
/// whatever cofactor remains. A cofactor that passes Miller–Rabin (and fits
/// in u64) is promoted to a prime factor.
pub fn factor_integer(n: &BigInt, bound: u64) -> (Vec<(u64, u32)>, Option<BigInt>) {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return (out, None);
    }
    let mut p = 2u64;
    while p <= bound {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        if (&n % &bp).is_zero() {
            let mut e = 0;
            while (&n % &bp).is_zero() {
                n /= &bp;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return (out, None);
    }
    // Either n is prime (below p² or certified), or a cofactor remains.
    let below_square = {
        let bp = BigInt::from(p);
        &bp * &bp > n
    };
    if below_square || is_probable_prime(&n) {
        if let Some(v) = n.to_u64() {
            out.push((v, 1));
            return (out, None);
        }
    }
    (out, Some(n))
}

/// An exact rational together with the factorization of its numerator and
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRational {
    pub value: BigRational,
    pub numerator_factors: Vec<(u64, u32)>,
    pub denominator_factors: Vec<(u64, u32)>,
    /// Unfactored part of |numerator| (set means the factorization is incomplete).
    pub numerator_remainder: Option<BigInt>,
    pub denominator_remainder: Option<BigInt>,
}

impl FactoredRational {
    pub fn composite_remainder(&self) -> bool {
        self.numerator_remainder.is_some() || self.denominator_remainder.is_some()
    }

    pub fn numerator_primes(&self) -> Vec<u64> {
        self.numerator_factors.iter().map(|&(p, _)| p).collect()
    }

    /// v_p of the numerator (0 if p does not divide it).
    pub fn depth(&self, p: u64) -> u32 {
        self.numerator_factors.iter().find(|f| f.0 == p).map(|f| f.1).unwrap_or(0)
    }

    pub fn divides_numerator(&self, m: u64) -> bool {
        (self.value.numer() % BigInt::from(m)).is_zero()
    }

    pub fn reconstruct(&self) -> BigRational {
        let prod = |fs: &[(u64, u32)], rem: &Option<BigInt>| {
            let mut r = BigInt::one();
            for &(p, e) in fs {
                r *= num_traits::pow(BigInt::from(p), e as usize);
            }
            if let Some(x) = rem {
                r *= x;
            }
            r
        };
        let n = prod(&self.numerator_factors, &self.numerator_remainder);
        let n = if self.value.numer().sign() == Sign::Minus { -n } else { n };
        BigRational::new(n, prod(&self.denominator_factors, &self.denominator_remainder))
    }
}

/// Factors numerator and denominator of a nonzero rational by trial
/// division up to `bound`.
pub fn factor_numerator(x: &BigRational, bound: u64) -> Result<FactoredRational> {
    if x.is_zero() {
        return Err(NumError::ZeroInput);
    }
    let bound = bound.max(2);
    let (nf, nr) = factor_integer(x.numer(), bound);
    let (df, dr) = factor_integer(x.denom(), bound);
    Ok(FactoredRational {
        value: x.clone(),
        numerator_factors: nf,
        denominator_factors: df,
        numerator_remainder: nr,
        denominator_remainder: dr,
    })
}

impl Serialize for FactoredRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FactoredRational", 5)?;
        st.serialize_field("value", &crate::rat::to_string(&self.value))?;
        st.serialize_field("numerator_factors", &self.numerator_factors)?;
        st.serialize_field("denominator_factors", &self.denominator_factors)?;
        st.serialize_field("numerator_remainder", &self.numerator_remainder.as_ref().map(|r| r.to_string()))?;
        st.serialize_field("denominator_remainder", &self.denominator_remainder.as_ref().map(|r| r.to_string()))?;
        st.end()
    }
}
