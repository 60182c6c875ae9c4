//! Definite quaternion algebras (a, b)_ℚ with basis 1, i, j, k = ij.

use crate::{BrandtError, Result};
use exactnum::{factor_integer, hilbert_symbol};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub type Quat = [BigRational; 4];

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn quat(c: [i64; 4], den: i64) -> Quat {
    c.map(|x| BigRational::new(BigInt::from(x), BigInt::from(den)))
}

pub fn zero() -> Quat {
    [q(0), q(0), q(0), q(0)]
}

pub fn one() -> Quat {
    [q(1), q(0), q(0), q(0)]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuaternionAlgebra {
    pub a: i64,
    pub b: i64,
    /// Product of the finite ramified primes.
    pub disc: u64,
}

fn odd_primes_of(d: u64) -> Result<Vec<u64>> {
    let (f, rest) = factor_integer(&BigInt::from(d), 1 << 20);
    if rest.is_some() {
        return Err(BrandtError::Input(format!("cannot factor {d}")));
    }
    if f.iter().any(|&(_, e)| e > 1) {
        return Err(BrandtError::Input(format!("{d} is not squarefree")));
    }
    Ok(f.into_iter().map(|(p, _)| p).collect())
}

pub fn primes_of(n: u64) -> Vec<u64> {
    let (f, _) = factor_integer(&BigInt::from(n), 1 << 20);
    f.into_iter().map(|(p, _)| p).collect()
}

impl QuaternionAlgebra {
    /// The finite primes where (a, b) is ramified, from Hilbert symbols at
    /// every p | 2ab.
    pub fn ramified_primes(a: i64, b: i64) -> Vec<u64> {
        let mut ps = primes_of((2 * a * b).unsigned_abs());
        ps.sort();
        ps.dedup();
        ps.into_iter().filter(|&p| hilbert_symbol(a, b, p) == -1).collect()
    }

    pub fn certify(&self) -> Result<()> {
        if hilbert_symbol(self.a, self.b, 0) != -1 {
            return Err(BrandtError::Certification(format!("({}, {}) is not definite", self.a, self.b)));
        }
        let ram = Self::ramified_primes(self.a, self.b);
        if ram != odd_primes_of(self.disc)? {
            return Err(BrandtError::Certification(format!("({}, {}) ramifies at {ram:?}, not at the primes of {}", self.a, self.b, self.disc)));
        }
        Ok(())
    }

    pub fn mul(&self, x: &Quat, y: &Quat) -> Quat {
        let (a, b) = (q(self.a), q(self.b));
        let ab = &a * &b;
        [
            &x[0] * &y[0] + &a * &x[1] * &y[1] + &b * &x[2] * &y[2] - &ab * &x[3] * &y[3],
            &x[0] * &y[1] + &x[1] * &y[0] - &b * &x[2] * &y[3] + &b * &x[3] * &y[2],
            &x[0] * &y[2] + &x[2] * &y[0] + &a * &x[1] * &y[3] - &a * &x[3] * &y[1],
            &x[0] * &y[3] + &x[3] * &y[0] + &x[1] * &y[2] - &x[2] * &y[1],
        ]
    }

    pub fn conj(&self, x: &Quat) -> Quat {
        [x[0].clone(), -&x[1], -&x[2], -&x[3]]
    }

    pub fn nrd(&self, x: &Quat) -> BigRational {
        let (a, b) = (q(self.a), q(self.b));
        &x[0] * &x[0] - &a * &x[1] * &x[1] - &b * &x[2] * &x[2] + &a * &b * &x[3] * &x[3]
    }

    pub fn trd(&self, x: &Quat) -> BigRational {
        &x[0] * q(2)
    }

    pub fn inv(&self, x: &Quat) -> Option<Quat> {
        let n = self.nrd(x);
        if n.is_zero() {
            return None;
        }
        Some(self.conj(x).map(|c| c / &n))
    }

    pub fn is_integral(&self, x: &Quat) -> bool {
        self.trd(x).is_integer() && self.nrd(x).is_integer()
    }
}

/// (a, b) from the classical table for prime D, or by search for composite
/// D; ramification certified either way.
pub fn construct_algebra(d: u64) -> Result<QuaternionAlgebra> {
    let ps = odd_primes_of(d)?;
    if ps.len() % 2 == 0 {
        return Err(BrandtError::Input(format!("{d} has an even number of prime factors; no definite algebra over ℚ")));
    }
    let di = d as i64;
    let (a, b) = if ps.len() == 1 {
        let p = ps[0];
        if p == 2 {
            (-1, -1)
        } else if p % 4 == 3 {
            (-1, -di)
        } else if p % 8 == 5 {
            (-2, -di)
        } else {
            let aux = (3..)
                .step_by(4)
                .find(|&r: &u64| exactnum::factor::is_prime_u64(r) && exactnum::kronecker(r as i64, p as i64) == -1)
                .unwrap();
            (-(aux as i64), -di)
        }
    } else {
        search_pair(d)?
    };
    let alg = QuaternionAlgebra { a, b, disc: d };
    alg.certify()?;
    Ok(alg)
}

fn search_pair(d: u64) -> Result<(i64, i64)> {
    let want = odd_primes_of(d)?;
    for s in 2..400i64 {
        for a in 1..s {
            let b = s - a;
            if a > b {
                break;
            }
            if QuaternionAlgebra::ramified_primes(-a, -b) == want {
                return Ok((-a, -b));
            }
        }
    }
    Err(BrandtError::Certification(format!("no small (a, b) ramified exactly at {want:?}")))
}

/// Coordinates with respect to 1, i, j, k as integers over a common
/// denominator, for display.
pub fn fmt_quat(x: &Quat) -> String {
    let names = ["", "i", "j", "k"];
    let mut parts = Vec::new();
    for (c, n) in x.iter().zip(names) {
        if !c.is_zero() {
            if n.is_empty() {
                parts.push(c.to_string());
            } else if c.is_one() {
                parts.push(n.to_string());
            } else {
                parts.push(format!("{c}{n}"));
            }
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table() {
        assert_eq!((construct_algebra(2).unwrap().a, construct_algebra(2).unwrap().b), (-1, -1));
        let b = construct_algebra(11).unwrap();
        assert_eq!((b.a, b.b), (-1, -11));
        let b = construct_algebra(13).unwrap();
        assert_eq!((b.a, b.b), (-2, -13));
        let b = construct_algebra(17).unwrap();
        assert_eq!((b.a, b.b), (-3, -17));
        assert!(construct_algebra(6).is_err());
        assert!(construct_algebra(12).is_err());
        let b = construct_algebra(30).unwrap();
        assert_eq!(QuaternionAlgebra::ramified_primes(b.a, b.b), vec![2, 3, 5]);
    }

    #[test]
    fn arithmetic() {
        let alg = construct_algebra(11).unwrap();
        let i = quat([0, 1, 0, 0], 1);
        let j = quat([0, 0, 1, 0], 1);
        assert_eq!(alg.mul(&i, &j), quat([0, 0, 0, 1], 1));
        assert_eq!(alg.mul(&j, &i), quat([0, 0, 0, -1], 1));
        let x = quat([1, 2, 3, 4], 2);
        let y = quat([-3, 1, 0, 5], 1);
        assert_eq!(alg.nrd(&alg.mul(&x, &y)), alg.nrd(&x) * alg.nrd(&y));
        assert_eq!(alg.mul(&x, &alg.inv(&x).unwrap()), one());
    }
}
