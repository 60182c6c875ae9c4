use crate::ff::{Fe, Gf};
use crate::rat::BigInt;
use crate::{NumError, Result};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// (a + b√d) or, with `half`, (a + b√d)/2, in the ring of integers of ℚ(√d).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticRingElem {
    pub d: i64,
    pub a: i64,
    pub b: i64,
    #[serde(default)]
    pub half: bool,
}

fn squarefree(n: i64) -> bool {
    n != 0 && crate::factor::factor_u64(n.unsigned_abs()).iter().all(|&(_, e)| e == 1)
}

impl QuadraticRingElem {
    pub fn new(d: i64, a: i64, b: i64, half: bool) -> Result<Self> {
        let x = QuadraticRingElem { d, a, b, half };
        x.validate()?;
        Ok(x)
    }

    pub fn integer(d: i64, a: i64) -> Self {
        QuadraticRingElem { d, a, b: 0, half: false }
    }

    pub fn validate(&self) -> Result<()> {
        if !squarefree(self.d) || self.d == 1 {
            return Err(NumError::BadElement(format!("d = {} is not a squarefree non-square", self.d)));
        }
        if self.half {
            if self.d.rem_euclid(4) != 1 {
                return Err(NumError::BadElement("half-integral element needs d ≡ 1 mod 4".into()));
            }
            if (self.a - self.b).rem_euclid(2) != 0 {
                return Err(NumError::BadElement("half-integral element needs a ≡ b mod 2".into()));
            }
        }
        Ok(())
    }

    /// Reduce (a+b√d)/2 with a, b even to the non-half form.
    fn normalize(mut self) -> Self {
        if self.half && self.a % 2 == 0 && self.b % 2 == 0 {
            self.a /= 2;
            self.b /= 2;
            self.half = false;
        }
        self
    }

    fn doubled(&self) -> (i128, i128) {
        if self.half {
            (self.a as i128, self.b as i128)
        } else {
            (2 * self.a as i128, 2 * self.b as i128)
        }
    }

    fn from_doubled(d: i64, a2: i128, b2: i128) -> Self {
        QuadraticRingElem { d, a: a2 as i64, b: b2 as i64, half: true }.normalize()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.d, o.d);
        let (a, b) = self.doubled();
        let (c, e) = o.doubled();
        Self::from_doubled(self.d, a + c, b + e)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let (c, e) = o.doubled();
        self.add(&Self::from_doubled(o.d, -c, -e))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.d, o.d);
        let (a, b) = self.doubled();
        let (c, e) = o.doubled();
        let d = self.d as i128;
        // (a+b√d)(c+e√d)/4, returned as doubled coordinates /2
        let x = a * c + d * b * e;
        let y = a * e + b * c;
        debug_assert!(x % 2 == 0 && y % 2 == 0);
        Self::from_doubled(self.d, x / 2, y / 2)
    }

    /// Field norm.
    pub fn norm(&self) -> i128 {
        let (a, b) = self.doubled();
        (a * a - self.d as i128 * b * b) / 4
    }
}

/// A prime of ℚ(√d) above p, given by the image t of √d when p splits or
/// ramifies (residue degree 1), or by residue degree 2 when p is inert.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeIdealSpec {
    pub p: u64,
    pub residue_degree: u8,
    pub root: Option<i64>,
}

impl PrimeIdealSpec {
    /// The prime ideal generated by `g`, when N(g) = ±p is prime; the root
    /// is chosen so that g maps to zero.
    pub fn from_generator(g: &QuadraticRingElem) -> Result<Self> {
        g.validate()?;
        let n = g.norm().unsigned_abs();
        let p = n as u64;
        let f = Gf::prime(p).map_err(|_| NumError::InconsistentRoot(format!("norm {n} of the generator is not prime")))?;
        for t in 0..p as i64 {
            if (t * t - g.d).rem_euclid(p as i64) != 0 {
                continue;
            }
            let spec = PrimeIdealSpec { p, residue_degree: 1, root: Some(t) };
            if p != 2 || !g.half {
                if f.is_zero(&reduce_mod_in(g, &spec, &f)?) {
                    return Ok(spec);
                }
            }
        }
        Err(NumError::InconsistentRoot("no root of d kills the generator".into()))
    }

    pub fn field(&self) -> Result<Gf> {
        Gf::new(self.p, self.residue_degree as usize)
    }

    fn check(&self, d: i64) -> Result<()> {
        let p = self.p as i64;
        match (self.residue_degree, self.root) {
            (1, Some(t)) => {
                if (t * t - d).rem_euclid(p) != 0 {
                    return Err(NumError::InconsistentRoot(format!("{t}² ≢ {d} mod {p}")));
                }
            }
            (1, None) => return Err(NumError::InconsistentRoot("residue degree 1 needs a root".into())),
            (2, None) => {
                if p == 2 || crate::character::kronecker(d, p) != -1 {
                    return Err(NumError::InconsistentRoot(format!("{d} is not a nonresidue mod {p}")));
                }
            }
            (2, Some(_)) => return Err(NumError::InconsistentRoot("inert prime carries no root".into())),
            (k, _) => return Err(NumError::InconsistentRoot(format!("residue degree {k}"))),
        }
        Ok(())
    }
}

/// Image of x in the residue field `f` of 𝔭 (f must be `spec.field()`).
pub fn reduce_mod_in(x: &QuadraticRingElem, spec: &PrimeIdealSpec, f: &Gf) -> Result<Fe> {
    x.validate()?;
    if x.half && spec.p == 2 {
        return Err(NumError::HalfAtTwo);
    }
    spec.check(x.d)?;
    let sd = match spec.root {
        Some(t) => f.from_i64(t),
        None => f.sqrt(&f.from_i64(x.d)).ok_or_else(|| NumError::InconsistentRoot("no square root".into()))?,
    };
    let v = f.add(&f.from_i64(x.a), &f.mul(&f.from_i64(x.b), &sd));
    if x.half {
        Ok(f.mul(&v, &f.inv(&f.from_u64(2)).unwrap()))
    } else {
        Ok(v)
    }
}

/// Image of x modulo 𝔭, together with the residue field.
pub fn reduce_mod(x: &QuadraticRingElem, spec: &PrimeIdealSpec) -> Result<(Gf, Fe)> {
    let f = spec.field()?;
    let v = reduce_mod_in(x, spec, &f)?;
    Ok((f, v))
}

/// Whether p divides the norm of x − y, i.e. some prime above p contains it.
pub fn norm_divisible(x: &QuadraticRingElem, y: &QuadraticRingElem, p: u64) -> bool {
    let n = BigInt::from(x.sub(y).norm());
    (n.abs() % BigInt::from(p)).is_zero() || n.is_zero()
}

/// The primes above p with residue degree one, in order of their roots.
pub fn split_primes(d: i64, p: u64) -> Vec<PrimeIdealSpec> {
    (0..p as i64)
        .filter(|t| (t * t - d).mod_floor(&(p as i64)) == 0)
        .map(|t| PrimeIdealSpec { p, residue_degree: 1, root: Some(t) })
        .collect()
}

pub fn to_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let spec = PrimeIdealSpec { p: 31, residue_degree: 1, root: Some(6) };
        let x = QuadraticRingElem::new(5, 9, -2, false).unwrap();
        let (f, v) = reduce_mod(&x, &spec).unwrap();
        assert_eq!(f.to_prime(&v), Some((9 - 12i64).rem_euclid(31) as u64));
        let g = QuadraticRingElem::new(5, 1, 5, true).unwrap();
        assert!(f.is_zero(&reduce_mod_in(&g, &spec, &f).unwrap()));
        // the other root of 5 does not kill the generator
        let other = PrimeIdealSpec { p: 31, residue_degree: 1, root: Some(25) };
        assert_eq!(f.to_prime(&reduce_mod_in(&g, &other, &f).unwrap()), Some(1));
        assert_eq!(PrimeIdealSpec::from_generator(&g).unwrap(), spec);
        let seven = QuadraticRingElem::integer(5, 7);
        assert_eq!(f.to_prime(&reduce_mod_in(&seven, &other, &f).unwrap()), Some(7));
    }

    #[test]
    fn errors() {
        let g = QuadraticRingElem::new(5, 1, 5, true).unwrap();
        let bad = PrimeIdealSpec { p: 31, residue_degree: 1, root: Some(7) };
        assert!(matches!(reduce_mod(&g, &bad), Err(NumError::InconsistentRoot(_))));
        let two = PrimeIdealSpec { p: 2, residue_degree: 2, root: None };
        assert_eq!(reduce_mod(&g, &two), Err(NumError::HalfAtTwo));
        let split_as_inert = PrimeIdealSpec { p: 31, residue_degree: 2, root: None };
        assert!(reduce_mod(&g, &split_as_inert).is_err());
    }

    #[test]
    fn inert_reduction() {
        // 7 is inert in ℚ(√5)
        let spec = PrimeIdealSpec { p: 7, residue_degree: 2, root: None };
        let f = spec.field().unwrap();
        let s = QuadraticRingElem::new(5, 0, 1, false).unwrap();
        let v = reduce_mod_in(&s, &spec, &f).unwrap();
        assert_eq!(f.square(&v), f.from_u64(5));
        assert!(!f.in_prime_field(&v));
    }

    #[test]
    fn ring_ops() {
        let x = QuadraticRingElem::new(5, 1, 5, true).unwrap();
        let y = QuadraticRingElem::new(5, 1, -5, true).unwrap();
        assert_eq!(x.mul(&y), QuadraticRingElem::integer(5, -31));
        assert_eq!(x.norm(), -31);
        assert_eq!(x.add(&y), QuadraticRingElem::integer(5, 1));
    }
}
