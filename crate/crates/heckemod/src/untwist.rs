//! Removing a p-power-order twist along orbits: if φ(σy) = ζ·φ(y) with ζ a
//! p^r-th root of unity, replacing φ by its value at a fixed representative
//! of each orbit changes nothing modulo the prime (1 − ζ_{p^r}) above p.

use crate::{HeckeError, Result};
use serde::{Deserialize, Serialize};

/// ℤ[ζ_{p^r}] = ℤ[x]/Φ_{p^r}(x), elements as coefficient vectors of length
/// φ(p^r).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    p: u64,
    r: u32,
}

impl Cyclotomic {
    pub fn new(p: u64, r: u32) -> Result<Self> {
        if !(1..=2).contains(&r) || !exactnum::is_probable_prime(&p.into()) {
            return Err(HeckeError::Invalid(format!("ℤ[ζ_{{{p}^{r}}}] needs p prime and r ∈ {{1, 2}}")));
        }
        Ok(Cyclotomic { p, r })
    }

    /// p^r.
    pub fn order(&self) -> usize {
        self.p.pow(self.r) as usize
    }

    pub fn rank(&self) -> usize {
        (self.p.pow(self.r - 1) * (self.p - 1)) as usize
    }

    /// Reduce a polynomial in ζ (any length) modulo Φ_{p^r}.
    pub fn reduce(&self, f: &[i64]) -> Vec<i64> {
        let n = self.rank();
        let step = self.p.pow(self.r - 1) as usize;
        let mut v = f.to_vec();
        // Φ = Σ_{i<p} x^{i·step}; x^{m} for m ≥ n rewritten via x^{n} = −Σ_{i<p−1} x^{i·step}
        for m in (n..v.len()).rev() {
            let c = v[m];
            if c == 0 {
                continue;
            }
            v[m] = 0;
            let shift = m - n;
            for i in 0..(self.p as usize - 1) {
                v[shift + i * step] -= c;
            }
        }
        v.resize(n, 0);
        v
    }

    /// ζ^j · f.
    pub fn mul_zeta(&self, f: &[i64], j: usize) -> Vec<i64> {
        let mut g = vec![0; j + f.len()];
        g[j..].copy_from_slice(f);
        self.reduce(&g)
    }

    /// The image in ℤ[ζ]/(1 − ζ) = F_p.
    pub fn residue(&self, f: &[i64]) -> u64 {
        f.iter().sum::<i64>().rem_euclid(self.p as i64) as u64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Untwisted {
    /// The orbit-constant function, reduced coefficient vectors.
    pub values: Vec<Vec<i64>>,
    /// j with φ(y) = ζ^j φ(representative of y's orbit).
    pub twists: Vec<usize>,
    /// Common residues of φ and φ′ mod (1 − ζ).
    pub residues: Vec<u64>,
}

/// `values[y]` are elements of ℤ[ζ_{p^r}]; `orbits` partitions the indices,
/// the first index of each orbit being its representative.
pub fn untwist_orbits(values: &[Vec<i64>], orbits: &[Vec<usize>], p: u64, r: u32) -> Result<Untwisted> {
    let z = Cyclotomic::new(p, r)?;
    let n = values.len();
    let mut owner = vec![None; n];
    for (oi, orbit) in orbits.iter().enumerate() {
        for &y in orbit {
            if y >= n || owner[y].replace(oi).is_some() {
                return Err(HeckeError::Invalid(format!("orbits do not partition 0..{n}")));
            }
        }
    }
    if owner.iter().any(|o| o.is_none()) {
        return Err(HeckeError::Invalid(format!("orbits do not partition 0..{n}")));
    }
    let vals: Vec<Vec<i64>> = values.iter().map(|v| z.reduce(v)).collect();
    let mut out = vals.clone();
    let mut twists = vec![0; n];
    for orbit in orbits {
        let Some(&rep) = orbit.first() else { continue };
        for &y in orbit {
            let j = (0..z.order())
                .find(|&j| z.mul_zeta(&vals[rep], j) == vals[y])
                .ok_or_else(|| HeckeError::Untwist(format!("value at {y} is not a p^r-th root of unity times the value at {rep}")))?;
            twists[y] = j;
            out[y] = vals[rep].clone();
        }
    }
    let residues: Vec<u64> = out.iter().map(|v| z.residue(v)).collect();
    if vals.iter().zip(&residues).any(|(v, &r)| z.residue(v) != r) {
        return Err(HeckeError::Untwist("untwisted function is not congruent to the input".into()));
    }
    Ok(Untwisted { values: out, twists, residues })
}
