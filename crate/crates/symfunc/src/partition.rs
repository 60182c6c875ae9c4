use crate::{Result, SymError};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition, stored without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = SymError;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::NotPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// (1^r).
    pub fn column(r: usize) -> Self {
        Partition(vec![1; r])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length n (n ≥ len).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&x| x >= j).count() as u32).collect())
    }

    /// Multiplicity of each part value 0..=λ₁ when padded to n.
    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let m = self.0.first().copied().unwrap_or(0) as usize;
        let mut out = vec![0; m + 1];
        for x in self.padded(n) {
            out[x as usize] += 1;
        }
        out
    }

    /// All partitions of k with at most n parts, in decreasing lexicographic order.
    pub fn all(k: u32, n: usize) -> Vec<Partition> {
        fn rec(k: u32, max: u32, n: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if k == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == n {
                return;
            }
            for x in (1..=max.min(k)).rev() {
                cur.push(x);
                rec(k - x, x, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, k, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// μ ≤ λ in dominance order: every partial sum of μ is at most that of λ.
/// Partitions of different sizes still compare by partial sums.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> bool {
    let n = mu.len().max(lambda.len());
    let (a, b) = (mu.padded(n), lambda.padded(n));
    let (mut sa, mut sb) = (0u64, 0u64);
    for i in 0..n {
        sa += a[i] as u64;
        sb += b[i] as u64;
        if sa > sb {
            return false;
        }
    }
    true
}

/// Twice a half-integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfExponent {
    pub twice_value: i64,
}

impl HalfExponent {
    pub fn is_integral(&self) -> bool {
        self.twice_value % 2 == 0
    }

    pub fn integral(&self) -> Option<i64> {
        self.is_integral().then_some(self.twice_value / 2)
    }
}

impl std::ops::Add for HalfExponent {
    type Output = HalfExponent;
    fn add(self, o: Self) -> Self {
        HalfExponent { twice_value: self.twice_value + o.twice_value }
    }
}

impl std::ops::Sub for HalfExponent {
    type Output = HalfExponent;
    fn sub(self, o: Self) -> Self {
        HalfExponent { twice_value: self.twice_value - o.twice_value }
    }
}

/// ⟨β, ρ_n⟩ for an integer vector β of length n, ρ_n = ½(n−1, n−3, …, 1−n).
pub fn pair_rho(beta: &[i64], n: usize) -> HalfExponent {
    let t: i64 = beta.iter().enumerate().map(|(i, &b)| b * (n as i64 - 1 - 2 * i as i64)).sum();
    HalfExponent { twice_value: t }
}

pub fn pair_rho_partition(l: &Partition, n: usize) -> HalfExponent {
    let v: Vec<i64> = l.padded(n).into_iter().map(|x| x as i64).collect();
    pair_rho(&v, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1]), &p(&[2, 0])));
        assert!(!dominance_leq(&p(&[2, 0]), &p(&[1, 1])));
        assert!(dominance_leq(&p(&[1, 1, 1]), &p(&[3, 0, 0])));
        // incomparable pair
        assert!(!dominance_leq(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])));
        assert!(!dominance_leq(&p(&[2, 2, 2]), &p(&[3, 1, 1, 1])));
    }

    #[test]
    fn basics() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[3, 1, 0, 0]).len(), 2);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::all(4, 4).len(), 5);
        assert_eq!(Partition::all(4, 2).len(), 3);
        assert_eq!(Partition::all(0, 3), vec![Partition::empty()]);
        assert_eq!(pair_rho_partition(&p(&[1]), 2).twice_value, 1);
        assert_eq!(pair_rho_partition(&p(&[1]), 3).twice_value, 2);
    }
}
