use crate::{LocalError, Result};
use serde::{Deserialize, Serialize};

/// 2ρ_n = (n−1, n−3, …, 1−n).
pub fn twice_rho(n: usize) -> Vec<i64> {
    (0..n).map(|i| n as i64 - 1 - 2 * i as i64).collect()
}

/// An archimedean parameter k = (k_1, …, k_n) ∈ ½ℤⁿ for GL(n), stored as
/// twice-values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LParamGL {
    pub twice_k: Vec<i64>,
}

impl LParamGL {
    pub fn new(twice_k: Vec<i64>) -> Self {
        LParamGL { twice_k }
    }

    /// From integer-or-half-integer values given as twice-values, checked to
    /// lie in 𝕃_n: k − ρ_n integral and weakly decreasing.
    pub fn regular(twice_k: Vec<i64>) -> Result<Self> {
        let k = LParamGL { twice_k };
        if !k.in_l() {
            return Err(LocalError::Precondition(format!("{:?} (twice-values) is not in 𝕃_{}", k.twice_k, k.n())));
        }
        Ok(k)
    }

    /// The parameter ((k−1)/2, −(k−1)/2) of a weight-k form on GL(2).
    pub fn gl2_weight(k: i64) -> Self {
        LParamGL { twice_k: vec![k - 1, 1 - k] }
    }

    pub fn n(&self) -> usize {
        self.twice_k.len()
    }

    pub fn in_l(&self) -> bool {
        in_l(&self.twice_k)
    }
}

/// k − ρ_n integral and weakly decreasing, on twice-values.
pub fn in_l(twice_k: &[i64]) -> bool {
    let r = twice_rho(twice_k.len());
    let d: Vec<i64> = twice_k.iter().zip(&r).map(|(k, r)| k - r).collect();
    d.iter().all(|x| x % 2 == 0) && d.windows(2).all(|w| w[0] >= w[1])
}

/// An archimedean parameter of U(N): k ∈ 𝕃_N as twice-values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LParamU {
    pub twice_k: Vec<i64>,
}

impl LParamU {
    pub fn new(twice_k: Vec<i64>) -> Result<Self> {
        if !in_l(&twice_k) {
            return Err(LocalError::Precondition(format!("{twice_k:?} (twice-values) is not in 𝕃_{}", twice_k.len())));
        }
        Ok(LParamU { twice_k })
    }

    /// Without the 𝕃_N check; k̃ and k′ must still be integral.
    pub fn unchecked(twice_k: Vec<i64>) -> Self {
        LParamU { twice_k }
    }

    pub fn big_n(&self) -> usize {
        self.twice_k.len()
    }

    /// k̃_j = k_j − k_{N−j+1}, j ≤ ⌊N/2⌋ (integers).
    pub fn k_tilde(&self) -> Vec<i64> {
        let n = self.big_n();
        (0..n / 2).map(|j| (self.twice_k[j] - self.twice_k[n - 1 - j]) / 2).collect()
    }

    /// k′_j = k_j + k_{N−j+1}, j ≤ ⌊N/2⌋ (integers).
    pub fn k_prime(&self) -> Vec<i64> {
        let n = self.big_n();
        (0..n / 2).map(|j| (self.twice_k[j] + self.twice_k[n - 1 - j]) / 2).collect()
    }

    /// The parameter ρ_N of the trivial representation.
    pub fn trivial(big_n: usize) -> Self {
        LParamU { twice_k: twice_rho(big_n) }
    }
}

/// ν_m = u for m even and ½ + u for m odd, as a twice-value.
pub fn twice_nu(m: usize, u: i64) -> i64 {
    2 * u + (m % 2) as i64
}

/// A weight (k₁, k₂) for GSp(4); both entries are integers in the
/// normalization used by the congruence predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gsp4Weight {
    pub k1: i64,
    pub k2: i64,
}

/// A weight (a, b) for G₂; both even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G2Weight {
    pub a: i64,
    pub b: i64,
}
