//! Congruence modules of finite abelian groups H = ⊕ ℤ/n_i.
//!
//! X(ℤ) is the lattice of ℤ-valued functions on H, X_𝟙(ℤ) = ℤ𝟙 and X_0(ℤ)
//! the ℤ-valued functions in the span of the nontrivial characters. The
//! span is built from the rational characters (Galois-orbit sums of
//! characters, whose values are Ramanujan sums), and the cokernel of
//! X_𝟙(ℤ) ⊕ X_0(ℤ) ↪ X(ℤ) is read off a Smith normal form.

use crate::{HeckeError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub cyclic_orders: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(cyclic_orders: Vec<u64>) -> Result<Self> {
        if cyclic_orders.iter().any(|&n| n < 2) {
            return Err(HeckeError::Invalid("cyclic factors must have order ≥ 2".into()));
        }
        Ok(AbelianGroup { cyclic_orders })
    }

    pub fn order(&self) -> u64 {
        self.cyclic_orders.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.cyclic_orders.iter().fold(1, |a, &b| a.lcm(&b))
    }

    /// d_1 | d_2 | … with d_1 > 1.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let n = self.cyclic_orders.len();
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for (i, &c) in self.cyclic_orders.iter().enumerate() {
            m[i][i] = BigInt::from(c);
        }
        smith_diagonal(m).iter().filter(|d| !d.is_one()).map(|d| d.try_into().unwrap()).collect()
    }

    fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &n in &self.cyclic_orders {
            out = out.into_iter().flat_map(|v| (0..n).map(move |x| [v.clone(), vec![x]].concat())).collect();
        }
        out
    }
}

/// Every abelian group of the given order, as invariant factors.
pub fn groups_of_order(n: u64) -> Vec<AbelianGroup> {
    fn rec(rest: u64, prev: u64, acc: &mut Vec<u64>, out: &mut Vec<AbelianGroup>) {
        if rest == 1 {
            out.push(AbelianGroup { cyclic_orders: acc.clone() });
            return;
        }
        for d in (prev.max(2)..=rest).filter(|d| d % prev == 0 && rest % d == 0) {
            acc.push(d);
            rec(rest / d, d, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 1, &mut vec![], &mut out);
    out
}

fn mobius(mut n: u64) -> i64 {
    let mut r = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            r = -r;
        }
        d += 1;
    }
    if n > 1 {
        r = -r;
    }
    r
}

fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// c_m(s) = Σ_{(j,m)=1} ζ_m^{js} = μ(m/g) φ(m)/φ(m/g), g = gcd(m, s).
pub fn ramanujan_sum(m: u64, s: u64) -> i64 {
    let g = m.gcd(&s);
    mobius(m / g) * (totient(m) / totient(m / g)) as i64
}

/// The rational characters of H: one integer vector (indexed like the
/// elements) per Galois orbit of characters, the trivial one first.
pub fn rational_characters(h: &AbelianGroup) -> Vec<Vec<i64>> {
    let e = h.exponent();
    let elems = h.elements();
    let mut seen = vec![false; elems.len()];
    let index = |v: &[u64]| -> usize { v.iter().zip(&h.cyclic_orders).fold(0usize, |acc, (x, n)| acc * *n as usize + *x as usize) };
    let mut out = Vec::new();
    for (ai, a) in elems.iter().enumerate() {
        if seen[ai] {
            continue;
        }
        // χ_a(x) = exp(2πi Σ a_i x_i / n_i); its orbit is {χ_{ua} : u ∈ (ℤ/e)^×}
        for u in (1..=e).filter(|u| u.gcd(&e) == 1) {
            let b: Vec<u64> = a.iter().zip(&h.cyclic_orders).map(|(x, n)| x * u % n).collect();
            seen[index(&b)] = true;
        }
        let ord = a.iter().zip(&h.cyclic_orders).fold(1, |acc, (x, n)| acc.lcm(&(n / n.gcd(x))));
        let row = elems
            .iter()
            .map(|x| {
                let t = a.iter().zip(x).zip(&h.cyclic_orders).map(|((ai, xi), n)| ai * xi * (e / n)).sum::<u64>() % e;
                ramanujan_sum(ord, t / (e / ord))
            })
            .collect();
        out.push(row);
    }
    out
}

/// Nonzero diagonal of the Smith normal form.
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !m[i][j].is_zero() && best.map_or(true, |(a, b)| m[i][j].abs() < m[a][b].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { return diag };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            let piv = m[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t].div_floor(&piv);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &q * &m[t][j];
                        m[i][j] -= v;
                    }
                }
                clean &= m[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = m[t][j].div_floor(&piv);
                if !q.is_zero() {
                    for i in t..rows {
                        let v = &q * &m[i][t];
                        m[i][j] -= v;
                    }
                }
                clean &= m[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest; otherwise fold an offending row in
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&m[i][j] % &piv).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = m[i][j].clone();
                        m[t][j] += v;
                    }
                }
                None => {
                    diag.push(piv.abs());
                    break;
                }
            }
        }
    }
    diag
}

/// Invariant factors (> 1) of X(ℤ) / (X_𝟙(ℤ) ⊕ X_0(ℤ)).
pub fn congruence_module_invariants(h: &AbelianGroup) -> Result<Vec<u64>> {
    let chars = rational_characters(h);
    let n = h.order() as usize;
    let one = &chars[0];
    if one.iter().any(|&x| x != 1) {
        return Err(HeckeError::Invalid("trivial character is not first".into()));
    }
    // the nontrivial characters span 𝟙^⊥ over ℚ(ζ_e) (orthogonality and a
    // dimension count), so X_0(ℤ) = {φ ∈ ℤ^H : Σφ = 0}; the rational
    // characters are the Galois-stable part and must be ⊥ 𝟙 and independent
    if chars[1..].iter().any(|c| c.iter().sum::<i64>() != 0) {
        return Err(HeckeError::Invalid("rational character not orthogonal to 𝟙".into()));
    }
    let rat: Vec<Vec<BigInt>> = chars.iter().map(|c| c.iter().map(|&x| BigInt::from(x)).collect()).collect();
    if smith_diagonal(rat).len() != chars.len() {
        return Err(HeckeError::Invalid("rational characters are dependent".into()));
    }
    let mut gens: Vec<Vec<BigInt>> = vec![vec![BigInt::one(); n]];
    for i in 1..n {
        let mut v = vec![BigInt::zero(); n];
        v[0] = -BigInt::one();
        v[i] = BigInt::one();
        gens.push(v);
    }
    let d = smith_diagonal(gens);
    if d.len() != n {
        return Err(HeckeError::Invalid("X_𝟙 ⊕ X_0 does not have full rank".into()));
    }
    Ok(d.iter().filter(|x| !x.is_one()).map(|x| x.try_into().unwrap()).collect())
}
