use crate::{HeckeError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Operator {
    pub name: String,
    pub matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_degree: Option<i64>,
}

/// Functions on a finite weighted class set Cl = {x_1, …, x_h} with a
/// commuting family of integer Hecke matrices. T acts on column vectors:
/// (Tφ)(x_i) = Σ_j T[i][j] φ(x_j).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedClassSpace {
    pub weights: Vec<u64>,
    pub operators: Vec<Operator>,
    #[serde(default)]
    pub self_adjoint: bool,
}

impl WeightedClassSpace {
    pub fn new(weights: Vec<u64>, operators: Vec<Operator>, self_adjoint: bool) -> Result<Self> {
        let s = WeightedClassSpace { weights, operators, self_adjoint };
        s.validate()?;
        Ok(s)
    }

    pub fn h(&self) -> usize {
        self.weights.len()
    }

    /// Shapes, positive weights, pairwise commutation and, when flagged,
    /// w_j T[i][j] = w_i T[j][i].
    pub fn validate(&self) -> Result<()> {
        let h = self.h();
        if self.weights.iter().any(|&w| w == 0) {
            return Err(HeckeError::Invalid("weights must be positive".into()));
        }
        for op in &self.operators {
            if op.matrix.len() != h || op.matrix.iter().any(|r| r.len() != h) {
                return Err(HeckeError::Invalid(format!("operator {} is not {h}×{h}", op.name)));
            }
        }
        for (i, a) in self.operators.iter().enumerate() {
            for b in &self.operators[i + 1..] {
                if int_mul(&a.matrix, &b.matrix) != int_mul(&b.matrix, &a.matrix) {
                    return Err(HeckeError::NonCommuting(a.name.clone(), b.name.clone()));
                }
            }
        }
        if self.self_adjoint {
            for op in &self.operators {
                for i in 0..h {
                    for j in 0..h {
                        let l = self.weights[j] as i128 * op.matrix[i][j] as i128;
                        let r = self.weights[i] as i128 * op.matrix[j][i] as i128;
                        if l != r {
                            return Err(HeckeError::Invalid(format!("{} is not self-adjoint at ({i},{j})", op.name)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn operator(&self, name: &str) -> Option<&Operator> {
        self.operators.iter().find(|o| o.name == name)
    }
}

pub(crate) fn int_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] as i128 * b[k][j] as i128).sum()).collect())
        .collect()
}

/// m = Σ 1/w_i.
pub fn mass_of(space: &WeightedClassSpace) -> BigRational {
    space.weights.iter().fold(BigRational::zero(), |acc, &w| acc + BigRational::new(BigInt::one(), BigInt::from(w)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub name: String,
    pub degree: i64,
}

/// Checks T·𝟙 = deg(T)·𝟙 and, where declared, that the degree agrees.
pub fn degree_check(space: &WeightedClassSpace) -> Result<Vec<DegreeReport>> {
    let mut out = Vec::new();
    for op in &space.operators {
        let sums: Vec<i64> = op.matrix.iter().map(|r| r.iter().sum()).collect();
        let Some(&d) = sums.first() else {
            out.push(DegreeReport { name: op.name.clone(), degree: op.declared_degree.unwrap_or(0) });
            continue;
        };
        if sums.iter().any(|&s| s != d) {
            return Err(HeckeError::RowSums(op.name.clone(), sums));
        }
        if let Some(dd) = op.declared_degree {
            if dd != d {
                return Err(HeckeError::Invalid(format!("{}: declared degree {dd}, row sums {d}", op.name)));
            }
        }
        out.push(DegreeReport { name: op.name.clone(), degree: d });
    }
    Ok(out)
}

pub(crate) fn valuation(n: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    if n.is_zero() {
        return 0;
    }
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// A ℤ-valued φ′ with φ′ ≡ 1 mod p^r entrywise (r = v_p(m)) and
/// Σ φ′_i / w_i = 0, from an integer solution of Σ a_i w_i* = −w·m/p^r
/// where w = lcm(w_i) and w_i* = w / w_i.
pub fn eis_vector_construct(space: &WeightedClassSpace, p: u64) -> Result<Vec<BigInt>> {
    let m = mass_of(space);
    let r = valuation(m.numer(), p);
    if r == 0 {
        return Err(HeckeError::NotDividing(p, m.to_string()));
    }
    let w = space.weights.iter().fold(BigInt::one(), |acc, &x| acc.lcm(&BigInt::from(x)));
    let stars: Vec<BigInt> = space.weights.iter().map(|&x| &w / BigInt::from(x)).collect();
    let pr = BigInt::from(p).pow(r);
    let wm = (&m * BigRational::from_integer(w.clone())).to_integer();
    let target = -(wm / &pr);
    // Σ c_i w_i* = g by successive extended gcds
    let mut g = BigInt::zero();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(stars.len());
    for s in &stars {
        let e = g.extended_gcd(s);
        for c in coeffs.iter_mut() {
            *c = &*c * &e.x;
        }
        coeffs.push(e.y);
        g = e.gcd;
    }
    debug_assert!(g.is_one());
    let phi: Vec<BigInt> = coeffs.iter().map(|c| BigInt::one() + &pr * c * &target).collect();
    // postconditions, exactly
    let orth = phi
        .iter()
        .zip(&space.weights)
        .fold(BigRational::zero(), |acc, (f, &x)| acc + BigRational::new(f.clone(), BigInt::from(x)));
    if !orth.is_zero() || phi.iter().any(|f| !((f - BigInt::one()) % &pr).is_zero()) {
        return Err(HeckeError::Invalid("Eisenstein vector postcondition failed".into()));
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(weights: Vec<u64>) -> WeightedClassSpace {
        WeightedClassSpace { weights, operators: vec![], self_adjoint: false }
    }

    #[test]
    fn masses() {
        assert_eq!(mass_of(&sp(vec![4, 6])).to_string(), "5/12");
        assert_eq!(mass_of(&sp(vec![2, 3])).to_string(), "5/6");
        assert_eq!(mass_of(&sp(vec![1])).to_string(), "1");
    }

    #[test]
    fn eis_vectors() {
        let v = eis_vector_construct(&sp(vec![2, 3]), 5).unwrap();
        assert_eq!(v.len(), 2);
        assert!(eis_vector_construct(&sp(vec![4, 6]), 7).is_err());
        let v = eis_vector_construct(&sp(vec![1, 1]), 2).unwrap();
        assert_eq!(&v[0] + &v[1], BigInt::zero());
    }

    #[test]
    fn row_sums() {
        let mut s = sp(vec![1, 1]);
        s.operators.push(Operator { name: "I".into(), matrix: vec![vec![1, 0], vec![0, 1]], declared_degree: None });
        assert_eq!(degree_check(&s).unwrap()[0].degree, 1);
        s.operators.push(Operator { name: "bad".into(), matrix: vec![vec![1, 1], vec![0, 1]], declared_degree: None });
        assert!(degree_check(&s).is_err());
    }
}
