//! Full-rank ℤ-lattices in B ≅ ℚ⁴, kept in (rational) Hermite normal form so
//! that equal lattices have equal bases.

use crate::algebra::{q, Quat, QuaternionAlgebra};
use crate::{BrandtError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    pub basis: Vec<Quat>,
}

/// Row HNF of an integer matrix with 4 columns and rank 4: upper
/// triangular, positive pivots, entries above a pivot reduced into [0, pivot).
fn hnf(mut m: Vec<[BigInt; 4]>) -> Option<Vec<[BigInt; 4]>> {
    for c in 0..4 {
        loop {
            let piv = (c..m.len()).filter(|&i| !m[i][c].is_zero()).min_by(|&i, &j| m[i][c].abs().cmp(&m[j][c].abs()))?;
            m.swap(c, piv);
            let mut done = true;
            for i in c + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = m[i][c].div_floor(&m[c][c]);
                for k in c..4 {
                    let t = &f * &m[c][k];
                    m[i][k] -= t;
                }
                done &= m[i][c].is_zero();
            }
            if done {
                break;
            }
        }
        if m[c][c].is_negative() {
            for k in c..4 {
                m[c][k] = -&m[c][k];
            }
        }
        for i in 0..c {
            let f = m[i][c].div_floor(&m[c][c]);
            if !f.is_zero() {
                for k in c..4 {
                    let t = &f * &m[c][k];
                    m[i][k] -= t;
                }
            }
        }
    }
    m.truncate(4);
    Some(m)
}

impl Lattice {
    pub fn from_generators(gens: &[Quat]) -> Result<Lattice> {
        let den = gens.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let rows: Vec<[BigInt; 4]> = gens.iter().map(|g| g.clone().map(|x| (x * BigRational::from_integer(den.clone())).to_integer())).collect();
        let h = hnf(rows).ok_or_else(|| BrandtError::Lattice("generators do not span a full-rank lattice".into()))?;
        let d = BigRational::from_integer(den);
        Ok(Lattice { basis: h.into_iter().map(|r| r.map(|x| BigRational::from_integer(x) / &d)).collect() })
    }

    /// |det| of the basis matrix (the covolume in 1, i, j, k coordinates).
    pub fn det(&self) -> BigRational {
        det4(&self.basis).abs()
    }

    /// Coordinates of x in the basis (upper triangular: back substitution).
    pub fn coords(&self, x: &Quat) -> [BigRational; 4] {
        let mut r = x.clone();
        let mut c: [BigRational; 4] = [q(0), q(0), q(0), q(0)];
        for i in 0..4 {
            c[i] = &r[i] / &self.basis[i][i];
            for k in i..4 {
                let t = &c[i] * &self.basis[i][k];
                r[k] -= t;
            }
        }
        c
    }

    pub fn contains(&self, x: &Quat) -> bool {
        self.coords(x).iter().all(|c| c.is_integer())
    }

    pub fn contains_lattice(&self, o: &Lattice) -> bool {
        o.basis.iter().all(|x| self.contains(x))
    }

    pub fn scale(&self, c: &BigRational) -> Lattice {
        Lattice::from_generators(&self.basis.iter().map(|x| x.clone().map(|y| y * c)).collect::<Vec<_>>()).unwrap()
    }

    pub fn sum(&self, o: &Lattice) -> Lattice {
        Lattice::from_generators(&[self.basis.clone(), o.basis.clone()].concat()).unwrap()
    }

    /// Dual with respect to the coordinate dot product.
    pub fn dual(&self) -> Lattice {
        let inv = inverse4(&self.basis);
        // rows of (B^{-1})ᵀ
        let rows: Vec<Quat> = (0..4).map(|i| [inv[0][i].clone(), inv[1][i].clone(), inv[2][i].clone(), inv[3][i].clone()]).collect();
        Lattice::from_generators(&rows).unwrap()
    }

    pub fn intersect(&self, o: &Lattice) -> Lattice {
        self.dual().sum(&o.dual()).dual()
    }

    /// α·L.
    pub fn left_mul(&self, alg: &QuaternionAlgebra, alpha: &Quat) -> Lattice {
        Lattice::from_generators(&self.basis.iter().map(|x| alg.mul(alpha, x)).collect::<Vec<_>>()).unwrap()
    }

    /// L·α.
    pub fn right_mul(&self, alg: &QuaternionAlgebra, alpha: &Quat) -> Lattice {
        Lattice::from_generators(&self.basis.iter().map(|x| alg.mul(x, alpha)).collect::<Vec<_>>()).unwrap()
    }

    /// The lattice generated by all products xy, x ∈ self, y ∈ o.
    pub fn product(&self, alg: &QuaternionAlgebra, o: &Lattice) -> Lattice {
        let gens: Vec<Quat> = self.basis.iter().flat_map(|x| o.basis.iter().map(move |y| alg.mul(x, y))).collect();
        Lattice::from_generators(&gens).unwrap()
    }

    pub fn conj(&self, alg: &QuaternionAlgebra) -> Lattice {
        Lattice::from_generators(&self.basis.iter().map(|x| alg.conj(x)).collect::<Vec<_>>()).unwrap()
    }

    /// {x : L x ⊂ L}.
    pub fn right_order(&self, alg: &QuaternionAlgebra) -> Lattice {
        let mut acc: Option<Lattice> = None;
        for e in &self.basis {
            let l = self.left_mul(alg, &alg.inv(e).expect("nonzero basis vector"));
            acc = Some(match acc {
                None => l,
                Some(a) => a.intersect(&l),
            });
        }
        acc.unwrap()
    }

    /// {x : x L ⊂ L}.
    pub fn left_order(&self, alg: &QuaternionAlgebra) -> Lattice {
        let mut acc: Option<Lattice> = None;
        for e in &self.basis {
            let l = self.right_mul(alg, &alg.inv(e).expect("nonzero basis vector"));
            acc = Some(match acc {
                None => l,
                Some(a) => a.intersect(&l),
            });
        }
        acc.unwrap()
    }

    /// gcd of the norm form's values: gcd of nrd(e_i) and trd(e_i ē_j).
    pub fn norm(&self, alg: &QuaternionAlgebra) -> BigRational {
        let mut vals = Vec::new();
        for (i, x) in self.basis.iter().enumerate() {
            vals.push(alg.nrd(x));
            for y in &self.basis[i + 1..] {
                vals.push(alg.trd(&alg.mul(x, &alg.conj(y))));
            }
        }
        rational_gcd(&vals)
    }

    /// Integer Gram matrix of x ↦ 2·nrd(x)/scale, i.e. entries
    /// trd(e_i ē_j)/scale; errors unless integral.
    pub fn gram(&self, alg: &QuaternionAlgebra, scale: &BigRational) -> Result<[[i64; 4]; 4]> {
        let mut g = [[0i64; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let v = alg.trd(&alg.mul(&self.basis[i], &alg.conj(&self.basis[j]))) / scale;
                if !v.is_integer() {
                    return Err(BrandtError::Lattice("norm form is not integral at this scale".into()));
                }
                g[i][j] = v.to_integer().try_into().map_err(|_| BrandtError::Lattice("Gram entry overflow".into()))?;
            }
        }
        Ok(g)
    }
}

pub fn rational_gcd(vals: &[BigRational]) -> BigRational {
    let den = vals.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let g = vals.iter().fold(BigInt::zero(), |acc, x| acc.gcd(&(x * BigRational::from_integer(den.clone())).to_integer()));
    BigRational::new(g, den)
}

fn det4(m: &[Quat]) -> BigRational {
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|r| r.to_vec()).collect();
    let mut det = q(1);
    for c in 0..4 {
        let Some(p) = (c..4).find(|&i| !a[i][c].is_zero()) else { return q(0) };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..4 {
            let f = &a[i][c] / &a[c][c];
            for k in c..4 {
                let t = &f * &a[c][k];
                a[i][k] -= t;
            }
        }
    }
    det
}

fn inverse4(m: &[Quat]) -> Vec<Vec<BigRational>> {
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|r| r.to_vec()).collect();
    let mut inv: Vec<Vec<BigRational>> = (0..4).map(|i| (0..4).map(|j| q((i == j) as i64)).collect()).collect();
    for c in 0..4 {
        let p = (c..4).find(|&i| !a[i][c].is_zero()).expect("singular basis");
        a.swap(p, c);
        inv.swap(p, c);
        let f = a[c][c].clone();
        for k in 0..4 {
            a[c][k] = &a[c][k] / &f;
            inv[c][k] = &inv[c][k] / &f;
        }
        for i in 0..4 {
            if i != c && !a[i][c].is_zero() {
                let g = a[i][c].clone();
                for k in 0..4 {
                    let t = &g * &a[c][k];
                    a[i][k] -= t;
                    let t = &g * &inv[c][k];
                    inv[i][k] -= t;
                }
            }
        }
    }
    inv
}

/// |det(trd(e_i e_j))|; for an order this is the square of its reduced
/// discriminant.
pub fn trace_form_det(alg: &QuaternionAlgebra, l: &Lattice) -> BigRational {
    let m: Vec<Quat> = (0..4)
        .map(|i| {
            let r: Vec<BigRational> = (0..4).map(|j| alg.trd(&alg.mul(&l.basis[i], &l.basis[j]))).collect();
            [r[0].clone(), r[1].clone(), r[2].clone(), r[3].clone()]
        })
        .collect();
    det4(&m).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{construct_algebra, quat};

    #[test]
    fn canonical_forms() {
        let a = Lattice::from_generators(&[quat([1, 0, 0, 0], 1), quat([0, 1, 0, 0], 1), quat([0, 0, 1, 0], 1), quat([1, 1, 1, 1], 2)]).unwrap();
        let b = Lattice::from_generators(&[quat([1, 1, 1, 1], 2), quat([0, 1, 0, 0], 1), quat([-1, -1, 1, -1], 2), quat([0, 0, 1, 0], 1), quat([3, 0, 0, 0], 1), quat([1, 0, 0, 0], 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.det(), BigRational::new(1.into(), 2.into()));
        assert!(a.contains(&quat([1, -1, 1, 1], 2)));
        assert!(!a.contains(&quat([1, 0, 0, 0], 2)));
        let z = Lattice::from_generators(&[quat([1, 0, 0, 0], 1), quat([0, 1, 0, 0], 1), quat([0, 0, 1, 0], 1), quat([0, 0, 0, 1], 1)]).unwrap();
        assert_eq!(a.intersect(&z), z);
        assert_eq!(a.sum(&z), a);
        assert_eq!(z.dual(), z);
    }

    #[test]
    fn hurwitz_orders() {
        let alg = construct_algebra(2).unwrap();
        let h = Lattice::from_generators(&[quat([1, 0, 0, 0], 1), quat([0, 1, 0, 0], 1), quat([0, 0, 1, 0], 1), quat([1, 1, 1, 1], 2)]).unwrap();
        assert_eq!(h.right_order(&alg), h);
        assert_eq!(h.left_order(&alg), h);
        assert_eq!(trace_form_det(&alg, &h), q(4));
        assert_eq!(h.norm(&alg), q(1));
    }
}
