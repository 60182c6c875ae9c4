//! Left ideal classes of an order by ℓ₀-neighbour search, certified by the
//! Eichler mass, and Brandt matrices by counting vectors of given norm.

use crate::algebra::{primes_of, q, Quat, QuaternionAlgebra};
use crate::lattice::Lattice;
use crate::order::QuaternionOrder;
use crate::theta::{count_norm, theta_series};
use crate::{BrandtError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::collections::VecDeque;

pub const MAX_DM: u64 = 2000;

#[derive(Clone, Debug)]
pub struct IdealClass {
    pub lattice: Lattice,
    pub norm: BigRational,
    /// Gram of 2·nrd/nrd(I) on the basis.
    pub gram: [[i64; 4]; 4],
    pub right_order: Lattice,
    /// |O_R(I)^×|.
    pub units: u64,
    pub fingerprint: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct ClassSet {
    pub alg: QuaternionAlgebra,
    pub order: QuaternionOrder,
    pub classes: Vec<IdealClass>,
    /// The neighbour prime used.
    pub ell0: u64,
}

/// (1/24) ∏_{p|D} (p−1) · M ∏_{p|M} (1 + 1/p).
pub fn eichler_mass(d: u64, m: u64) -> BigRational {
    let mut v = BigRational::new(1.into(), 24.into());
    for p in primes_of(d) {
        v *= q(p as i64 - 1);
    }
    let mut psi = BigRational::from_integer(BigInt::from(m));
    for p in primes_of(m) {
        psi *= BigRational::new(BigInt::from(p + 1), BigInt::from(p));
    }
    v * psi
}

fn fingerprint_bound(dm: u64) -> i64 {
    (4 * dm).min(64) as i64
}

fn make_class(alg: &QuaternionAlgebra, lattice: Lattice, dm: u64) -> Result<IdealClass> {
    let norm = lattice.norm(alg);
    let gram = lattice.gram(alg, &norm)?;
    let right_order = lattice.right_order(alg);
    let units = count_norm(&right_order.gram(alg, &q(1))?, 1);
    let fingerprint = theta_series(&gram, fingerprint_bound(dm));
    Ok(IdealClass { lattice, norm, gram, right_order, units, fingerprint })
}

fn combo(basis: &[Quat], c: &[i64; 4]) -> Quat {
    let mut x = crate::algebra::zero();
    for (ci, e) in c.iter().zip(basis) {
        for t in 0..4 {
            x[t] += &e[t] * q(*ci);
        }
    }
    x
}

/// The ℓ + 1 left O-ideals J ⊂ I with [I : J] = ℓ², ℓ ∤ disc(O).
pub fn neighbours(alg: &QuaternionAlgebra, o: &Lattice, i: &Lattice, ell: u64) -> Result<Vec<Lattice>> {
    let l = ell as i64;
    let li = i.scale(&q(l));
    let target = i.det() * q(l * l);
    let ni = i.norm(alg);
    let mut out: Vec<Lattice> = Vec::new();
    for idx in 1..l.pow(4) {
        let c = [idx % l, idx / l % l, idx / (l * l) % l, idx / (l * l * l)];
        let beta = combo(&i.basis, &c);
        if !(alg.nrd(&beta) / (&ni * q(l))).is_integer() {
            continue;
        }
        let gens: Vec<Quat> = o.basis.iter().map(|e| alg.mul(e, &beta)).collect();
        let j = Lattice::from_generators(&[li.basis.clone(), gens].concat())?;
        if j.det() == target && !out.contains(&j) {
            out.push(j);
        }
    }
    if out.len() as u64 != ell + 1 {
        return Err(BrandtError::Enumeration(format!("found {} neighbours at {ell}, expected {}", out.len(), ell + 1)));
    }
    Ok(out)
}

/// I⁻¹J = Ī J / nrd(I) with its norm form scaled by nrd(J)/nrd(I).
fn connecting_gram(alg: &QuaternionAlgebra, i: &IdealClass, j: &IdealClass) -> Result<[[i64; 4]; 4]> {
    let inv = i.lattice.conj(alg).scale(&(q(1) / &i.norm));
    let l = inv.product(alg, &j.lattice);
    l.gram(alg, &(&j.norm / &i.norm))
}

/// J = Iα for some α ∈ B^×, i.e. I⁻¹J has an element of norm nrd(J)/nrd(I).
pub fn equivalent(alg: &QuaternionAlgebra, i: &IdealClass, j: &IdealClass) -> Result<bool> {
    if i.fingerprint != j.fingerprint {
        return Ok(false);
    }
    Ok(count_norm(&connecting_gram(alg, i, j)?, 1) > 0)
}

/// All left ideal classes of `order`, found by breadth-first neighbour search
/// and stopped exactly when Σ 1/|O_R(I)^×| reaches the Eichler mass.
pub fn enumerate_ideal_classes(alg: &QuaternionAlgebra, order: &QuaternionOrder) -> Result<ClassSet> {
    let dm = alg.disc * order.level;
    if dm > MAX_DM {
        return Err(BrandtError::Input(format!("D·M = {dm} exceeds {MAX_DM}")));
    }
    let target = eichler_mass(alg.disc, order.level);
    let ell0 = (2..).find(|&p| exactnum::factor::is_prime_u64(p) && dm % p != 0).unwrap();
    let first = make_class(alg, order.lattice.clone(), dm)?;
    let mut found = BigRational::new(1.into(), BigInt::from(first.units));
    let mut classes = vec![first];
    let mut queue = VecDeque::from([0usize]);
    'search: while found < target {
        let Some(idx) = queue.pop_front() else { break };
        for j in neighbours(alg, &order.lattice, &classes[idx].lattice, ell0)? {
            let cand = make_class(alg, j, dm)?;
            let mut new = true;
            for c in &classes {
                if equivalent(alg, c, &cand)? {
                    new = false;
                    break;
                }
            }
            if new {
                found += BigRational::new(1.into(), BigInt::from(cand.units));
                classes.push(cand);
                queue.push_back(classes.len() - 1);
                if found >= target {
                    break 'search;
                }
            }
        }
    }
    if found != target {
        return Err(BrandtError::Enumeration(format!("class mass {found} ≠ Eichler mass {target}")));
    }
    Ok(ClassSet { alg: alg.clone(), order: order.clone(), classes, ell0 })
}

impl ClassSet {
    pub fn h(&self) -> usize {
        self.classes.len()
    }

    pub fn weights(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.units).collect()
    }

    pub fn mass(&self) -> BigRational {
        self.classes.iter().fold(BigRational::zero(), |acc, c| acc + BigRational::new(1.into(), BigInt::from(c.units)))
    }

    pub fn level(&self) -> u64 {
        self.alg.disc * self.order.level
    }
}

/// T_q[i][j] = #{x ∈ I_j⁻¹ I_i : nrd(x) = q·nrd(I_i)/nrd(I_j)} / |O_R(I_j)^×|,
/// for which every row sums to q + 1.
pub fn brandt_matrix(set: &ClassSet, qq: u64) -> Result<Vec<Vec<i64>>> {
    if !exactnum::factor::is_prime_u64(qq) {
        return Err(BrandtError::Input(format!("{qq} is not prime")));
    }
    if set.level() % qq == 0 {
        return Err(BrandtError::Input(format!("{qq} divides D·M = {}", set.level())));
    }
    let h = set.h();
    let mut t = vec![vec![0i64; h]; h];
    for i in 0..h {
        for j in 0..h {
            let g = connecting_gram(&set.alg, &set.classes[j], &set.classes[i])?;
            let n = count_norm(&g, qq as i64);
            let u = set.classes[j].units;
            if n % u != 0 {
                return Err(BrandtError::Enumeration(format!("count {n} not divisible by {u}")));
            }
            t[i][j] = (n / u) as i64;
        }
    }
    for (i, row) in t.iter().enumerate() {
        let s: i64 = row.iter().sum();
        if s != qq as i64 + 1 {
            return Err(BrandtError::Enumeration(format!("row {i} of T_{qq} sums to {s}")));
        }
    }
    Ok(t)
}

/// Gram of an ideal after a change of basis by a unimodular U (rows of U
/// express the new basis), for invariance checks.
pub fn transform_gram(g: &[[i64; 4]; 4], u: &[[i64; 4]; 4]) -> [[i64; 4]; 4] {
    let mut out = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut s = 0;
            for a in 0..4 {
                for b in 0..4 {
                    s += u[i][a] * g[a][b] * u[j][b];
                }
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn class_norm_u64(c: &IdealClass) -> Option<u64> {
    c.norm.is_integer().then(|| c.norm.to_integer().to_u64()).flatten()
}
