//! Maximal and prime-level Eichler orders.

use crate::algebra::{primes_of, q, quat, Quat, QuaternionAlgebra};
use crate::lattice::{trace_form_det, Lattice};
use crate::{BrandtError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionOrder {
    pub lattice: Lattice,
    pub level: u64,
}

/// Reduced discriminant √|det trd(e_i e_j)|, when integral.
pub fn reduced_disc(alg: &QuaternionAlgebra, l: &Lattice) -> Option<u64> {
    let d = trace_form_det(alg, l);
    if !d.is_integer() {
        return None;
    }
    let n = d.to_integer();
    let r = n.sqrt();
    (&r * &r == n).then(|| r.to_u64()).flatten()
}

fn all_integral(alg: &QuaternionAlgebra, l: &Lattice) -> bool {
    l.basis.iter().all(|x| alg.is_integral(x))
}

/// The ring generated by `o` and `x`, if it is an order of reduced
/// discriminant at least `floor`.
fn ring_closure(alg: &QuaternionAlgebra, o: &Lattice, x: &Quat, floor: u64) -> Option<Lattice> {
    let mut l = Lattice::from_generators(&[o.basis.clone(), vec![x.clone()]].concat()).ok()?;
    loop {
        if !all_integral(alg, &l) {
            return None;
        }
        match reduced_disc(alg, &l) {
            Some(d) if d >= floor => {}
            _ => return None,
        }
        let next = l.sum(&l.product(alg, &l));
        if next == l {
            return Some(l);
        }
        l = next;
    }
}

impl QuaternionOrder {
    pub fn reduced_disc(&self, alg: &QuaternionAlgebra) -> Option<u64> {
        reduced_disc(alg, &self.lattice)
    }

    pub fn is_order(&self, alg: &QuaternionAlgebra) -> bool {
        let l = &self.lattice;
        l.contains(&crate::algebra::one()) && all_integral(alg, l) && l.contains_lattice(&l.product(alg, l))
    }

    /// Integer Gram of 2·nrd on the basis.
    pub fn gram(&self, alg: &QuaternionAlgebra) -> [[i64; 4]; 4] {
        self.lattice.gram(alg, &q(1)).expect("orders are integral")
    }
}

/// A maximal order: ℤ⟨1, i, j, k⟩ enlarged by index-p steps x = (Σ c_i e_i)/p
/// until the reduced discriminant is D.
pub fn maximal_order(alg: &QuaternionAlgebra) -> Result<QuaternionOrder> {
    let mut o = Lattice::from_generators(&[quat([1, 0, 0, 0], 1), quat([0, 1, 0, 0], 1), quat([0, 0, 1, 0], 1), quat([0, 0, 0, 1], 1)])?;
    let d = alg.disc;
    'outer: loop {
        let disc = reduced_disc(alg, &o).ok_or_else(|| BrandtError::Order("non-integral discriminant".into()))?;
        if disc == d {
            break;
        }
        if disc % d != 0 {
            return Err(BrandtError::Order(format!("discriminant {disc} is not a multiple of {d}")));
        }
        for p in primes_of(disc / d) {
            let pi = p as i64;
            let total = pi.pow(4);
            for idx in 1..total {
                let c = [idx % pi, idx / pi % pi, idx / (pi * pi) % pi, idx / (pi * pi * pi)];
                let bp = BigRational::from_integer(BigInt::from(p));
                let mut x: Quat = crate::algebra::zero();
                for (ci, e) in c.iter().zip(&o.basis) {
                    for t in 0..4 {
                        x[t] += &e[t] * q(*ci) / &bp;
                    }
                }
                if o.contains(&x) || !alg.is_integral(&x) {
                    continue;
                }
                if let Some(bigger) = ring_closure(alg, &o, &x, d) {
                    o = bigger;
                    continue 'outer;
                }
            }
        }
        return Err(BrandtError::Order(format!("no enlargement of an order of discriminant {disc}")));
    }
    let out = QuaternionOrder { lattice: o, level: 1 };
    debug_assert!(out.is_order(alg));
    Ok(out)
}

/// A left O-ideal Oℓ + Oα of norm ℓ, for prime ℓ ∤ D.
pub fn ideal_of_norm(alg: &QuaternionAlgebra, o: &Lattice, ell: u64) -> Result<Lattice> {
    let l = ell as i64;
    let scaled = o.scale(&q(l));
    let target = o.det() * q(l * l);
    for idx in 1..l.pow(4) {
        let c = [idx % l, idx / l % l, idx / (l * l) % l, idx / (l * l * l)];
        let mut alpha: Quat = crate::algebra::zero();
        for (ci, e) in c.iter().zip(&o.basis) {
            for t in 0..4 {
                alpha[t] += &e[t] * q(*ci);
            }
        }
        if !(alg.nrd(&alpha) / q(l)).is_integer() {
            continue;
        }
        let gens: Vec<Quat> = o.basis.iter().map(|e| alg.mul(e, &alpha)).collect();
        let i = Lattice::from_generators(&[scaled.basis.clone(), gens].concat())?;
        if i.det() == target {
            return Ok(i);
        }
    }
    Err(BrandtError::Order(format!("no left ideal of norm {ell}")))
}

/// O ∩ O_R(I) for a left O-ideal I of prime norm ℓ: an Eichler order of
/// level ℓ.
pub fn eichler_order(alg: &QuaternionAlgebra, o: &QuaternionOrder, ell: u64) -> Result<QuaternionOrder> {
    if o.level != 1 {
        return Err(BrandtError::Input("Eichler orders are built from a maximal order".into()));
    }
    if !exactnum::factor::is_prime_u64(ell) {
        return Err(BrandtError::Input(format!("level {ell} is not prime")));
    }
    if alg.disc % ell == 0 {
        return Err(BrandtError::Input(format!("level {ell} divides the discriminant {}", alg.disc)));
    }
    let i = ideal_of_norm(alg, &o.lattice, ell)?;
    let e = o.lattice.intersect(&i.right_order(alg));
    let out = QuaternionOrder { lattice: e, level: ell };
    if out.reduced_disc(alg) != Some(alg.disc * ell) || !out.is_order(alg) {
        return Err(BrandtError::Order(format!("Eichler order check failed at level {ell}")));
    }
    Ok(out)
}
