//! Simultaneous eigensystems of a commuting integer family, mod p.
//!
//! The space F_p^h is first cut into primary components (by a seeded random
//! element of the algebra, then by every operator), each component is
//! base-changed to the field generated by its eigenvalues, and the joint
//! generalized eigenspaces there are peeled off one operator at a time.
//! Systems are reported up to Frobenius, by their least conjugate, so the
//! output does not depend on the seed.

use crate::linalg::{self, Mat};
use crate::space::{degree_check, mass_of, valuation, WeightedClassSpace};
use crate::{HeckeError, Result};
use exactnum::ff::poly::{self, Poly};
use exactnum::ff::MAX_K;
use exactnum::{Fe, Gf};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EigensystemModP {
    pub p: u64,
    /// Degree of the field generated by the eigenvalues.
    pub k: usize,
    /// Operator name and eigenvalue, as coefficients in the fixed basis of
    /// `Gf::new(p, k)`.
    pub eigenvalues: Vec<(String, Vec<u64>)>,
    /// Dimension of the joint generalized eigenspace over F_{p^k}.
    pub multiplicity: usize,
    /// v_p(mass), attached to reported Eisenstein congruences.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
}

impl EigensystemModP {
    pub fn field(&self) -> Gf {
        Gf::new(self.p, self.k).expect("validated at construction")
    }

    pub fn value(&self, name: &str) -> Option<Fe> {
        let gf = self.field();
        self.eigenvalues.iter().find(|(n, _)| n == name).map(|(_, c)| gf.from_coeffs(c))
    }

    /// Eigenvalues as printable field elements.
    pub fn display(&self) -> Vec<(String, String)> {
        let gf = self.field();
        self.eigenvalues.iter().map(|(n, c)| (n.clone(), gf.fmt(&gf.from_coeffs(c)))).collect()
    }
}

fn embed(from: &Gf, to: &Gf, x: &Fe) -> Fe {
    to.from_u64(from.to_prime(x).expect("prime-field element"))
}

fn embed_poly(from: &Gf, to: &Gf, f: &Poly) -> Poly {
    f.iter().map(|c| embed(from, to, c)).collect()
}

/// Distinct monic irreducible factors over F_p of f, found as minimal
/// polynomials of its roots in F_{p^d}, d ≤ 12.
pub fn irreducible_factors(fp: &Gf, f: &Poly, seed: u64) -> Result<Vec<Poly>> {
    let mut rest = poly::monic(fp, f);
    let mut out: Vec<Poly> = Vec::new();
    for d in 1..=MAX_K {
        if poly::degree(&rest).unwrap_or(0) == 0 {
            break;
        }
        if poly::degree(&rest).unwrap() < d {
            break;
        }
        let ext = Gf::new(fp.p(), d)?;
        let fe = embed_poly(fp, &ext, &rest);
        for r in poly::roots(&ext, &fe, seed)? {
            if ext.degree_of(&r) != d {
                continue;
            }
            let mut mp: Poly = vec![ext.one()];
            let mut c = r;
            for _ in 0..d {
                mp = poly::mul(&ext, &mp, &vec![ext.neg(&c), ext.one()]);
                c = ext.frobenius(&c);
            }
            let g: Poly = mp.iter().map(|c| fp.from_u64(ext.to_prime(c).expect("Frobenius-stable"))).collect();
            if !out.contains(&g) {
                out.push(g);
            }
        }
        for g in &out {
            loop {
                let (q, r) = poly::divrem(fp, &rest, g);
                if !r.iter().all(|c| fp.is_zero(c)) || poly::degree(&rest).unwrap_or(0) == 0 {
                    break;
                }
                rest = q;
            }
        }
    }
    if poly::degree(&rest).unwrap_or(0) > 0 {
        return Err(HeckeError::Split(format!(
            "characteristic polynomial has an irreducible factor of degree > {MAX_K} over F_{}",
            fp.p()
        )));
    }
    out.sort();
    Ok(out)
}

fn split_by(fp: &Gf, op: &Mat, comps: Vec<Vec<Vec<Fe>>>, seed: u64) -> Result<Vec<Vec<Vec<Fe>>>> {
    let mut out = Vec::new();
    for w in comps {
        let m = linalg::restrict(fp, op, &w);
        let f = linalg::charpoly(fp, &m);
        let factors = irreducible_factors(fp, &f, seed)?;
        if factors.len() <= 1 {
            out.push(w);
            continue;
        }
        let mut total = 0;
        for g in &factors {
            let n = linalg::pow(fp, &linalg::eval_poly(fp, g, &m), w.len());
            let ker = linalg::nullspace(fp, &n, w.len());
            total += ker.len();
            out.push(ker.iter().map(|x| linalg::combine(fp, &w, x)).collect());
        }
        if total != w.len() {
            return Err(HeckeError::Split("primary decomposition lost dimension".into()));
        }
    }
    Ok(out)
}

/// Joint generalized eigenspaces inside `u` (a basis of a subspace of
/// ext^w stable under all `ops`), for operators from index `i` on.
fn peel(ext: &Gf, ops: &[Mat], i: usize, u: Vec<Vec<Fe>>, prefix: &mut Vec<Fe>, out: &mut Vec<(Vec<Fe>, usize)>, seed: u64) -> Result<()> {
    if i == ops.len() {
        out.push((prefix.clone(), u.len()));
        return Ok(());
    }
    let r = linalg::restrict(ext, &ops[i], &u);
    let f = linalg::charpoly(ext, &r);
    let roots = poly::roots(ext, &f, seed)?;
    let mut seen = 0;
    for lambda in roots {
        let n = linalg::pow(ext, &linalg::shift(ext, &r, &lambda), u.len());
        let ker = linalg::nullspace(ext, &n, u.len());
        seen += ker.len();
        let sub: Vec<Vec<Fe>> = ker.iter().map(|x| linalg::combine(ext, &u, x)).collect();
        prefix.push(lambda);
        peel(ext, ops, i + 1, sub, prefix, out, seed)?;
        prefix.pop();
    }
    if seen != u.len() {
        return Err(HeckeError::Split("eigenvalues outside the chosen extension".into()));
    }
    Ok(())
}

pub fn modp_eigensystems(space: &WeightedClassSpace, p: u64, max_degree: usize) -> Result<Vec<EigensystemModP>> {
    modp_eigensystems_seeded(space, p, max_degree, DEFAULT_SEED)
}

pub fn modp_eigensystems_seeded(space: &WeightedClassSpace, p: u64, max_degree: usize, seed: u64) -> Result<Vec<EigensystemModP>> {
    let fp = Gf::prime(p)?;
    let h = space.h();
    if h == 0 {
        return Ok(vec![]);
    }
    let mats: Vec<Mat> = space.operators.iter().map(|o| linalg::from_int(&fp, &o.matrix)).collect();
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            if linalg::mul(&fp, a, b) != linalg::mul(&fp, b, a) {
                return Err(HeckeError::Invalid("operators do not commute mod p".into()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut comb = vec![vec![fp.zero(); h]; h];
    for m in &mats {
        let c = fp.from_u64(rng.gen_range(0..p));
        for (row, mrow) in comb.iter_mut().zip(m) {
            for (x, y) in row.iter_mut().zip(mrow) {
                *x = fp.add(x, &fp.mul(&c, y));
            }
        }
    }
    let mut comps = vec![linalg::identity(&fp, h)];
    comps = split_by(&fp, &comb, comps, seed)?;
    for m in &mats {
        comps = split_by(&fp, m, comps, seed)?;
    }

    let mut systems = Vec::new();
    for w in comps {
        let restricted: Vec<Mat> = mats.iter().map(|m| linalg::restrict(&fp, m, &w)).collect();
        let mut k = 1usize;
        for r in &restricted {
            let f = linalg::charpoly(&fp, r);
            let fs = irreducible_factors(&fp, &f, seed)?;
            for g in fs {
                k = k.lcm(&poly::degree(&g).unwrap());
            }
        }
        if k > max_degree {
            return Err(HeckeError::Split(format!("eigenvalues need F_{{{p}^{k}}}, beyond the allowed degree {max_degree}")));
        }
        let ext = Gf::new(p, k)?;
        let ops: Vec<Mat> = restricted.iter().map(|r| r.iter().map(|row| row.iter().map(|x| embed(&fp, &ext, x)).collect()).collect()).collect();
        let mut found = Vec::new();
        peel(&ext, &ops, 0, linalg::identity(&ext, w.len()), &mut Vec::new(), &mut found, seed)?;
        // group into Frobenius orbits, keyed by the least conjugate
        let mut canon: Vec<(Vec<Fe>, usize)> = Vec::new();
        for (sys, dim) in found {
            let mut best = sys.clone();
            let mut c = sys;
            for _ in 1..k {
                c = c.iter().map(|x| ext.frobenius(x)).collect();
                best = best.min(c.clone());
            }
            match canon.iter().find(|(s, _)| *s == best) {
                Some((_, d)) if *d != dim => return Err(HeckeError::Split("conjugate systems disagree in dimension".into())),
                Some(_) => {}
                None => canon.push((best, dim)),
            }
        }
        let accounted: usize = canon.iter().map(|(_, d)| d * k).sum();
        if accounted != w.len() {
            return Err(HeckeError::Split("systems do not exhaust a primary component".into()));
        }
        for (sys, dim) in canon {
            systems.push(EigensystemModP {
                p,
                k,
                eigenvalues: space.operators.iter().zip(&sys).map(|(o, x)| (o.name.clone(), x.coeffs(k).to_vec())).collect(),
                multiplicity: dim,
                depth: None,
            });
        }
    }
    systems.sort();
    Ok(systems)
}

/// Systems other than the one carried by 𝟙 that agree with the degree
/// character mod p. The degree system itself is located by T𝟙 = deg(T)𝟙;
/// any generalized multiplicity beyond one is an Eisenstein congruence.
pub fn detect_eis_congruences(space: &WeightedClassSpace, p: u64) -> Result<Vec<EigensystemModP>> {
    let degrees = degree_check(space)?;
    let fp = Gf::prime(p)?;
    let target: Vec<(String, Vec<u64>)> = degrees.iter().map(|d| (d.name.clone(), fp.from_i64(d.degree).coeffs(1).to_vec())).collect();
    let systems = modp_eigensystems(space, p, MAX_K)?;
    let Some(trivial) = systems.iter().find(|s| s.k == 1 && s.eigenvalues == target) else {
        return Err(HeckeError::Split("𝟙 does not appear among the systems".into()));
    };
    if trivial.multiplicity < 2 {
        return Ok(vec![]);
    }
    let depth = valuation(mass_of(space).numer(), p);
    Ok(vec![EigensystemModP { multiplicity: trivial.multiplicity - 1, depth: Some(depth), ..trivial.clone() }])
}
