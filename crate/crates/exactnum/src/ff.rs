//! Finite fields F_{p^k} (k ≤ 12, p < 2^32) as F_p[z]/(f) with a fixed,
//! deterministically chosen irreducible f, plus dense polynomials over them.

use crate::{NumError, Result};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::cmp::Ordering;

pub const MAX_K: usize = 12;

/// Field element: coefficients of 1, z, …, z^{k−1}. Ordering is
/// lexicographic from the constant term, which fixes the "designated"
/// choices below.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Fe {
    c: [u64; MAX_K],
}

impl Fe {
    pub fn coeffs(&self, k: usize) -> &[u64] {
        &self.c[..k]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf {
    p: u64,
    k: usize,
    /// f = z^k + modulus[k-1] z^{k-1} + … + modulus[0]
    modulus: Vec<u64>,
    q: BigUint,
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Gf {
    /// F_{p^k} with the least irreducible monic modulus, polynomials ordered
    /// by their coefficient vector read from z^{k−1} down to the constant.
    pub fn new(p: u64, k: usize) -> Result<Gf> {
        if p < 2 || !crate::factor::is_prime_u64(p) || p >= 1 << 32 {
            return Err(NumError::Field(format!("{p} is not a supported prime")));
        }
        if k == 0 || k > MAX_K {
            return Err(NumError::Field(format!("extension degree {k} outside 1..=12")));
        }
        let base = Gf { p, k: 1, modulus: vec![0], q: BigUint::from(p) };
        if k == 1 {
            return Ok(base);
        }
        let total = (p as u128).checked_pow(k as u32).ok_or_else(|| NumError::Field("search space too large".into()))?;
        for idx in 0..total {
            // digits: most significant digit is the z^{k-1} coefficient
            let mut m = vec![0u64; k];
            let mut t = idx;
            for c in m.iter_mut() {
                *c = (t % p as u128) as u64;
                t /= p as u128;
            }
            if m[0] == 0 {
                continue;
            }
            let mut f: Vec<Fe> = m.iter().map(|&c| base.from_u64(c)).collect();
            f.push(base.one());
            if poly::is_irreducible(&base, &f) {
                return Ok(Gf { p, k, modulus: m, q: num_traits::pow(BigUint::from(p), k) });
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn prime(p: u64) -> Result<Gf> {
        Gf::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn order(&self) -> &BigUint {
        &self.q
    }
    /// Coefficients of the monic modulus below the leading term.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> Fe {
        Fe { c: [0; MAX_K] }
    }
    pub fn one(&self) -> Fe {
        self.from_u64(1)
    }
    pub fn from_u64(&self, v: u64) -> Fe {
        let mut c = [0; MAX_K];
        c[0] = v % self.p;
        Fe { c }
    }
    pub fn from_i64(&self, v: i64) -> Fe {
        self.from_u64(v.rem_euclid(self.p as i64) as u64)
    }
    pub fn from_bigint(&self, v: &num_bigint::BigInt) -> Fe {
        let p = num_bigint::BigInt::from(self.p);
        self.from_u64(v.mod_floor(&p).to_u64().unwrap())
    }
    pub fn from_coeffs(&self, cs: &[u64]) -> Fe {
        let mut c = [0; MAX_K];
        for (i, &v) in cs.iter().enumerate().take(self.k) {
            c[i] = v % self.p;
        }
        Fe { c }
    }
    /// The generator z of the extension (equals 0-th power basis shift).
    pub fn gen(&self) -> Fe {
        if self.k == 1 {
            // z ≡ −modulus[0] = 0 for the degree-1 modulus z
            return self.zero();
        }
        self.from_coeffs(&[0, 1])
    }
    /// Element with base-p digits of `i` as coefficients; a bijection from
    /// 0..q onto the field.
    pub fn from_index(&self, mut i: u128) -> Fe {
        let mut c = [0; MAX_K];
        for slot in c.iter_mut().take(self.k) {
            *slot = (i % self.p as u128) as u64;
            i /= self.p as u128;
        }
        Fe { c }
    }
    pub fn size(&self) -> Option<u128> {
        self.q.to_u128()
    }
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        let n = self.size().expect("field too large to enumerate");
        (0..n).map(move |i| self.from_index(i))
    }

    pub fn is_zero(&self, a: &Fe) -> bool {
        a.c.iter().all(|&x| x == 0)
    }
    /// Whether `a` lies in the prime field.
    pub fn in_prime_field(&self, a: &Fe) -> bool {
        a.c[1..].iter().all(|&x| x == 0)
    }
    pub fn to_prime(&self, a: &Fe) -> Option<u64> {
        self.in_prime_field(a).then_some(a.c[0])
    }

    pub fn add(&self, a: &Fe, b: &Fe) -> Fe {
        let mut c = [0; MAX_K];
        for i in 0..self.k {
            c[i] = addm(a.c[i], b.c[i], self.p);
        }
        Fe { c }
    }
    pub fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        let mut c = [0; MAX_K];
        for i in 0..self.k {
            c[i] = subm(a.c[i], b.c[i], self.p);
        }
        Fe { c }
    }
    pub fn neg(&self, a: &Fe) -> Fe {
        self.sub(&self.zero(), a)
    }
    pub fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        let p = self.p;
        let k = self.k;
        if k == 1 {
            return self.from_u64(mulm(a.c[0], b.c[0], p));
        }
        let mut t = [0u64; 2 * MAX_K];
        for i in 0..k {
            if a.c[i] == 0 {
                continue;
            }
            for j in 0..k {
                t[i + j] = addm(t[i + j], mulm(a.c[i], b.c[j], p), p);
            }
        }
        for d in (k..2 * k - 1).rev() {
            let top = t[d];
            if top == 0 {
                continue;
            }
            t[d] = 0;
            for i in 0..k {
                t[d - k + i] = subm(t[d - k + i], mulm(top, self.modulus[i], p), p);
            }
        }
        let mut c = [0; MAX_K];
        c[..k].copy_from_slice(&t[..k]);
        Fe { c }
    }
    pub fn scale(&self, a: &Fe, s: u64) -> Fe {
        let mut c = [0; MAX_K];
        for i in 0..self.k {
            c[i] = mulm(a.c[i], s % self.p, self.p);
        }
        Fe { c }
    }
    pub fn square(&self, a: &Fe) -> Fe {
        self.mul(a, a)
    }
    pub fn pow(&self, a: &Fe, e: &BigUint) -> Fe {
        let mut r = self.one();
        for i in (0..e.bits()).rev() {
            r = self.mul(&r, &r);
            if e.bit(i) {
                r = self.mul(&r, a);
            }
        }
        r
    }
    pub fn pow_u(&self, a: &Fe, mut e: u64) -> Fe {
        let mut r = self.one();
        let mut b = *a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }
    /// a^e for any integer e (a must be nonzero when e < 0).
    pub fn pow_i(&self, a: &Fe, e: i64) -> Result<Fe> {
        if e >= 0 {
            Ok(self.pow_u(a, e as u64))
        } else {
            let inv = self.inv(a).ok_or_else(|| NumError::Field("negative power of zero".into()))?;
            Ok(self.pow_u(&inv, e.unsigned_abs()))
        }
    }
    pub fn inv(&self, a: &Fe) -> Option<Fe> {
        if self.is_zero(a) {
            return None;
        }
        let e = &self.q - 2u32;
        Some(self.pow(a, &e))
    }
    pub fn div(&self, a: &Fe, b: &Fe) -> Option<Fe> {
        self.inv(b).map(|i| self.mul(a, &i))
    }
    pub fn frobenius(&self, a: &Fe) -> Fe {
        self.pow_u(a, self.p)
    }

    pub fn is_square(&self, a: &Fe) -> bool {
        if self.is_zero(a) || self.p == 2 {
            return true;
        }
        let e = (&self.q - 1u32) >> 1;
        self.pow(a, &e) == self.one()
    }

    /// Designated square root: of the two roots ±r, the smaller in the
    /// element ordering.
    pub fn sqrt(&self, a: &Fe) -> Option<Fe> {
        if self.is_zero(a) {
            return Some(self.zero());
        }
        if self.p == 2 {
            let e = &self.q >> 1;
            return Some(self.pow(a, &e));
        }
        if !self.is_square(a) {
            return None;
        }
        // Tonelli–Shanks
        let qm1 = &self.q - 1u32;
        let s = qm1.trailing_zeros().unwrap();
        let t = &qm1 >> s;
        let mut idx = 2u128;
        let z = loop {
            let c = self.from_index(idx);
            if !self.is_square(&c) {
                break c;
            }
            idx += 1;
        };
        let mut m = s;
        let mut c = self.pow(&z, &t);
        let mut tt = self.pow(a, &t);
        let mut r = self.pow(a, &((&t + 1u32) >> 1));
        while tt != self.one() {
            let mut i = 0;
            let mut t2 = tt;
            while t2 != self.one() {
                t2 = self.square(&t2);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.square(&b);
            }
            m = i;
            c = self.square(&b);
            tt = self.mul(&tt, &c);
            r = self.mul(&r, &b);
        }
        let nr = self.neg(&r);
        Some(if nr < r { nr } else { r })
    }

    /// Multiplicative order of a nonzero element, given that it divides `m`.
    pub fn has_order(&self, a: &Fe, m: u64) -> bool {
        if self.pow_u(a, m) != self.one() {
            return false;
        }
        for (l, _) in crate::factor::factor_u64(m) {
            if self.pow_u(a, m / l) == self.one() {
                return false;
            }
        }
        true
    }

    /// A designated primitive m-th root of unity: the first element, in
    /// index order, whose ((q−1)/m)-th power has exact order m.
    pub fn root_of_unity(&self, m: u64) -> Option<Fe> {
        if m == 0 {
            return None;
        }
        let qm1 = &self.q - 1u32;
        if !(&qm1 % m).is_zero() {
            return None;
        }
        if m == 1 {
            return Some(self.one());
        }
        let e = &qm1 / m;
        let mut idx = 1u128;
        loop {
            let x = self.from_index(idx);
            if !self.is_zero(&x) {
                let y = self.pow(&x, &e);
                if self.has_order(&y, m) {
                    return Some(y);
                }
            }
            idx += 1;
        }
    }

    /// Smallest e | k with a^{p^e} = a: the degree of the subfield
    /// generated by `a`.
    pub fn degree_of(&self, a: &Fe) -> usize {
        (1..=self.k)
            .filter(|e| self.k % e == 0)
            .find(|&e| {
                let mut x = *a;
                for _ in 0..e {
                    x = self.frobenius(&x);
                }
                x == *a
            })
            .unwrap()
    }

    pub fn fmt(&self, a: &Fe) -> String {
        if self.k == 1 {
            return a.c[0].to_string();
        }
        let terms: Vec<String> = (0..self.k)
            .rev()
            .filter(|&i| a.c[i] != 0)
            .map(|i| match i {
                0 => a.c[0].to_string(),
                1 => format!("{}z", a.c[1]),
                _ => format!("{}z^{}", a.c[i], i),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    pub fn cmp(&self, a: &Fe, b: &Fe) -> Ordering {
        a.cmp(b)
    }
}

/// Dense polynomials over a [`Gf`], coefficients from the constant term up.
pub mod poly {
    use super::*;

    pub type Poly = Vec<Fe>;

    pub fn trim(f: &mut Poly, gf: &Gf) {
        while f.last().is_some_and(|c| gf.is_zero(c)) {
            f.pop();
        }
    }

    pub fn degree(f: &Poly) -> Option<usize> {
        if f.is_empty() {
            None
        } else {
            Some(f.len() - 1)
        }
    }

    pub fn x(gf: &Gf) -> Poly {
        vec![gf.zero(), gf.one()]
    }

    pub fn sub(gf: &Gf, a: &Poly, b: &Poly) -> Poly {
        let n = a.len().max(b.len());
        let z = gf.zero();
        let mut r: Poly = (0..n).map(|i| gf.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
        trim(&mut r, gf);
        r
    }

    pub fn add(gf: &Gf, a: &Poly, b: &Poly) -> Poly {
        let n = a.len().max(b.len());
        let z = gf.zero();
        let mut r: Poly = (0..n).map(|i| gf.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
        trim(&mut r, gf);
        r
    }

    pub fn mul(gf: &Gf, a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut r = vec![gf.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if gf.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                r[i + j] = gf.add(&r[i + j], &gf.mul(x, y));
            }
        }
        trim(&mut r, gf);
        r
    }

    /// (quotient, remainder); b nonzero.
    pub fn divrem(gf: &Gf, a: &Poly, b: &Poly) -> (Poly, Poly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = a.clone();
        trim(&mut r, gf);
        if r.len() < b.len() {
            return (vec![], r);
        }
        let lead_inv = gf.inv(b.last().unwrap()).unwrap();
        let mut q = vec![gf.zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = gf.mul(r.last().unwrap(), &lead_inv);
            q[shift] = c;
            for (i, bi) in b.iter().enumerate() {
                r[shift + i] = gf.sub(&r[shift + i], &gf.mul(&c, bi));
            }
            trim(&mut r, gf);
        }
        trim(&mut q, gf);
        (q, r)
    }

    pub fn rem(gf: &Gf, a: &Poly, b: &Poly) -> Poly {
        divrem(gf, a, b).1
    }

    pub fn monic(gf: &Gf, f: &Poly) -> Poly {
        match f.last() {
            None => vec![],
            Some(l) => {
                let li = gf.inv(l).unwrap();
                f.iter().map(|c| gf.mul(c, &li)).collect()
            }
        }
    }

    pub fn gcd(gf: &Gf, a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        trim(&mut a, gf);
        trim(&mut b, gf);
        while !b.is_empty() {
            let r = rem(gf, &a, &b);
            a = b;
            b = r;
        }
        monic(gf, &a)
    }

    pub fn powmod(gf: &Gf, base: &Poly, e: &BigUint, m: &Poly) -> Poly {
        let mut r = vec![gf.one()];
        let base = rem(gf, base, m);
        for i in (0..e.bits()).rev() {
            r = rem(gf, &mul(gf, &r, &r), m);
            if e.bit(i) {
                r = rem(gf, &mul(gf, &r, &base), m);
            }
        }
        r
    }

    pub fn eval(gf: &Gf, f: &Poly, x: &Fe) -> Fe {
        let mut acc = gf.zero();
        for c in f.iter().rev() {
            acc = gf.add(&gf.mul(&acc, x), c);
        }
        acc
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(gf: &Gf, f: &Poly) -> bool {
        let n = match degree(f) {
            None | Some(0) => return false,
            Some(n) => n,
        };
        if n == 1 {
            return true;
        }
        let q = gf.order().clone();
        let xp = x(gf);
        // x^{q^e} mod f by repeated q-th powering
        let frob_iter = |e: usize| {
            let mut t = xp.clone();
            for _ in 0..e {
                t = powmod(gf, &t, &q, f);
            }
            t
        };
        let top = frob_iter(n);
        if sub(gf, &top, &rem(gf, &xp, f)).iter().any(|c| !gf.is_zero(c)) {
            return false;
        }
        for (l, _) in crate::factor::factor_u64(n as u64) {
            let t = frob_iter(n / l as usize);
            let g = gcd(gf, &sub(gf, &t, &xp), f);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }

    /// Distinct roots of f in the field, sorted in element order. The
    /// splitting uses a deterministic sequence of shifts derived from `seed`.
    pub fn roots(gf: &Gf, f: &Poly, seed: u64) -> Result<Vec<Fe>> {
        let mut f = f.clone();
        trim(&mut f, gf);
        if f.is_empty() {
            return Err(NumError::Field("roots of the zero polynomial".into()));
        }
        if f.len() == 1 {
            return Ok(vec![]);
        }
        let xp = x(gf);
        let xq = powmod(gf, &xp, gf.order(), &f);
        let g = gcd(gf, &sub(gf, &xq, &xp), &f);
        let mut out = Vec::new();
        let mut stack = vec![g];
        let mut counter = seed.wrapping_mul(0x9E3779B97F4A7C15) | 1;
        let mut budget = 10_000usize;
        while let Some(g) = stack.pop() {
            match g.len() {
                0 | 1 => continue,
                2 => {
                    // g = x + c (monic)
                    out.push(gf.neg(&g[0]));
                    continue;
                }
                _ => {}
            }
            loop {
                if budget == 0 {
                    return Err(NumError::Field("root splitting exceeded its retry budget".into()));
                }
                budget -= 1;
                counter = counter.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = match gf.size() {
                    Some(sz) => gf.from_index((counter as u128) % sz),
                    None => gf.from_index(counter as u128),
                };
                let h = if gf.p() == 2 {
                    // trace map of a·x
                    let ax = vec![gf.zero(), a];
                    let mut t = rem(gf, &ax, &g);
                    let mut acc = t.clone();
                    for _ in 1..gf.k() {
                        t = rem(gf, &mul(gf, &t, &t), &g);
                        acc = add(gf, &acc, &t);
                    }
                    acc
                } else {
                    let e = (gf.order() - 1u32) >> 1;
                    let shifted = vec![a, gf.one()];
                    sub(gf, &powmod(gf, &shifted, &e, &g), &[gf.one()].to_vec())
                };
                let d = gcd(gf, &h, &g);
                if d.len() > 1 && d.len() < g.len() {
                    let (other, _) = divrem(gf, &g, &d);
                    stack.push(d);
                    stack.push(monic(gf, &other));
                    break;
                }
            }
        }
        out.sort();
        Ok(out)
    }
}
