use crate::partition::Partition;
use crate::{Result, SymError};
use exactnum::rat::{BigInt, BigRational};
use exactnum::{Fe, Gf};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

fn ck(x: Option<i64>) -> i64 {
    x.expect("coefficient overflow beyond desk-scale bounds")
}

/// Integer polynomial in the formal parameter t, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TPoly(Vec<i64>);

impl TPoly {
    pub fn new(mut c: Vec<i64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        TPoly(c)
    }

    pub fn constant(c: i64) -> Self {
        TPoly::new(vec![c])
    }

    /// c·t^k.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        TPoly::new(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn at_zero(&self) -> i64 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> Self {
        TPoly::new(self.0.iter().map(|&x| ck(x.checked_mul(c))).collect())
    }

    /// Exact quotient by a divisor with constant term ±1; `None` if inexact.
    pub fn div_exact(&self, d: &TPoly) -> Option<TPoly> {
        let d0 = d.at_zero();
        assert!(d0 == 1 || d0 == -1, "divisor must have unit constant term");
        if self.is_zero() {
            return Some(TPoly::default());
        }
        let dd = d.degree()?;
        let n = self.0.len();
        if n < dd + 1 {
            return None;
        }
        let mut rem = self.0.clone();
        let mut q = vec![0i64; n - dd];
        for i in 0..q.len() {
            let c = rem[i] * d0;
            q[i] = c;
            if c != 0 {
                for (j, &dj) in d.0.iter().enumerate() {
                    rem[i + j] = ck(rem[i + j].checked_sub(ck(c.checked_mul(dj))));
                }
            }
        }
        if rem.iter().any(|&x| x != 0) {
            return None;
        }
        Some(TPoly::new(q))
    }

    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * t + BigRational::from_integer(BigInt::from(*c));
        }
        acc
    }

    pub fn eval_field(&self, gf: &Gf, t: Fe) -> Fe {
        let mut acc = gf.zero();
        for &c in self.0.iter().rev() {
            acc = gf.add(&gf.mul(&acc, &t), &gf.from_i64(c));
        }
        acc
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, o: &TPoly) -> TPoly {
        let n = self.0.len().max(o.0.len());
        TPoly::new(
            (0..n)
                .map(|i| ck(self.0.get(i).copied().unwrap_or(0).checked_add(o.0.get(i).copied().unwrap_or(0))))
                .collect(),
        )
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, o: &TPoly) -> TPoly {
        self + &(-o)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.scale(-1)
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, o: &TPoly) -> TPoly {
        if self.is_zero() || o.is_zero() {
            return TPoly::default();
        }
        let mut v = vec![0i64; self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.0.iter().enumerate() {
                v[i + j] = ck(v[i + j].checked_add(ck(a.checked_mul(b))));
            }
        }
        TPoly::new(v)
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, o: &TPoly) {
        *self = &*self + o;
    }
}

/// Sparse Laurent polynomial in x₁…x_n with coefficients in ℤ[t].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentSymPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<i32>, TPoly>,
}

impl LaurentSymPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentSymPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], &TPoly::constant(1));
        p
    }

    pub fn add_term(&mut self, exp: Vec<i32>, c: &TPoly) {
        debug_assert_eq!(exp.len(), self.nvars);
        let e = self.terms.entry(exp.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: &[i32]) -> TPoly {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn mul(&self, o: &LaurentSymPoly) -> LaurentSymPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut acc: BTreeMap<Vec<i32>, TPoly> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += &(ca * cb);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        LaurentSymPoly { nvars: self.nvars, terms: acc }
    }

    pub fn add(&self, o: &LaurentSymPoly) -> LaurentSymPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            *r.terms.entry(e.clone()).or_default() += c;
        }
        r.terms.retain(|_, v| !v.is_zero());
        r
    }

    pub fn scale(&self, c: &TPoly) -> LaurentSymPoly {
        let mut r = LaurentSymPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            let x = v * c;
            if !x.is_zero() {
                r.terms.insert(e.clone(), x);
            }
        }
        r
    }

    /// Substitute t ↦ t0.
    pub fn specialize_t(&self, t0: i64) -> LaurentSymPoly {
        let mut r = LaurentSymPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            let x = v.eval_rational(&BigRational::from_integer(BigInt::from(t0)));
            let c = x.to_integer().try_into().expect("small coefficient");
            if c != 0 {
                r.terms.insert(e.clone(), TPoly::constant(c));
            }
        }
        r
    }

    /// Invariant under every permutation of the variables.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            (0..self.nvars.saturating_sub(1)).all(|i| {
                let mut f = e.clone();
                f.swap(i, i + 1);
                self.terms.get(&f) == Some(c)
            })
        })
    }

    /// Read off the monomial-basis coefficients of a symmetric polynomial.
    pub fn to_monomial_basis(&self) -> Result<SymPoly> {
        if !self.is_symmetric() {
            return Err(SymError::NotSymmetric);
        }
        let mut coeffs = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.iter().any(|&x| x < 0) {
                return Err(SymError::NotSymmetric);
            }
            if e.windows(2).all(|w| w[0] >= w[1]) {
                let p = Partition::new(e.iter().map(|&x| x as u32).collect())?;
                coeffs.insert(p, c.clone());
            }
        }
        Ok(SymPoly { nvars: self.nvars, coeffs })
    }

    pub fn eval_field(&self, gf: &Gf, t: Fe, x: &[Fe]) -> Result<Fe> {
        let mut acc = gf.zero();
        for (e, c) in &self.terms {
            let mut m = c.eval_field(gf, t);
            for (xi, &ei) in x.iter().zip(e) {
                m = gf.mul(&m, &gf.pow_i(&*xi, ei as i64).map_err(|e| SymError::Field(e.to_string()))?);
            }
            acc = gf.add(&acc, &m);
        }
        Ok(acc)
    }
}

/// Distinct permutations of a vector (as a sorted list).
pub fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = v.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// Symmetric polynomial in n variables in the monomial basis m_λ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymPoly {
    pub nvars: usize,
    pub coeffs: BTreeMap<Partition, TPoly>,
}

impl SymPoly {
    pub fn monomial(l: &Partition, n: usize) -> SymPoly {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(l.clone(), TPoly::constant(1));
        SymPoly { nvars: n, coeffs }
    }

    pub fn coeff(&self, l: &Partition) -> TPoly {
        self.coeffs.get(l).cloned().unwrap_or_default()
    }

    pub fn to_laurent(&self) -> LaurentSymPoly {
        let mut r = LaurentSymPoly::zero(self.nvars);
        for (l, c) in &self.coeffs {
            for perm in distinct_permutations(&l.padded(self.nvars)) {
                r.terms.insert(perm.into_iter().map(|x| x as i32).collect(), c.clone());
            }
        }
        r
    }

    pub fn specialize_t(&self, t0: i64) -> SymPoly {
        let mut coeffs = BTreeMap::new();
        for (l, c) in &self.coeffs {
            let v = c.eval_rational(&BigRational::from_integer(BigInt::from(t0)));
            let v: i64 = v.to_integer().try_into().expect("small coefficient");
            if v != 0 {
                coeffs.insert(l.clone(), TPoly::constant(v));
            }
        }
        SymPoly { nvars: self.nvars, coeffs }
    }

    pub fn is_one_term(&self, l: &Partition) -> bool {
        self.coeffs.len() == 1 && self.coeff(l) == TPoly::constant(1)
    }
}

/// m_μ(x) over a finite field.
pub fn monomial_eval(gf: &Gf, mu: &Partition, x: &[Fe]) -> Fe {
    let mut acc = gf.zero();
    for perm in distinct_permutations(&mu.padded(x.len())) {
        let mut m = gf.one();
        for (xi, &e) in x.iter().zip(&perm) {
            m = gf.mul(&m, &gf.pow_u(&*xi, e as u64));
        }
        acc = gf.add(&acc, &m);
    }
    acc
}

/// e_r(x) over a finite field.
pub fn elementary_eval(gf: &Gf, r: usize, x: &[Fe]) -> Fe {
    // e_0..e_r by the product ∏(1 + x_i T)
    let mut e = vec![gf.zero(); r + 1];
    e[0] = gf.one();
    for &xi in x {
        for k in (1..=r).rev() {
            e[k] = gf.add(&e[k], &gf.mul(&e[k - 1], &xi));
        }
    }
    e[r]
}

/// Laurent polynomial in q with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentQ(pub BTreeMap<i64, BigInt>);

impl LaurentQ {
    pub fn add_term(&mut self, e: i64, c: BigInt) {
        let v = self.0.entry(e).or_default();
        *v += c;
        if v.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        self.0.iter().fold(BigRational::zero(), |acc, (&e, c)| {
            acc + exactnum::rat::pow(q, e) * BigRational::from_integer(c.clone())
        })
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().map_or(true, |e| e >= 0)
    }

    /// Coefficients from q⁰ upward (requires a polynomial).
    pub fn coefficients(&self) -> Vec<BigInt> {
        let top = self.0.keys().last().copied().unwrap_or(0).max(0);
        (0..=top).map(|e| self.0.get(&e).cloned().unwrap_or_default()).collect()
    }

    pub fn from_coefficients(c: &[i64]) -> Self {
        let mut r = LaurentQ::default();
        for (e, &x) in c.iter().enumerate() {
            if x != 0 {
                r.add_term(e as i64, BigInt::from(x));
            }
        }
        r
    }

    pub fn one() -> Self {
        let mut r = LaurentQ::default();
        r.add_term(0, BigInt::one());
        r
    }
}

impl std::fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.0.iter().rev() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let a = if neg { -c } else { c.clone() };
            if !first {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            first = false;
            let one = a.is_one();
            match e {
                0 => write!(f, "{a}")?,
                1 if one => write!(f, "q")?,
                1 => write!(f, "{a}q")?,
                _ if one => write!(f, "q^{e}")?,
                _ => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}
