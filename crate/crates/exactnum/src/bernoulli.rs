use crate::character::QuadraticCharacter;
use crate::rat::{BigInt, BigRational};
use num_traits::{One, Zero};
use std::sync::{OnceLock, RwLock};

fn table() -> &'static RwLock<Vec<BigRational>> {
    static TABLE: OnceLock<RwLock<Vec<BigRational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(Vec::new()))
}

/// Akiyama–Tanigawa; produces B_n with B_1 = +1/2, fixed up afterwards.
fn akiyama_tanigawa(n: usize) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut a: Vec<BigRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        a.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let d = &a[j - 1] - &a[j];
            a[j - 1] = d * BigRational::from_integer(BigInt::from(j));
        }
        out.push(a[0].clone());
    }
    if n >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

/// Bernoulli number B_n, with B_1 = −1/2.
pub fn bernoulli(n: u32) -> BigRational {
    let n = n as usize;
    if let Some(b) = table().read().unwrap().get(n) {
        return b.clone();
    }
    let fresh = akiyama_tanigawa(n.max(64));
    let mut t = table().write().unwrap();
    if t.len() < fresh.len() {
        *t = fresh;
    }
    t[n].clone()
}

fn binom(n: u32, k: u32) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Bernoulli polynomial B_n(x) = Σ C(n,k) B_k x^{n−k}.
pub fn bernoulli_poly(n: u32, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut xp = BigRational::one();
    // Horner from the constant side: accumulate C(n,k) B_k x^{n-k} for k = n..0
    for k in (0..=n).rev() {
        acc += BigRational::from_integer(binom(n, k)) * bernoulli(k) * &xp;
        xp *= x;
    }
    acc
}

/// Generalized Bernoulli number B_{n,χ} = f^{n−1} Σ_{a=1}^{f} χ(a) B_n(a/f).
/// For the trivial character this is the classical B_n (B_1 = −1/2).
pub fn gen_bernoulli(n: u32, chi: &QuadraticCharacter) -> BigRational {
    gen_bernoulli_with(n, chi, false)
}

/// As [`gen_bernoulli`]; `trivial_plus_half` selects B_{1,1} = +1/2, the
/// value the defining sum gives literally for f = 1.
pub fn gen_bernoulli_with(n: u32, chi: &QuadraticCharacter, trivial_plus_half: bool) -> BigRational {
    assert!(n >= 1, "gen_bernoulli needs n >= 1");
    if chi.is_trivial() {
        let b = bernoulli(n);
        return if n == 1 && trivial_plus_half { -b } else { b };
    }
    let f = chi.conductor();
    let fr = BigRational::from_integer(BigInt::from(f));
    let mut s = BigRational::zero();
    for a in 1..=f {
        let c = chi.value(a as i64);
        if c == 0 {
            continue;
        }
        let x = BigRational::new(BigInt::from(a), BigInt::from(f));
        let v = bernoulli_poly(n, &x);
        if c > 0 {
            s += v;
        } else {
            s -= v;
        }
    }
    s * num_traits::pow(fr, (n - 1) as usize)
}

/// L(1−r, χ^r) = −B_{r,χ^r}/r.
pub fn l_value_neg(r: u32, chi: &QuadraticCharacter) -> BigRational {
    assert!(r >= 1);
    let c = chi.pow(r);
    -gen_bernoulli(r, &c) / BigRational::from_integer(BigInt::from(r))
}

/// ζ(1−2r) = −B_{2r}/(2r).
pub fn zeta_neg_odd(r: u32) -> BigRational {
    l_value_neg(2 * r, &QuadraticCharacter::trivial())
}
