//! Local Eisenstein-congruence predicates: a Satake parameter α over F_{p^k}
//! is congruent to the Eisenstein parameter at a given archimedean weight when
//! the generators of the unramified Hecke algebra take equal values.

use crate::context::CoefficientField;
use crate::params::{G2Weight, Gsp4Weight, LParamGL, LParamU};
use crate::{LocalError, Result};
use exactnum::Fe;
use serde::{Deserialize, Serialize};
use symfunc::poly::elementary_eval;
use symfunc::{u_generator, y_values};

/// Satake parameter (α₀, α₁, α₂) of GSp(4).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatakeGSp4 {
    pub a0: Fe,
    pub a1: Fe,
    pub a2: Fe,
}

/// Satake parameter (α₁, α₂) of G₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatakeG2 {
    pub a1: Fe,
    pub a2: Fe,
}

fn nonzero(ctx: &CoefficientField, xs: &[Fe]) -> Result<()> {
    if xs.iter().any(|x| ctx.gf().is_zero(x)) {
        return Err(LocalError::NotInvertible);
    }
    Ok(())
}

/// q^k = (q^{k_1}, …, q^{k_n}).
pub fn eisenstein_gl(ctx: &CoefficientField, q: u64, k: &LParamGL) -> Result<Vec<Fe>> {
    k.twice_k.iter().map(|&t| ctx.q_half_pow(q, t)).collect()
}

/// Z_r(α) ≡ Z_r(q^k) for r = 1…n. The common factor q^{(n−r)r/2} of both
/// sides is a unit, so the comparison is made on e_r.
pub fn eis_cong_gl(ctx: &CoefficientField, q: u64, alpha: &[Fe], k: &LParamGL) -> Result<bool> {
    if alpha.len() != k.n() {
        return Err(LocalError::Precondition(format!("{} Satake entries for GL({})", alpha.len(), k.n())));
    }
    nonzero(ctx, alpha)?;
    let e = eisenstein_gl(ctx, q, k)?;
    let gf = ctx.gf();
    Ok((1..=alpha.len()).all(|r| elementary_eval(gf, r, alpha) == elementary_eval(gf, r, &e)))
}

/// (−1)^{k′} q^{k̃} for U(N).
pub fn eisenstein_u(ctx: &CoefficientField, q: u64, k: &LParamU) -> Vec<Fe> {
    let gf = ctx.gf();
    let qq = ctx.q(q);
    k.k_tilde()
        .iter()
        .zip(k.k_prime())
        .map(|(&t, kp)| {
            let v = gf.pow_i(&qq, t).expect("q is a unit");
            if kp.rem_euclid(2) == 1 {
                gf.neg(&v)
            } else {
                v
            }
        })
        .collect()
}

/// Z̃_r(α) ≡ Z̃_r((−1)^{k′} q^{k̃}) for r = 1…⌊N/2⌋.
pub fn eis_cong_u(ctx: &CoefficientField, q: u64, alpha: &[Fe], k: &LParamU) -> Result<bool> {
    let big_n = k.big_n();
    if alpha.len() != big_n / 2 {
        return Err(LocalError::Precondition(format!("{} Satake entries for U({big_n})", alpha.len())));
    }
    nonzero(ctx, alpha)?;
    let e = eisenstein_u(ctx, q, k);
    let gf = ctx.gf();
    let qq = ctx.q(q);
    for r in 1..=alpha.len() {
        if u_generator(gf, r, alpha, big_n, qq)? != u_generator(gf, r, &e, big_n, qq)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Y-values of a unitary Satake parameter; congruence is equality of the
/// multisets {α_j + α_j⁻¹}.
pub fn u_y_values(ctx: &CoefficientField, alpha: &[Fe]) -> Result<Vec<Fe>> {
    Ok(y_values(ctx.gf(), alpha)?)
}

/// GL(2) weight k with character values χ₁(ϖ), χ₂(ϖ):
/// q^{(k−1)/2}(α₁+α₂) ≡ χ₁q^{k−1} + χ₂ and α₁α₂ ≡ χ₁χ₂.
pub fn eis_cong_gl2(ctx: &CoefficientField, q: u64, alpha: [Fe; 2], k: i64, chi1: Fe, chi2: Fe) -> Result<bool> {
    if k < 1 {
        return Err(LocalError::Precondition(format!("weight {k} < 1")));
    }
    nonzero(ctx, &alpha)?;
    let gf = ctx.gf();
    let lhs = gf.mul(&ctx.q_half_pow(q, k - 1)?, &gf.add(&alpha[0], &alpha[1]));
    let rhs = gf.add(&gf.mul(&chi1, &ctx.q_half_pow(q, 2 * (k - 1))?), &chi2);
    Ok(lhs == rhs && gf.mul(&alpha[0], &alpha[1]) == gf.mul(&chi1, &chi2))
}

/// PGL(2) weight k: q^{(k−1)/2}(α + α⁻¹) ≡ q^{k−1} + 1.
pub fn eis_cong_pgl2(ctx: &CoefficientField, q: u64, alpha: Fe, k: i64) -> Result<bool> {
    if k < 1 {
        return Err(LocalError::Precondition(format!("weight {k} < 1")));
    }
    let gf = ctx.gf();
    let inv = gf.inv(&alpha).ok_or(LocalError::NotInvertible)?;
    let lhs = gf.mul(&ctx.q_half_pow(q, k - 1)?, &gf.add(&alpha, &inv));
    let rhs = gf.add(&ctx.q_half_pow(q, 2 * (k - 1))?, &gf.one());
    Ok(lhs == rhs)
}

/// ĉ₁ = q^{3/2}(α₀ + α₀α₁ + α₀α₂ + α₀α₁α₂).
pub fn c1_gsp4(ctx: &CoefficientField, q: u64, b: &SatakeGSp4) -> Result<Fe> {
    let gf = ctx.gf();
    let s3 = ctx.q_half_pow(q, 3)?;
    let t = gf.mul(&gf.add(&gf.one(), &b.a1), &gf.add(&gf.one(), &b.a2));
    Ok(gf.mul(&s3, &gf.mul(&b.a0, &t)))
}

/// ĉ₂ = q²(α₀²α₁ + α₀²α₂ + α₀²α₁²α₂ + α₀²α₁α₂²) + (q² − 1)α₀²α₁α₂.
pub fn c2_gsp4(ctx: &CoefficientField, q: u64, b: &SatakeGSp4) -> Fe {
    let gf = ctx.gf();
    let q2 = ctx.q(q * q);
    let a00 = gf.square(&b.a0);
    let a12 = gf.mul(&b.a1, &b.a2);
    let inner = [b.a1, b.a2, gf.mul(&a12, &b.a1), gf.mul(&a12, &b.a2)].iter().fold(gf.zero(), |acc, x| gf.add(&acc, x));
    let first = gf.mul(&q2, &gf.mul(&a00, &inner));
    let second = gf.mul(&gf.sub(&q2, &gf.one()), &gf.mul(&a00, &a12));
    gf.add(&first, &second)
}

fn check_gsp4_weight(w: Gsp4Weight) -> Result<()> {
    if !(w.k1 + 1 >= w.k2 && w.k2 >= 2) {
        return Err(LocalError::Precondition(format!("GSp(4) weight ({}, {}) needs k₁+1 ≥ k₂ ≥ 2", w.k1, w.k2)));
    }
    Ok(())
}

/// (α₀, α₁, α₂) = (q^{−(k₁+k₂−3)/2}, q^{k₁−1}, q^{k₂−2}).
pub fn eisenstein_gsp4(ctx: &CoefficientField, q: u64, w: Gsp4Weight) -> Result<SatakeGSp4> {
    Ok(SatakeGSp4 {
        a0: ctx.q_half_pow(q, -(w.k1 + w.k2 - 3))?,
        a1: ctx.q_half_pow(q, 2 * (w.k1 - 1))?,
        a2: ctx.q_half_pow(q, 2 * (w.k2 - 2))?,
    })
}

/// Both GSp(4) congruences:
/// q^{(k₁+k₂)/2−3} ĉ₁ ≡ q^{k₁+k₂−3} + q^{k₁−1} + q^{k₂−2} + 1 and
/// q^{k₁−3} ĉ₂ ≡ q^{2k₁−2} + q^{k₁+k₂−3} + q^{k₁−k₂+1} + q^{k₁−1} − q^{k₁−3} + 1.
pub fn eis_cong_gsp4(ctx: &CoefficientField, q: u64, b: &SatakeGSp4, w: Gsp4Weight) -> Result<bool> {
    check_gsp4_weight(w)?;
    nonzero(ctx, &[b.a0, b.a1, b.a2])?;
    let gf = ctx.gf();
    let qp = |e: i64| ctx.q_half_pow(q, 2 * e);
    let (k1, k2) = (w.k1, w.k2);
    let lhs1 = gf.mul(&ctx.q_half_pow(q, k1 + k2 - 6)?, &c1_gsp4(ctx, q, b)?);
    let mut rhs1 = gf.one();
    for e in [k1 + k2 - 3, k1 - 1, k2 - 2] {
        rhs1 = gf.add(&rhs1, &qp(e)?);
    }
    let lhs2 = gf.mul(&qp(k1 - 3)?, &c2_gsp4(ctx, q, b));
    let mut rhs2 = gf.sub(&gf.one(), &qp(k1 - 3)?);
    for e in [2 * k1 - 2, k1 + k2 - 3, k1 - k2 + 1, k1 - 1] {
        rhs2 = gf.add(&rhs2, &qp(e)?);
    }
    Ok(lhs1 == rhs1 && lhs2 == rhs2)
}

/// Exponent vectors (of α₁, α₂) of the positive short and long roots of G₂
/// in the coordinates used here.
pub const G2_SHORT: [(i64, i64); 3] = [(1, 0), (1, -1), (2, -1)];
pub const G2_LONG: [(i64, i64); 3] = [(3, -1), (3, -2), (0, 1)];

fn g2_root_sum(ctx: &CoefficientField, a: &SatakeG2, roots: &[(i64, i64)]) -> Result<Fe> {
    let gf = ctx.gf();
    let mut acc = gf.zero();
    for &(x, y) in roots {
        let m = gf.mul(&gf.pow_i(&a.a1, x).map_err(field)?, &gf.pow_i(&a.a2, y).map_err(field)?);
        let mi = gf.inv(&m).ok_or(LocalError::NotInvertible)?;
        acc = gf.add(&acc, &gf.add(&m, &mi));
    }
    Ok(acc)
}

fn field(e: exactnum::NumError) -> LocalError {
    LocalError::Field(e.to_string())
}

/// ĉ₁ = q³ − 1 + q³ Σ_{short roots} (x + x⁻¹).
pub fn c1_g2(ctx: &CoefficientField, q: u64, a: &SatakeG2) -> Result<Fe> {
    let gf = ctx.gf();
    let q3 = ctx.q(q.pow(3));
    Ok(gf.add(&gf.sub(&q3, &gf.one()), &gf.mul(&q3, &g2_root_sum(ctx, a, &G2_SHORT)?)))
}

/// ĉ₂ = 2q⁵ − q⁴ − 1 − ĉ₁ + q⁵ Σ_{all roots} (x + x⁻¹).
pub fn c2_g2(ctx: &CoefficientField, q: u64, a: &SatakeG2) -> Result<Fe> {
    let gf = ctx.gf();
    let q5 = ctx.q(q.pow(5));
    let base = gf.sub(&gf.sub(&gf.sub(&gf.scale(&q5, 2), &ctx.q(q.pow(4))), &gf.one()), &c1_g2(ctx, q, a)?);
    let all: Vec<(i64, i64)> = G2_SHORT.iter().chain(&G2_LONG).copied().collect();
    Ok(gf.add(&base, &gf.mul(&q5, &g2_root_sum(ctx, a, &all)?)))
}

/// (α₁, α₂) = (q^{a/2}, q^{(a−b)/2}).
pub fn eisenstein_g2(ctx: &CoefficientField, q: u64, w: G2Weight) -> Result<SatakeG2> {
    Ok(SatakeG2 { a1: ctx.q_half_pow(q, w.a)?, a2: ctx.q_half_pow(q, w.a - w.b)? })
}

fn sum_pm(ctx: &CoefficientField, q: u64, twice_exps: &[i64]) -> Result<Fe> {
    let gf = ctx.gf();
    let mut acc = gf.zero();
    for &t in twice_exps {
        acc = gf.add(&acc, &gf.add(&ctx.q_half_pow(q, t)?, &ctx.q_half_pow(q, -t)?));
    }
    Ok(acc)
}

/// Both G₂ congruences at weight (a, b):
/// ĉ₁ ≡ q³ − 1 + q³ Σ q^{±e/2} over e ∈ {a, b, a+b} and
/// ĉ₂ ≡ 2q⁵ − q⁴ − 1 − ĉ₁ + q⁵ Σ q^{±e/2} over the six root exponents.
pub fn eis_cong_g2(ctx: &CoefficientField, q: u64, alpha: &SatakeG2, w: G2Weight) -> Result<bool> {
    if w.a % 2 != 0 || w.b % 2 != 0 {
        return Err(LocalError::Precondition(format!("G₂ weight ({}, {}) must be even", w.a, w.b)));
    }
    nonzero(ctx, &[alpha.a1, alpha.a2])?;
    let gf = ctx.gf();
    let (a, b) = (w.a, w.b);
    let short = [a, b, a + b];
    let long = [a - b, 2 * a + b, a + 2 * b];
    let q3 = ctx.q(q.pow(3));
    let q5 = ctx.q(q.pow(5));
    let c1 = c1_g2(ctx, q, alpha)?;
    let rhs1 = gf.add(&gf.sub(&q3, &gf.one()), &gf.mul(&q3, &sum_pm(ctx, q, &short)?));
    let all: Vec<i64> = short.iter().chain(&long).copied().collect();
    let base = gf.sub(&gf.sub(&gf.sub(&gf.scale(&q5, 2), &ctx.q(q.pow(4))), &gf.one()), &c1);
    let rhs2 = gf.add(&base, &gf.mul(&q5, &sum_pm(ctx, q, &all)?));
    Ok(c1 == rhs1 && c2_g2(ctx, q, alpha)? == rhs2)
}

/// Whether the U(1) character of weight u is congruent to the trivial one
/// modulo p, in the two forms that occur: the "even type" (p − 1) | 2u, and
/// the companion condition at p = 7 attached to √−7.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum U1Mode {
    EvenType,
    SqrtNeg7,
}

pub fn u1_cong_check(p: u64, u: i64, mode: U1Mode) -> bool {
    match mode {
        U1Mode::EvenType => (2 * u).rem_euclid(p as i64 - 1) == 0,
        U1Mode::SqrtNeg7 => p == 7 && (2 * u + 1).rem_euclid(6) == 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::build_context;

    #[test]
    fn gl2_examples() {
        let ctx = build_context(5, &[(2, true)], &[]).unwrap();
        let gf = ctx.gf();
        let s = ctx.sqrt_q(2).unwrap();
        let one = gf.one();
        let triv = [s, gf.inv(&s).unwrap()];
        assert!(eis_cong_gl2(&ctx, 2, triv, 2, one, one).unwrap());
        // s(α₁+α₂) = −2, α₁α₂ = 1: −2 ≡ 3 = q + 1 mod 5
        let t = gf.div(&gf.from_i64(-2), &s).unwrap();
        let disc = gf.sub(&gf.square(&t), &gf.from_u64(4));
        let r = gf.sqrt(&disc).unwrap_or_else(|| panic!("split in F_25"));
        let half = gf.inv(&gf.from_u64(2)).unwrap();
        let a1 = gf.mul(&gf.add(&t, &r), &half);
        let a2 = gf.mul(&gf.sub(&t, &r), &half);
        assert!(eis_cong_gl2(&ctx, 2, [a1, a2], 2, one, one).unwrap());
        assert!(eis_cong_pgl2(&ctx, 2, a1, 2).unwrap());
        assert!(!eis_cong_pgl2(&ctx, 2, gf.from_u64(2), 2).unwrap());
    }

    #[test]
    fn u_examples() {
        // U(3), q = 3, p = 31: trivial α = (q²)
        let ctx = build_context(31, &[(3, false)], &[]).unwrap();
        let k = LParamU::trivial(3);
        assert!(eis_cong_u(&ctx, 3, &[ctx.q(9)], &k).unwrap());
        assert!(eis_cong_u(&ctx, 3, &[ctx.gf().inv(&ctx.q(9)).unwrap()], &k).unwrap());
        assert!(!eis_cong_u(&ctx, 3, &[ctx.q(3)], &k).unwrap());
    }

    #[test]
    fn gsp4_trivial_values() {
        let ctx = build_context(101, &[(3, true)], &[]).unwrap();
        let w = Gsp4Weight { k1: 3, k2: 3 };
        let e = eisenstein_gsp4(&ctx, 3, w).unwrap();
        assert_eq!(c1_gsp4(&ctx, 3, &e).unwrap(), ctx.q(27 + 9 + 3 + 1));
        assert_eq!(c2_gsp4(&ctx, 3, &e), ctx.q(81 + 27 + 9 + 3));
        assert!(eis_cong_gsp4(&ctx, 3, &e, w).unwrap());
        assert!(eis_cong_gsp4(&ctx, 3, &e, Gsp4Weight { k1: 3, k2: 5 }).is_err());
    }

    #[test]
    fn g2_trivial_values() {
        let ctx = build_context(1009, &[(2, false)], &[]).unwrap();
        let w = G2Weight { a: 4, b: 2 };
        let e = eisenstein_g2(&ctx, 2, w).unwrap();
        assert_eq!(e, SatakeG2 { a1: ctx.q(4), a2: ctx.q(2) });
        assert_eq!(c1_g2(&ctx, 2, &e).unwrap(), ctx.q(64 + 32 + 16 + 8 + 4 + 2));
        assert_eq!(c2_g2(&ctx, 2, &e).unwrap(), ctx.q(1024 + 512 + 256 + 128 + 64 + 32));
        assert!(eis_cong_g2(&ctx, 2, &e, w).unwrap());
        assert!(eis_cong_g2(&ctx, 2, &e, G2Weight { a: 3, b: 2 }).is_err());
    }

    #[test]
    fn u1() {
        assert!(u1_cong_check(3, 1, U1Mode::EvenType));
        assert!(u1_cong_check(7, 3, U1Mode::EvenType));
        assert!(!u1_cong_check(7, 1, U1Mode::EvenType));
        assert!(u1_cong_check(7, 1, U1Mode::SqrtNeg7));
        assert!(!u1_cong_check(7, 2, U1Mode::SqrtNeg7));
        assert!(!u1_cong_check(5, 1, U1Mode::SqrtNeg7));
    }
}
