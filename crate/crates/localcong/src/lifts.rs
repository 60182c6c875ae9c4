//! Functorial lifts of Satake parameters together with their archimedean
//! parameters. Each lift carries congruent inputs to congruent outputs.

use crate::context::CoefficientField;
use crate::params::{twice_nu, twice_rho, G2Weight, Gsp4Weight, LParamGL, LParamU};
use crate::predicates::{SatakeG2, SatakeGSp4};
use crate::{LocalError, Result};
use exactnum::Fe;
use symfunc::u_generator;

fn pre(msg: String) -> LocalError {
    LocalError::Precondition(msg)
}

/// One summand of an isobaric sum on GL(m): Satake parameter, archimedean
/// parameter, and the choice (u_m, β_m) with q^{−ν_m} β_m ≡ 1 used to shift
/// the *other* summand.
#[derive(Clone, Debug)]
pub struct GlSummand {
    pub alpha: Vec<Fe>,
    pub k: LParamGL,
    pub u: i64,
    pub beta: Fe,
}

fn check_beta(ctx: &CoefficientField, q: u64, m: usize, u: i64, beta: &Fe) -> Result<()> {
    let gf = ctx.gf();
    let t = gf.mul(&ctx.q_half_pow(q, -twice_nu(m, u))?, beta);
    if t != gf.one() {
        return Err(pre(format!("β_{m} is not ≡ q^ν with ν = ν_{m}(u = {u})")));
    }
    Ok(())
}

fn scaled(ctx: &CoefficientField, xs: &[Fe], c: &Fe) -> Vec<Fe> {
    xs.iter().map(|x| ctx.gf().mul(x, c)).collect()
}

fn sorted_desc(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// GL(n) × GL(n′) → GL(n+n′): (αβ_{n′}, α′β_n) with parameter
/// (k + ν_{n′}, k′ + ν_n) reordered into 𝕃_{n+n′}.
pub fn lift_isobaric_gl(ctx: &CoefficientField, q: u64, a: &GlSummand, b: &GlSummand) -> Result<(Vec<Fe>, LParamGL)> {
    let (n, n2) = (a.alpha.len(), b.alpha.len());
    if a.k.n() != n || b.k.n() != n2 {
        return Err(pre("summand sizes disagree with their parameters".into()));
    }
    check_beta(ctx, q, n, a.u, &a.beta)?;
    check_beta(ctx, q, n2, b.u, &b.beta)?;
    let mut alpha = scaled(ctx, &a.alpha, &b.beta);
    alpha.extend(scaled(ctx, &b.alpha, &a.beta));
    let mut twice: Vec<i64> = a.k.twice_k.iter().map(|t| t + twice_nu(n2, b.u)).collect();
    twice.extend(b.k.twice_k.iter().map(|t| t + twice_nu(n, a.u)));
    let k = LParamGL::regular(sorted_desc(twice))?;
    Ok((alpha, k))
}

fn gl2_param(k: &LParamGL) -> Result<(i64, i64)> {
    match k.twice_k[..] {
        [t1, t2] if t1 > t2 => Ok((t1, t2)),
        _ => Err(pre(format!("{:?} is not a regular GL(2) parameter", k.twice_k))),
    }
}

/// Sym^m: GL(2) → GL(m+1), (α₁^m, α₁^{m−1}α₂, …, α₂^m) with parameter
/// (mk₁, (m−1)k₁+k₂, …, mk₂).
pub fn lift_sym_gl(ctx: &CoefficientField, alpha: [Fe; 2], k: &LParamGL, m: usize) -> Result<(Vec<Fe>, LParamGL)> {
    let (t1, t2) = gl2_param(k)?;
    if m == 0 {
        return Err(pre("Sym^0".into()));
    }
    let gf = ctx.gf();
    let out = (0..=m).map(|j| gf.mul(&gf.pow_u(&alpha[0], (m - j) as u64), &gf.pow_u(&alpha[1], j as u64))).collect();
    let twice = (0..=m as i64).map(|j| (m as i64 - j) * t1 + j * t2).collect();
    Ok((out, LParamGL::new(twice)))
}

/// GL(2) → GL(2m), (α₁q^{ρ_m}, α₂q^{ρ_m}) with parameter
/// ((k₁,…,k₁) + ρ_m, (k₂,…,k₂) + ρ_m); needs k₁ − k₂ ≥ m.
pub fn lift_sym_gl_even(
    ctx: &CoefficientField,
    q: u64,
    alpha: [Fe; 2],
    k: &LParamGL,
    m: usize,
) -> Result<(Vec<Fe>, LParamGL)> {
    let (t1, t2) = gl2_param(k)?;
    if m == 0 || t1 - t2 < 2 * m as i64 {
        return Err(pre(format!("weight gap {} < {m}", (t1 - t2) as f64 / 2.0)));
    }
    let gf = ctx.gf();
    let rho = twice_rho(m);
    let mut out = Vec::with_capacity(2 * m);
    let mut twice = Vec::with_capacity(2 * m);
    for (a, t) in [(alpha[0], t1), (alpha[1], t2)] {
        for &r in &rho {
            out.push(gf.mul(&a, &ctx.q_half_pow(q, r)?));
            twice.push(t + r);
        }
    }
    Ok((out, LParamGL::new(twice)))
}

/// One summand of an endoscopic sum on U(m); `u` defines ν_m.
#[derive(Clone, Debug)]
pub struct USummand {
    pub alpha: Vec<Fe>,
    pub k: LParamU,
    pub u: i64,
}

fn mu(ctx: &CoefficientField, m: usize) -> Fe {
    let gf = ctx.gf();
    if m % 2 == 1 {
        gf.neg(&gf.one())
    } else {
        gf.one()
    }
}

/// Twice-valued outer pairs (k_u + ν, k_{N−u+1} + ν), u ≤ ⌊N/2⌋.
fn outer_pairs(k: &LParamU, shift: i64) -> Vec<(i64, i64)> {
    let t = &k.twice_k;
    let n = t.len();
    (0..n / 2).map(|j| (t[j] + shift, t[n - 1 - j] + shift)).collect()
}

/// U(N) × U(N′) → U(N+N′): (μ_{N′}α, μ_Nα′), with a further entry −1 when N
/// and N′ are both odd; the parameter is (k + ν_{N′}, k′ + ν_N) reordered into
/// 𝕃_{N+N′}, subject to the pairing condition.
pub fn lift_endoscopic_u(ctx: &CoefficientField, q: u64, a: &USummand, b: &USummand) -> Result<(Vec<Fe>, LParamU)> {
    let (n, n2) = (a.k.big_n(), b.k.big_n());
    if a.alpha.len() != n / 2 || b.alpha.len() != n2 / 2 {
        return Err(pre("summand sizes disagree with their parameters".into()));
    }
    let gf = ctx.gf();
    let (sa, sb) = (twice_nu(n2, b.u), twice_nu(n, a.u));
    let mut alpha = scaled(ctx, &a.alpha, &mu(ctx, n2));
    alpha.extend(scaled(ctx, &b.alpha, &mu(ctx, n)));
    let mut twice: Vec<i64> = a.k.twice_k.iter().map(|t| t + sa).collect();
    twice.extend(b.k.twice_k.iter().map(|t| t + sb));
    let r = sorted_desc(twice);
    let big = r.len();

    let mut allowed = outer_pairs(&a.k, sa);
    allowed.extend(outer_pairs(&b.k, sb));
    let both_odd = n % 2 == 1 && n2 % 2 == 1;
    let mid_a = (n % 2 == 1).then(|| a.k.twice_k[n / 2] + sa);
    let mid_b = (n2 % 2 == 1).then(|| b.k.twice_k[n2 / 2] + sb);
    if both_odd {
        allowed.push((mid_a.unwrap(), mid_b.unwrap()));
    }
    for j in 0..big / 2 {
        let pair = (r[j], r[big - 1 - j]);
        let pos = allowed.iter().position(|&(x, y)| (x, y) == pair || (y, x) == pair);
        match pos {
            Some(i) => {
                allowed.swap_remove(i);
            }
            None => return Err(pre(format!("pairing condition fails at position {}", j + 1))),
        }
    }
    if big % 2 == 1 {
        let mid = r[big / 2];
        if Some(mid) != mid_a.or(mid_b) {
            return Err(pre("pairing condition fails at the middle entry".into()));
        }
    }
    if both_odd {
        // ĉ_(1)(−1) ≡ ĉ_(1)((−1)^{f′} q^{f̃}) on U(2)
        let (f1, f2) = (mid_a.unwrap(), mid_b.unwrap());
        let (ft, fp) = ((f1 - f2) / 2, (f1 + f2) / 2);
        let mut y = gf.pow_i(&ctx.q(q), ft).map_err(|e| LocalError::Field(e.to_string()))?;
        if fp.rem_euclid(2) == 1 {
            y = gf.neg(&y);
        }
        let minus = gf.neg(&gf.one());
        let qq = ctx.q(q);
        if u_generator(gf, 1, &[minus], 2, qq)? != u_generator(gf, 1, &[y], 2, qq)? {
            return Err(pre("the U(2) condition at the middle pair fails".into()));
        }
        alpha.push(minus);
    }
    Ok((alpha, LParamU::new(r)?))
}

fn u2_param(k: &LParamU) -> Result<(i64, i64)> {
    match k.twice_k[..] {
        [t1, t2] => Ok((t1, t2)),
        _ => Err(pre(format!("{:?} is not a U(2) parameter", k.twice_k))),
    }
}

/// U(2) → U(m+1): (α₁^m, α₁^{m−2}, …, α₁^{δ_m}) with parameter
/// (mk₁, (m−1)k₁+k₂, …, mk₂).
pub fn lift_sym_u(ctx: &CoefficientField, alpha1: Fe, k: &LParamU, m: usize) -> Result<(Vec<Fe>, LParamU)> {
    let (t1, t2) = u2_param(k)?;
    if m == 0 {
        return Err(pre("Sym^0".into()));
    }
    let gf = ctx.gf();
    let out = (0..(m + 1) / 2).map(|j| gf.pow_u(&alpha1, (m - 2 * j) as u64)).collect();
    let twice = (0..=m as i64).map(|j| (m as i64 - j) * t1 + j * t2).collect();
    Ok((out, LParamU::new(twice)?))
}

/// U(2) → U(2m): the entries α₁q^{2ρ_{m,j}} (the unitary Satake variable pairs
/// with q_E = q²), with parameter ((k₁,…,k₁) + ρ_m, (k₂,…,k₂) + ρ_m); needs
/// k₁ − k₂ ≥ m. For even m that parameter is not in 𝕃_{2m}, though k̃ and k′
/// stay integral, and it is returned unchecked.
pub fn lift_sym_u_even(ctx: &CoefficientField, q: u64, alpha1: Fe, k: &LParamU, m: usize) -> Result<(Vec<Fe>, LParamU)> {
    let (t1, t2) = u2_param(k)?;
    if m == 0 || t1 - t2 < 2 * m as i64 {
        return Err(pre(format!("weight gap {} < {m}", (t1 - t2) as f64 / 2.0)));
    }
    let gf = ctx.gf();
    let rho = twice_rho(m);
    let mut out = Vec::with_capacity(m);
    for &r in &rho {
        out.push(gf.mul(&alpha1, &ctx.q_half_pow(q, 2 * r)?));
    }
    let twice: Vec<i64> = rho.iter().map(|r| t1 + r).chain(rho.iter().map(|r| t2 + r)).collect();
    Ok((out, LParamU::unchecked(twice)))
}

/// Yoshida: GL(2) × GL(2) → GSp(4), β = (α₁, α₁′/α₁, α₂′/α₁) at weight
/// ((k+k′)/2, (k−k′)/2 + 2); needs α₁α₂ = α₁′α₂′, k ≡ k′ mod 2, k ≥ k′ ≥ 1.
pub fn lift_yoshida(
    ctx: &CoefficientField,
    alpha: [Fe; 2],
    k: i64,
    alpha2: [Fe; 2],
    k2: i64,
) -> Result<(SatakeGSp4, Gsp4Weight)> {
    let gf = ctx.gf();
    if (k + k2) % 2 != 0 || !(k >= k2 && k2 >= 1) {
        return Err(pre(format!("Yoshida weights ({k}, {k2})")));
    }
    if gf.mul(&alpha[0], &alpha[1]) != gf.mul(&alpha2[0], &alpha2[1]) {
        return Err(pre("central characters differ".into()));
    }
    let inv = gf.inv(&alpha[0]).ok_or(LocalError::NotInvertible)?;
    let b = SatakeGSp4 { a0: alpha[0], a1: gf.mul(&alpha2[0], &inv), a2: gf.mul(&alpha2[1], &inv) };
    Ok((b, Gsp4Weight { k1: (k + k2) / 2, k2: (k - k2) / 2 + 2 }))
}

/// Saito–Kurokawa: the Yoshida lift with α′ = (q^{1/2}, q^{−1/2}), k′ = 2.
pub fn lift_saito_kurokawa(ctx: &CoefficientField, q: u64, alpha: [Fe; 2], k: i64) -> Result<(SatakeGSp4, Gsp4Weight)> {
    let s = ctx.sqrt_q(q)?;
    let si = ctx.gf().inv(&s).ok_or(LocalError::NotInvertible)?;
    lift_yoshida(ctx, alpha, k, [s, si], 2)
}

/// Sym³: GL(2) → GSp(4), β = (α₁³, α₂/α₁, (α₂/α₁)²). The weight
/// (k − ½, (k+1)/2) is returned as the twice-values (2k−1, k+1), which is
/// the integral weight at which the GSp(4) congruence holds.
pub fn lift_sym_cube(ctx: &CoefficientField, alpha: [Fe; 2], k: i64) -> Result<(SatakeGSp4, Gsp4Weight)> {
    if k < 1 {
        return Err(pre(format!("weight {k} < 1")));
    }
    let gf = ctx.gf();
    let r = gf.div(&alpha[1], &alpha[0]).ok_or(LocalError::NotInvertible)?;
    let b = SatakeGSp4 { a0: gf.pow_u(&alpha[0], 3), a1: r, a2: gf.square(&r) };
    Ok((b, Gsp4Weight { k1: 2 * k - 1, k2: k + 1 }))
}

/// PGL(2) × PGL(2) → G₂ for odd weights c + 1, d + 1: α = (β₁β₂, β₂²) at weight
/// (c + d, c − d).
pub fn lift_g2(ctx: &CoefficientField, beta1: Fe, c: i64, beta2: Fe, d: i64) -> Result<(SatakeG2, G2Weight)> {
    if c <= 0 || d <= 0 || c % 2 == 0 || d % 2 == 0 {
        return Err(pre(format!("G₂ lift needs odd positive c, d; got ({c}, {d})")));
    }
    let gf = ctx.gf();
    Ok((SatakeG2 { a1: gf.mul(&beta1, &beta2), a2: gf.square(&beta2) }, G2Weight { a: c + d, b: c - d }))
}
