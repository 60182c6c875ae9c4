//! JSON parameters of the `check` subcommand.
//!
//! Field elements are integers (reduced mod p), raw coefficient lists over the
//! context field, or strings `[-][c*]q^e` with e an integer or a half
//! integer `t/2`, evaluated with the designated √q.

use crate::CliError;
use exactnum::Fe;
use localcong::predicates::{SatakeG2, SatakeGSp4, U1Mode};
use localcong::{build_context, eis_cong_g2, eis_cong_gl, eis_cong_gl2, eis_cong_gsp4, eis_cong_pgl2, eis_cong_u, u1_cong_check, CoefficientField, G2Weight, Gsp4Weight, LParamGL, LParamU};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Elem {
    Int(i64),
    Expr(String),
    Coeffs(Vec<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "predicate", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CheckParams {
    Gl { p: u64, q: u64, alpha: Vec<Elem>, twice_k: Vec<i64> },
    U { p: u64, q: u64, alpha: Vec<Elem>, twice_k: Vec<i64> },
    Gl2 { p: u64, q: u64, alpha: [Elem; 2], k: i64, chi: [Elem; 2] },
    Pgl2 { p: u64, q: u64, alpha: Elem, k: i64 },
    Gsp4 { p: u64, q: u64, beta: [Elem; 3], k1: i64, k2: i64 },
    G2 { p: u64, q: u64, alpha: [Elem; 2], a: i64, b: i64 },
    U1 { p: u64, u: i64, mode: U1Mode },
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub predicate: String,
    pub field: String,
    pub congruent: bool,
}

fn int_mod(ctx: &CoefficientField, c: i64) -> Fe {
    ctx.gf().from_i64(c)
}

fn parse_expr(ctx: &CoefficientField, q: u64, s: &str) -> Result<Fe, CliError> {
    let bad = || CliError::Input(format!("cannot read field element {s:?}"));
    let t = s.replace(' ', "");
    let (neg, t) = match t.strip_prefix('-') {
        Some(r) => (true, r.to_string()),
        None => (false, t),
    };
    let (coef, pow) = match t.split_once('*') {
        Some((c, r)) => (c.parse::<i64>().map_err(|_| bad())?, r.to_string()),
        None if t.starts_with('q') => (1, t.clone()),
        None => (t.parse::<i64>().map_err(|_| bad())?, "q^0".to_string()),
    };
    let e = pow.strip_prefix("q^").or_else(|| (pow == "q").then_some("1")).ok_or_else(bad)?;
    let twice = match e.strip_suffix("/2") {
        Some(h) => h.trim_matches(|c| c == '(' || c == ')').parse::<i64>().map_err(|_| bad())?,
        None => 2 * e.trim_matches(|c| c == '(' || c == ')').parse::<i64>().map_err(|_| bad())?,
    };
    let gf = ctx.gf();
    let v = gf.mul(&int_mod(ctx, coef), &ctx.q_half_pow(q, twice).map_err(CliError::from)?);
    Ok(if neg { gf.neg(&v) } else { v })
}

pub fn elem(ctx: &CoefficientField, q: u64, e: &Elem) -> Result<Fe, CliError> {
    match e {
        Elem::Int(c) => Ok(int_mod(ctx, *c)),
        Elem::Expr(s) => parse_expr(ctx, q, s),
        Elem::Coeffs(c) => {
            if c.len() > ctx.k() {
                return Err(CliError::Input(format!("{} coefficients over a degree-{} field", c.len(), ctx.k())));
            }
            Ok(ctx.gf().from_coeffs(c))
        }
    }
}

fn elems(ctx: &CoefficientField, q: u64, es: &[Elem]) -> Result<Vec<Fe>, CliError> {
    es.iter().map(|e| elem(ctx, q, e)).collect()
}

fn context(p: u64, q: u64) -> Result<CoefficientField, CliError> {
    Ok(build_context(p, &[(q, true)], &[])?)
}

pub fn run_check(params: &CheckParams) -> Result<CheckResult, CliError> {
    let (name, field, congruent) = match params {
        CheckParams::Gl { p, q, alpha, twice_k } => {
            let ctx = context(*p, *q)?;
            let k = LParamGL::regular(twice_k.clone())?;
            ("gl", field_name(&ctx), eis_cong_gl(&ctx, *q, &elems(&ctx, *q, alpha)?, &k)?)
        }
        CheckParams::U { p, q, alpha, twice_k } => {
            let ctx = context(*p, *q)?;
            let k = LParamU::new(twice_k.clone())?;
            ("u", field_name(&ctx), eis_cong_u(&ctx, *q, &elems(&ctx, *q, alpha)?, &k)?)
        }
        CheckParams::Gl2 { p, q, alpha, k, chi } => {
            let ctx = context(*p, *q)?;
            let a = [elem(&ctx, *q, &alpha[0])?, elem(&ctx, *q, &alpha[1])?];
            let c = [elem(&ctx, *q, &chi[0])?, elem(&ctx, *q, &chi[1])?];
            ("gl2", field_name(&ctx), eis_cong_gl2(&ctx, *q, a, *k, c[0], c[1])?)
        }
        CheckParams::Pgl2 { p, q, alpha, k } => {
            let ctx = context(*p, *q)?;
            ("pgl2", field_name(&ctx), eis_cong_pgl2(&ctx, *q, elem(&ctx, *q, alpha)?, *k)?)
        }
        CheckParams::Gsp4 { p, q, beta, k1, k2 } => {
            let ctx = context(*p, *q)?;
            let b = SatakeGSp4 { a0: elem(&ctx, *q, &beta[0])?, a1: elem(&ctx, *q, &beta[1])?, a2: elem(&ctx, *q, &beta[2])? };
            ("gsp4", field_name(&ctx), eis_cong_gsp4(&ctx, *q, &b, Gsp4Weight { k1: *k1, k2: *k2 })?)
        }
        CheckParams::G2 { p, q, alpha, a, b } => {
            let ctx = context(*p, *q)?;
            let x = SatakeG2 { a1: elem(&ctx, *q, &alpha[0])?, a2: elem(&ctx, *q, &alpha[1])? };
            ("g2", field_name(&ctx), eis_cong_g2(&ctx, *q, &x, G2Weight { a: *a, b: *b })?)
        }
        CheckParams::U1 { p, u, mode } => ("u1", format!("F_{p}"), u1_cong_check(*p, *u, *mode)),
    };
    Ok(CheckResult { predicate: name.to_string(), field, congruent })
}

pub fn field_name(ctx: &CoefficientField) -> String {
    if ctx.k() == 1 {
        format!("F_{}", ctx.p())
    } else {
        format!("F_{}^{}", ctx.p(), ctx.k())
    }
}
