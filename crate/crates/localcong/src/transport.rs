//! Seeded random suites checking that each lift carries congruent inputs to
//! congruent outputs. Inputs are drawn from the Weyl orbit of the Eisenstein
//! parameter at a random archimedean parameter, with random auxiliary choices;
//! negative controls perturb the input off that orbit.

use crate::context::{build_context, CoefficientField};
use crate::lifts::*;
use crate::params::{twice_nu, twice_rho, LParamGL, LParamU};
use crate::predicates::*;
use crate::{LocalError, Result};
use exactnum::Fe;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftKind {
    IsobaricGl,
    SymGl,
    SymGlEven,
    EndoscopicU,
    SymU,
    SymUEven,
    Yoshida,
    SaitoKurokawa,
    SymCube,
    G2,
}

impl LiftKind {
    pub const ALL: [LiftKind; 10] = [
        LiftKind::IsobaricGl,
        LiftKind::SymGl,
        LiftKind::SymGlEven,
        LiftKind::EndoscopicU,
        LiftKind::SymU,
        LiftKind::SymUEven,
        LiftKind::Yoshida,
        LiftKind::SaitoKurokawa,
        LiftKind::SymCube,
        LiftKind::G2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LiftKind::IsobaricGl => "isobaric-gl",
            LiftKind::SymGl => "sym-gl",
            LiftKind::SymGlEven => "sym-gl-even",
            LiftKind::EndoscopicU => "endoscopic-u",
            LiftKind::SymU => "sym-u",
            LiftKind::SymUEven => "sym-u-even",
            LiftKind::Yoshida => "yoshida",
            LiftKind::SaitoKurokawa => "saito-kurokawa",
            LiftKind::SymCube => "sym-cube",
            LiftKind::G2 => "g2",
        }
    }
}

/// A configuration: characteristic p, residue size q, and a shape whose
/// meaning depends on the lift (group sizes for sums, m for symmetric powers).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Config {
    pub p: u64,
    pub q: u64,
    pub shape: (usize, usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct TransportOutcome {
    pub kind: LiftKind,
    pub config: Config,
    pub samples: usize,
    /// Positive samples whose input passed its own predicate (sampler sanity).
    pub inputs_congruent: usize,
    pub outputs_congruent: usize,
    pub negatives: usize,
    pub negatives_rejected: usize,
}

impl TransportOutcome {
    pub fn all_transported(&self) -> bool {
        self.inputs_congruent == self.samples && self.outputs_congruent == self.samples
    }
}

pub fn configurations(kind: LiftKind) -> Vec<Config> {
    let c = |p, q, a, b| Config { p, q, shape: (a, b) };
    match kind {
        LiftKind::IsobaricGl => vec![c(5, 2, 2, 2), c(7, 3, 1, 2), c(13, 2, 3, 1), c(11, 3, 2, 3)],
        LiftKind::SymGl => vec![c(5, 2, 2, 0), c(7, 3, 3, 0), c(13, 2, 4, 0), c(11, 3, 5, 0)],
        LiftKind::SymGlEven => vec![c(5, 2, 1, 0), c(7, 3, 2, 0), c(13, 2, 3, 0)],
        LiftKind::EndoscopicU => {
            vec![c(5, 2, 1, 2), c(7, 3, 2, 2), c(13, 2, 3, 2), c(7, 2, 1, 1), c(13, 3, 3, 1), c(5, 2, 1, 3)]
        }
        LiftKind::SymU => vec![c(5, 2, 2, 0), c(7, 3, 3, 0), c(13, 2, 4, 0)],
        LiftKind::SymUEven => vec![c(5, 2, 1, 0), c(7, 3, 2, 0), c(13, 2, 3, 0)],
        LiftKind::Yoshida | LiftKind::SaitoKurokawa | LiftKind::SymCube | LiftKind::G2 => {
            vec![c(5, 2, 0, 0), c(7, 3, 0, 0), c(13, 2, 0, 0)]
        }
    }
}

struct Sampler<'a> {
    ctx: &'a CoefficientField,
    q: u64,
    rng: ChaCha8Rng,
}

const MAX_ATTEMPTS: usize = 10_000;

/// A failed precondition means the random draw is inadmissible.
fn lifted<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(LocalError::Precondition(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

impl Sampler<'_> {
    fn decreasing(&mut self, n: usize, lo: i64, hi: i64) -> Vec<i64> {
        let mut v: Vec<i64> = (0..n).map(|_| self.rng.gen_range(lo..=hi)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// A random k ∈ 𝕃_n.
    fn param(&mut self, n: usize) -> Vec<i64> {
        let d = self.decreasing(n, -4, 4);
        d.iter().zip(twice_rho(n)).map(|(x, r)| 2 * x + r).collect()
    }

    fn shuffled(&mut self, mut v: Vec<Fe>) -> Vec<Fe> {
        v.shuffle(&mut self.rng);
        v
    }

    /// Random element of the unitary Weyl group: permutation and inversions.
    fn u_weyl(&mut self, v: Vec<Fe>) -> Vec<Fe> {
        let gf = self.ctx.gf();
        let v: Vec<Fe> = v.into_iter().map(|x| if self.rng.gen() { gf.inv(&x).unwrap() } else { x }).collect();
        self.shuffled(v)
    }

    fn unit(&mut self) -> Fe {
        let gf = self.ctx.gf();
        let size = gf.size().expect("small field");
        loop {
            let x = gf.from_index(self.rng.gen_range(2..size));
            if !gf.is_zero(&x) && x != gf.one() {
                return x;
            }
        }
    }

    fn gl2_alpha(&mut self, k: i64) -> Result<[Fe; 2]> {
        let a = self.ctx.q_half_pow(self.q, k - 1)?;
        let b = self.ctx.q_half_pow(self.q, 1 - k)?;
        Ok(if self.rng.gen() { [a, b] } else { [b, a] })
    }

    /// (α₁x, α₂x⁻¹): off the Eisenstein orbit but with the same product.
    fn perturb_gl2(&mut self, a: [Fe; 2]) -> [Fe; 2] {
        let gf = self.ctx.gf();
        let x = self.unit();
        [gf.mul(&a[0], &x), gf.div(&a[1], &x).unwrap()]
    }

    fn perturb_first(&mut self, v: &mut [Fe]) {
        if let Some(x0) = v.first_mut() {
            let x = self.unit();
            *x0 = self.ctx.gf().mul(x0, &x);
        }
    }

    /// One draw; None when the random choices violate a lift precondition.
    fn draw(&mut self, kind: LiftKind, shape: (usize, usize), negative: bool) -> Result<Option<(bool, bool)>> {
        let (ctx, q) = (self.ctx, self.q);
        let gf = ctx.gf();
        Ok(Some(match kind {
            LiftKind::IsobaricGl => {
                let mut summands = Vec::new();
                for n in [shape.0, shape.1] {
                    let k = LParamGL::new(self.param(n));
                    let alpha = self.shuffled(eisenstein_gl(ctx, q, &k)?);
                    let u = self.rng.gen_range(-3..=3);
                    let beta = ctx.q_half_pow(q, twice_nu(n, u))?;
                    summands.push(GlSummand { alpha, k, u, beta });
                }
                if negative {
                    self.perturb_first(&mut summands[0].alpha);
                }
                let input = eis_cong_gl(ctx, q, &summands[0].alpha, &summands[0].k)?
                    && eis_cong_gl(ctx, q, &summands[1].alpha, &summands[1].k)?;
                let Some((out, k)) = lifted(lift_isobaric_gl(ctx, q, &summands[0], &summands[1]))? else {
                    return Ok(None);
                };
                (input, eis_cong_gl(ctx, q, &out, &k)?)
            }
            LiftKind::SymGl | LiftKind::SymGlEven => {
                let k = LParamGL::new(self.param(2));
                if k.twice_k[0] == k.twice_k[1] {
                    return Ok(None);
                }
                let e = eisenstein_gl(ctx, q, &k)?;
                let mut alpha = self.shuffled(e);
                if negative {
                    self.perturb_first(&mut alpha);
                }
                let input = eis_cong_gl(ctx, q, &alpha, &k)?;
                let a = [alpha[0], alpha[1]];
                let r = if kind == LiftKind::SymGl {
                    lift_sym_gl(ctx, a, &k, shape.0)
                } else {
                    lift_sym_gl_even(ctx, q, a, &k, shape.0)
                };
                let Some((out, k2)) = lifted(r)? else { return Ok(None) };
                (input, eis_cong_gl(ctx, q, &out, &k2)?)
            }
            LiftKind::EndoscopicU => {
                let mut summands = Vec::new();
                for n in [shape.0, shape.1] {
                    let k = LParamU::new(self.param(n))?;
                    let alpha = self.u_weyl(eisenstein_u(ctx, q, &k));
                    let u = self.rng.gen_range(-3..=3);
                    summands.push(USummand { alpha, k, u });
                }
                if negative {
                    if summands.iter().all(|s| s.alpha.is_empty()) {
                        // nothing to perturb; not counted as a negative
                        return Ok(Some((true, true)));
                    }
                    let i = if summands[0].alpha.is_empty() { 1 } else { 0 };
                    self.perturb_first(&mut summands[i].alpha);
                }
                let input = eis_cong_u(ctx, q, &summands[0].alpha, &summands[0].k)?
                    && eis_cong_u(ctx, q, &summands[1].alpha, &summands[1].k)?;
                let Some((out, k)) = lifted(lift_endoscopic_u(ctx, q, &summands[0], &summands[1]))? else {
                    return Ok(None);
                };
                (input, eis_cong_u(ctx, q, &out, &k)?)
            }
            LiftKind::SymU | LiftKind::SymUEven => {
                let k = LParamU::new(self.param(2))?;
                let mut alpha = self.u_weyl(eisenstein_u(ctx, q, &k));
                if negative {
                    self.perturb_first(&mut alpha);
                }
                let input = eis_cong_u(ctx, q, &alpha, &k)?;
                let r = if kind == LiftKind::SymU {
                    lift_sym_u(ctx, alpha[0], &k, shape.0)
                } else {
                    lift_sym_u_even(ctx, q, alpha[0], &k, shape.0)
                };
                let Some((out, k2)) = lifted(r)? else { return Ok(None) };
                (input, eis_cong_u(ctx, q, &out, &k2)?)
            }
            LiftKind::Yoshida | LiftKind::SaitoKurokawa => {
                let (k, k2) = if kind == LiftKind::Yoshida {
                    let k = self.rng.gen_range(1..=10);
                    (k, self.rng.gen_range(0..=(k - 1) / 2) * 2 + 1 + (k + 1) % 2)
                } else {
                    (self.rng.gen_range(1..=6) * 2, 2)
                };
                let mut a = self.gl2_alpha(k)?;
                let b = self.gl2_alpha(k2)?;
                if negative {
                    a = self.perturb_gl2(a);
                }
                let one = gf.one();
                let input = eis_cong_gl2(ctx, q, a, k, one, one)? && eis_cong_gl2(ctx, q, b, k2, one, one)?;
                let r = if kind == LiftKind::Yoshida {
                    lift_yoshida(ctx, a, k, b, k2)
                } else {
                    lift_saito_kurokawa(ctx, q, a, k)
                };
                let Some((beta, w)) = lifted(r)? else { return Ok(None) };
                (input, eis_cong_gsp4(ctx, q, &beta, w)?)
            }
            LiftKind::SymCube => {
                let k = self.rng.gen_range(1..=8);
                let mut a = self.gl2_alpha(k)?;
                if negative {
                    a = self.perturb_gl2(a);
                }
                let input = eis_cong_gl2(ctx, q, a, k, gf.one(), gf.one())?;
                let Some((beta, w)) = lifted(lift_sym_cube(ctx, a, k))? else { return Ok(None) };
                (input, eis_cong_gsp4(ctx, q, &beta, w)?)
            }
            LiftKind::G2 => {
                let c = self.rng.gen_range(0..5) * 2 + 1;
                let d = self.rng.gen_range(0..5) * 2 + 1;
                let b1 = self.gl2_alpha(c + 1)?[0];
                let b2 = self.gl2_alpha(d + 1)?[0];
                let b1 = if negative { gf.mul(&b1, &self.unit()) } else { b1 };
                let input = eis_cong_pgl2(ctx, q, b1, c + 1)? && eis_cong_pgl2(ctx, q, b2, d + 1)?;
                let Some((alpha, w)) = lifted(lift_g2(ctx, b1, c, b2, d))? else { return Ok(None) };
                (input, eis_cong_g2(ctx, q, &alpha, w)?)
            }
        }))
    }
}

/// Runs `samples` congruent draws and `samples` perturbed draws.
pub fn run_transport(kind: LiftKind, config: Config, samples: usize, seed: u64) -> Result<TransportOutcome> {
    let ctx = build_context(config.p, &[(config.q, true)], &[])?;
    let mut s = Sampler { ctx: &ctx, q: config.q, rng: ChaCha8Rng::seed_from_u64(seed) };
    let mut out = TransportOutcome {
        kind,
        config,
        samples,
        inputs_congruent: 0,
        outputs_congruent: 0,
        negatives: 0,
        negatives_rejected: 0,
    };
    for negative in [false, true] {
        for _ in 0..samples {
            let mut attempts = 0;
            let (input, output) = loop {
                if let Some(r) = s.draw(kind, config.shape, negative)? {
                    break r;
                }
                attempts += 1;
                if attempts > MAX_ATTEMPTS {
                    return Err(LocalError::Precondition(format!(
                        "{}: no admissible draw for {:?} after {MAX_ATTEMPTS} attempts",
                        kind.name(),
                        config
                    )));
                }
            };
            if !negative {
                out.inputs_congruent += input as usize;
                out.outputs_congruent += output as usize;
            } else if !input {
                out.negatives += 1;
                out.negatives_rejected += !output as usize;
            }
        }
    }
    Ok(out)
}

/// All configurations of all lifts.
pub fn run_all(samples: usize, seed: u64) -> Result<Vec<TransportOutcome>> {
    let mut v = Vec::new();
    for (i, kind) in LiftKind::ALL.iter().enumerate() {
        for (j, c) in configurations(*kind).into_iter().enumerate() {
            v.push(run_transport(*kind, c, samples, seed ^ ((i as u64) << 32) ^ j as u64)?);
        }
    }
    Ok(v)
}
