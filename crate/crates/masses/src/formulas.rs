use crate::report::MassReport;
use crate::spec::{Family, LevelPlace, MassSpec, SpLocal};
use crate::{MassError, Result};
use exactnum::bernoulli::zeta_neg_odd;
use exactnum::factor::{factor_u64, is_prime_u64};
use exactnum::rat::{self, BigInt, BigRational};
use exactnum::{bernoulli, gen_bernoulli, hilbert_symbol, kronecker, l_value_neg, QuadraticCharacter};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn q(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn qpow(base: u64, e: u32) -> BigRational {
    q(base).pow(e as i32)
}

fn two_pow(e: i64) -> BigRational {
    rat::pow(&rat::int(2), e)
}

fn expect(spec: &MassSpec, fam: Family) -> Result<()> {
    if spec.family != fam {
        return Err(MassError::WrongFamily { expected: fam.name(), got: spec.family });
    }
    Ok(())
}

fn pre(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(MassError::Precondition(msg.into()))
    }
}

fn check_places(qs: &[u64]) -> Result<()> {
    for &v in qs {
        pre(v >= 2, format!("residue size {v} < 2"))?;
    }
    Ok(())
}

fn character(spec: &MassSpec) -> Result<QuadraticCharacter> {
    let d = spec.disc.ok_or_else(|| MassError::MissingData("discriminant of E".into()))?;
    Ok(QuadraticCharacter::new(d)?)
}

/// Residue sizes of Ram_f(E): explicit list, or the primes of D over ℚ.
fn ramified_e(spec: &MassSpec) -> Result<Vec<u64>> {
    if !spec.ramified_e.is_empty() || spec.d() > 1 {
        check_places(&spec.ramified_e)?;
        return Ok(spec.ramified_e.clone());
    }
    Ok(character(spec)?.ramified_primes())
}

fn parse_list(list: &Option<Vec<String>>, idx: usize, what: &str) -> Result<BigRational> {
    let s = list
        .as_ref()
        .and_then(|l| l.get(idx))
        .ok_or_else(|| MassError::MissingData(format!("{what} #{}", idx + 1)))?;
    Ok(rat::parse(s)?)
}

/// L(1−r, χ^r), computed over ℚ and read from `MassSpec::l_values` otherwise.
fn l_value(spec: &MassSpec, r: u32) -> Result<BigRational> {
    if spec.d() == 1 {
        Ok(l_value_neg(r, &character(spec)?))
    } else {
        parse_list(&spec.l_values, r as usize - 1, "L(1-r, chi^r)")
    }
}

/// ζ_F(1−2r).
fn zeta(spec: &MassSpec, r: u32) -> Result<BigRational> {
    if spec.d() == 1 {
        Ok(zeta_neg_odd(r))
    } else {
        parse_list(&spec.zeta_values, r as usize - 1, "zeta_F(1-2r)")
    }
}

/// χ(ℓ) for a prime ℓ unramified in E.
fn chi_ell(spec: &MassSpec, ell: u64) -> Result<i32> {
    pre(is_prime_u64(ell), format!("l = {ell} is neither 1 nor prime"))?;
    if spec.d() > 1 {
        let c = spec.chi_ell.ok_or_else(|| MassError::MissingData("chi(l) for d > 1".into()))?;
        pre(c == 1 || c == -1, "chi(l) must be +1 or -1")?;
        return Ok(c);
    }
    let c = kronecker(character(spec)?.discriminant, ell as i64);
    pre(c != 0, format!("l = {ell} ramifies in E"))?;
    Ok(c)
}

/// (ℓⁿ − χ(ℓ)ⁿ)/(ℓ − χ(ℓ)); 1 when ℓ = 1.
fn ell_factor(spec: &MassSpec, n: u32) -> Result<BigRational> {
    let ell = spec.ell();
    if ell == 1 {
        return Ok(BigRational::one());
    }
    let c = rat::int(chi_ell(spec, ell)? as i64);
    let l = q(ell);
    Ok((l.pow(n as i32) - c.pow(n as i32)) / (l - c))
}

/// λ_v(n) at a place ramified in E.
fn lambda_ramified(spec: &MassSpec, n: u32, qv: u64) -> Result<BigRational> {
    if n % 2 == 1 {
        return Ok(rat::rat(1, 2));
    }
    let is_norm = match spec.norm_condition.get(&qv) {
        Some(&b) => b,
        None if spec.d() == 1 => {
            let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
            hilbert_symbol(sign, character(spec)?.discriminant, qv) == 1
        }
        None => return Err(MassError::MissingData(format!("norm condition at q = {qv}"))),
    };
    if is_norm {
        Ok(BigRational::one())
    } else {
        Ok(rat::rat(1, 2) * (qpow(qv, n) - q(1)) / (q(qv) + q(1)))
    }
}

fn disjoint(sets: &[&[u64]]) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for s in sets {
        for &v in *s {
            pre(seen.insert(v), format!("place {v} listed twice"))?;
        }
    }
    Ok(())
}

pub fn mass_unitary_division(spec: &MassSpec) -> Result<MassReport> {
    expect(spec, Family::UnitaryDivision)?;
    let n = spec.n;
    pre(n % 2 == 1, "n must be odd")?;
    pre(!spec.ramified_a.is_empty(), "Ram_f(A) must be nonempty")?;
    check_places(&spec.ramified_a)?;
    check_places(&spec.special_places)?;
    let ram_e = ramified_e(spec)?;
    let d = spec.d() as i64;
    let mut m = two_pow(1 - n as i64 * d - ram_e.len() as i64);
    for r in 1..=n {
        m *= l_value(spec, r)?;
    }
    for &qv in &spec.ramified_a {
        for r in 1..n {
            m *= qpow(qv, r) - q(1);
        }
    }
    for &qv in &spec.special_places {
        m *= (qpow(qv, n) + q(1)) / (q(qv) + q(1));
    }
    let mut rep = MassReport::new(spec.family, m)?;
    if spec.d() == 1 && spec.disc == Some(-4) && spec.ramified_a.len() == 1 && spec.special_places.is_empty() {
        let disp = ex_qi_display(n, spec.ramified_a[0]);
        rep = rep.note("ex_qi_display", rat::to_string(&disp));
    }
    Ok(finish(rep, spec))
}

/// The closed form for E = ℚ(i) with A ramified above a single prime ℓ:
/// (1/(2ⁿn!)) ∏ B_{2r} ∏ B_{2r+1,χ} ∏ (ℓ^r − 1), r ≤ m = (n−1)/2 for the
/// Bernoulli factors.
/// It absorbs the factor B_{1,χ} = −1/2 and the 2^{−|Ram_f(E)|} differently
/// from the general formula and comes out twice as large.
pub fn ex_qi_display(n: u32, ell: u64) -> BigRational {
    let chi = QuadraticCharacter { discriminant: -4 };
    let m = (n - 1) / 2;
    let mut fact = BigRational::one();
    for i in 1..=n {
        fact *= q(i as u64);
    }
    let mut v = BigRational::one() / (two_pow(n as i64) * fact);
    for r in 1..=m {
        v *= bernoulli(2 * r) * gen_bernoulli(2 * r + 1, &chi);
    }
    for r in 1..n {
        v *= qpow(ell, r) - q(1);
    }
    v.abs()
}

pub fn mass_unitary_field(spec: &MassSpec) -> Result<MassReport> {
    expect(spec, Family::UnitaryField)?;
    let n = spec.n;
    pre(n >= 1, "n must be positive")?;
    let mut m = two_pow(1 - n as i64 * spec.d() as i64) * ell_factor(spec, n)?;
    for qv in ramified_e(spec)? {
        m *= lambda_ramified(spec, n, qv)?;
    }
    for r in 1..=n {
        m *= l_value(spec, r)?;
    }
    let rep = MassReport::new(spec.family, m)?;
    Ok(finish(rep, spec))
}

pub fn mass_so5(spec: &MassSpec) -> Result<MassReport> {
    expect(spec, Family::So5)?;
    disjoint(&[&spec.s1, &spec.s2, &spec.s3])?;
    for s in [&spec.s1, &spec.s2, &spec.s3] {
        check_places(s)?;
    }
    let size = (spec.s1.len() + spec.s2.len() + spec.s3.len()) as i64;
    let mut m = two_pow(1 - 2 * spec.d() as i64 - size) * (zeta(spec, 1)? * zeta(spec, 2)?).abs();
    for &v in &spec.s1 {
        m *= (q(v) + q(1)) * (qpow(v, 2) + q(1));
    }
    for &v in &spec.s2 {
        m *= qpow(v, 2) - q(1);
    }
    for &v in &spec.s3 {
        m *= qpow(v, 2) + q(1);
    }
    Ok(finish(MassReport::new(spec.family, m)?, spec))
}

pub fn mass_g2(spec: &MassSpec) -> Result<MassReport> {
    expect(spec, Family::G2)?;
    disjoint(&[&spec.s1, &spec.s2])?;
    check_places(&spec.s1)?;
    check_places(&spec.s2)?;
    let mut m = two_pow(-(spec.d() as i64)) * zeta(spec, 1)? * zeta(spec, 3)?;
    for &v in &spec.s1 {
        m *= qpow(v, 4) + qpow(v, 2) + q(1);
    }
    for &v in &spec.s2 {
        m *= qpow(v, 3) + q(1);
    }
    Ok(finish(MassReport::new(spec.family, m)?, spec))
}

/// |G(F_q)|/|B(F_q)| for Sp(2n) and SO(2n+1): ∏(q^{2r}−1)/(q−1)ⁿ.
fn iwahori_index(n: u32, qv: u64) -> BigRational {
    let mut v = BigRational::one();
    for r in 1..=n {
        v *= qpow(qv, 2 * r) - q(1);
    }
    v / (q(qv) - q(1)).pow(n as i32)
}

pub fn mass_sp_or_so(spec: &MassSpec) -> Result<MassReport> {
    let sp = match spec.family {
        Family::Sp2n => true,
        Family::So2n1 => false,
        got => return Err(MassError::WrongFamily { expected: "sp2n | so2n1", got }),
    };
    let n = spec.n;
    pre(n >= 1, "n must be positive")?;
    pre(spec.d() == 1, "only F = Q is supported")?;
    let places: Vec<u64> = spec.sp_places.iter().map(|p| p.q).collect();
    disjoint(&[&places])?;
    check_places(&places)?;
    let tau = if sp { 1 } else { 2 };
    let mut m = q(tau) * two_pow(-(n as i64));
    for r in 1..=n {
        m *= zeta(spec, r)?;
    }
    for place in &spec.sp_places {
        let qv = place.q;
        m *= match &place.local {
            SpLocal::Iwahori => iwahori_index(n, qv),
            SpLocal::GroupOrder => {
                let e = if sp { n * n } else { 2 * n * n + 3 * n };
                let mut v = qpow(qv, e);
                for r in 1..=n {
                    v *= qpow(qv, 2 * r) - q(1);
                }
                v
            }
            SpLocal::MaximalLattice if sp => {
                let mut v = BigRational::one();
                for r in 1..=n {
                    let s = if r % 2 == 0 { q(1) } else { -q(1) };
                    v *= qpow(qv, r) + s;
                }
                v
            }
            SpLocal::MaximalLattice => {
                return Err(MassError::MissingData(format!(
                    "SO(2n+1) maximal-lattice factor at q = {qv} must be given explicitly"
                )))
            }
            SpLocal::Custom { lambda } => rat::parse(lambda)?,
        };
    }
    Ok(finish(MassReport::new(spec.family, m)?, spec))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Gl2Variant {
    /// (q−1) at split places, (q+1) at ramified places.
    Verbatim,
    /// (q+1) at split places, (q−1) at ramified places.
    Swapped,
}

impl Gl2Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Gl2Variant::Verbatim => "verbatim",
            Gl2Variant::Swapped => "swapped",
        }
    }
}

pub fn mass_gl2(spec: &MassSpec, variant: Gl2Variant) -> Result<MassReport> {
    expect(spec, Family::Gl2Quaternion)?;
    let qs: Vec<u64> = spec.n1.iter().chain(&spec.n2).map(|p| p.q).collect();
    disjoint(&[&qs])?;
    check_places(&qs)?;
    for p in &spec.n2 {
        pre(p.r % 2 == 1, format!("level exponent at ramified place {} must be odd", p.q))?;
    }
    let (s1, s2) = match variant {
        Gl2Variant::Verbatim => (-1, 1),
        Gl2Variant::Swapped => (1, -1),
    };
    let n1: Vec<&LevelPlace> = spec.n1.iter().filter(|p| p.r > 0).collect();
    let e = 1 - spec.d() as i64 - spec.e2_narrow as i64 - n1.len() as i64;
    let mut m = two_pow(e) * zeta(spec, 1)?.abs();
    for p in n1 {
        m *= qpow(p.q, p.r - 1) * (q(p.q) + rat::int(s1));
    }
    for p in &spec.n2 {
        m *= qpow(p.q, p.r - 1) * (q(p.q) + rat::int(s2));
    }
    let rep = MassReport::new(spec.family, m)?.note("variant", variant.name());
    Ok(finish(rep, spec))
}

pub fn mass_gl2_both(spec: &MassSpec) -> Result<(MassReport, MassReport)> {
    Ok((mass_gl2(spec, Gl2Variant::Verbatim)?, mass_gl2(spec, Gl2Variant::Swapped)?))
}

/// Σ 1/|O_i^×| over the right classes of an Eichler order of level M in the
/// quaternion algebra over ℚ of discriminant D = ∏ ram:
/// (1/24) ∏_{p|D}(p−1) ∏_{p^r‖M} p^{r−1}(p+1).
pub fn eichler_mass_q(ram: &[u64], level: &[LevelPlace]) -> BigRational {
    let mut m = rat::rat(1, 24);
    for &p in ram {
        m *= q(p) - q(1);
    }
    for l in level.iter().filter(|l| l.r > 0) {
        m *= qpow(l.q, l.r - 1) * (q(l.q) + q(1));
    }
    m
}

fn bernoulli_denominator_inverse(two_m: u64) -> BigRational {
    // ∏ 1/q over primes q with (q−1) | 2m
    let mut v = BigRational::one();
    for dv in 1..=two_m {
        if two_m % dv == 0 && is_prime_u64(dv + 1) {
            v /= q(dv + 1);
        }
    }
    v
}

pub fn mass_wtk(spec: &MassSpec) -> Result<MassReport> {
    expect(spec, Family::Wtk)?;
    let k = spec.n;
    pre(k >= 2, "k must be at least 2")?;
    pre(spec.d() == 1, "weight-k quantity is defined over Q")?;
    let chi = character(spec)?;
    pre(chi.discriminant < 0, "E must be imaginary quadratic")?;
    let ram = ramified_e(spec)?;
    let lf = ell_factor(spec, k)?;
    let mut fact = BigRational::one();
    for i in 1..=k {
        fact *= q(i as u64);
    }
    let mut m = lf.clone() / (two_pow(k as i64 - 1) * fact);
    for &qv in &ram {
        m *= lambda_ramified(spec, k, qv)?;
    }
    for r in 1..=k {
        m *= gen_bernoulli(r, &chi.pow(r));
    }
    let mut rep = MassReport::new(spec.family, m)?;

    let odd = k % 2 == 1;
    let delta = if odd { ram.len() as i64 } else { 0 };
    let p_d = if odd && ram.len() == 1 { ram[0] } else { 1 };
    let mut part_i = BigRational::one() / (two_pow(k as i64 - 1 + delta) * qpow(p_d, (k - 1) / 2));
    for m in 1..=(k - 1) / 2 {
        part_i *= bernoulli_denominator_inverse(2 * m as u64);
    }
    part_i *= gen_bernoulli(k, &chi.pow(k)) / q(k as u64);
    rep = note_quantity(rep, "refined_i", &part_i);
    if k >= 3 && spec.ell() > 1 {
        let mut part_ii = BigRational::one() / (two_pow(k as i64 - 1 + delta) * qpow(p_d, (k + 1) / 2));
        for m in 1..=k / 2 {
            part_ii *= bernoulli_denominator_inverse(2 * m as u64);
        }
        part_ii *= lf;
        rep = note_quantity(rep, "refined_ii", &part_ii);
    }
    Ok(finish(rep, spec))
}

fn note_quantity(rep: MassReport, key: &str, x: &BigRational) -> MassReport {
    let primes = if x.is_zero() {
        String::new()
    } else {
        let (f, _) = exactnum::factor_integer(x.numer(), crate::report::FACTOR_BOUND);
        f.iter().map(|(p, e)| format!("{p}^{e}")).collect::<Vec<_>>().join(" ")
    };
    rep.note(key, rat::to_string(&x.abs())).note(&format!("{key}_numerator_primes"), primes)
}

fn squarefree(n: u64) -> bool {
    factor_u64(n).iter().all(|&(_, e)| e == 1)
}

/// (1/45) ∏_{ℓ|N₁}(ℓ²−1) ∏_{ℓ|N₂}(ℓ²+1).
pub fn mass_wt4_conj(n1: u64, n2: u64) -> Result<MassReport> {
    pre(n1 >= 1 && n2 >= 1, "levels must be positive")?;
    pre(squarefree(n1) && squarefree(n2), "levels must be squarefree")?;
    pre(n1.gcd(&n2) == 1, "levels must be coprime")?;
    let f1 = factor_u64(n1);
    pre(f1.len() % 2 == 1, "N1 must have an odd number of prime factors")?;
    let mut m = rat::rat(1, 45);
    for (l, _) in f1 {
        m *= qpow(l, 2) - q(1);
    }
    for (l, _) in factor_u64(n2) {
        m *= qpow(l, 2) + q(1);
    }
    MassReport::new(Family::Wt4, m)
}

/// Whether p divides the numerator of mass / (gcd(n, e1) · h1).
pub fn nonabelian_filter(mass: &BigRational, n: u64, h1: u64, e1: u64, p: u64) -> bool {
    assert!(h1 >= 1 && e1 >= 1, "h1 and e1 must be positive");
    let x = mass / q(n.gcd(&e1) * h1);
    (x.numer() % BigInt::from(p)).is_zero() && !x.is_zero()
}

fn finish(rep: MassReport, spec: &MassSpec) -> MassReport {
    match (spec.h1, spec.e1) {
        (Some(h1), Some(e1)) if h1 >= 1 && e1 >= 1 => rep.with_nonabelian_filters(spec.n.max(1) as u64, h1, e1),
        _ => rep,
    }
}

/// Evaluates the formula selected by `spec.family`. For the quaternionic
/// family this is the verbatim variant, with the swapped value in the notes.
pub fn mass(spec: &MassSpec) -> Result<MassReport> {
    match spec.family {
        Family::UnitaryDivision => mass_unitary_division(spec),
        Family::UnitaryField => mass_unitary_field(spec),
        Family::So5 => mass_so5(spec),
        Family::G2 => mass_g2(spec),
        Family::Sp2n | Family::So2n1 => mass_sp_or_so(spec),
        Family::Gl2Quaternion => {
            let (v, s) = mass_gl2_both(spec)?;
            Ok(v.note("swapped_value", s.value))
        }
        Family::Wtk => mass_wtk(spec),
        Family::Wt4 => mass_wt4_conj(spec.level_n1.max(1), spec.level_n2.max(1)),
    }
}
