use crate::data::{dataset, names, read_input};
use crate::params::{run_check, CheckParams};
use crate::*;
use exactnum::rat;
use exactnum::{PrimeIdealSpec, QuadraticRingElem};
use heckemod::{AbelianGroup, GroupFamily};
use localcong::transport::{configurations, run_transport, LiftKind};
use masses::{Family, LevelPlace, MassSpec};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use symfunc::Partition;

pub fn dispatch(cmd: &Command) -> Result<Value, CliError> {
    match cmd {
        Command::Mass(a) => mass(a),
        Command::Primes(a) => primes(a),
        Command::Satake(a) => satake(a),
        Command::Check(a) => check(&a.input),
        Command::Lift(a) => lift(a),
        Command::Brandt(a) => Ok(serde_json::to_value(brandt::gl2_pipeline(a.disc, a.level, a.bound)?)?),
        Command::Detect(a) => detect(a),
        Command::Untwist(a) => untwist(&a.input),
        Command::Congmod(a) => congmod(&a.orders),
        Command::Data { name } => data(name.as_deref()),
        Command::Run(a) => manifest(&a.input),
    }
}

fn level_places(v: &[String]) -> Result<Vec<LevelPlace>, CliError> {
    v.iter()
        .map(|s| {
            let (q, r) = s.split_once(':').unwrap_or((s, "1"));
            match (q.parse(), r.parse()) {
                (Ok(q), Ok(r)) => Ok(LevelPlace { q, r }),
                _ => Err(CliError::Input(format!("level place {s:?} is not q:r"))),
            }
        })
        .collect()
}

pub fn mass_spec(a: &MassArgs) -> Result<MassSpec, CliError> {
    let mut s: MassSpec = match &a.spec {
        Some(path) => serde_json::from_str(&read_input(path)?)?,
        None => MassSpec::default(),
    };
    if let Some(f) = &a.family {
        s.family = Family::parse(f).ok_or_else(|| CliError::Input(format!("unknown family {f:?}")))?;
    } else if a.spec.is_none() {
        return Err(CliError::Input("give --family or --spec".into()));
    }
    if a.disc.is_some() {
        s.disc = a.disc;
    }
    macro_rules! set {
        ($($f:ident),*) => {$(if let Some(v) = &a.$f { s.$f = v.clone(); })*};
    }
    set!(n, ell, base_degree, ramified_a, s1, s2, s3);
    if a.h1.is_some() {
        s.h1 = a.h1;
    }
    if a.e1.is_some() {
        s.e1 = a.e1;
    }
    if let Some(v) = &a.n1 {
        s.n1 = level_places(v)?;
    }
    if let Some(v) = &a.n2 {
        s.n2 = level_places(v)?;
    }
    Ok(s)
}

fn mass(a: &MassArgs) -> Result<Value, CliError> {
    Ok(serde_json::to_value(masses::mass(&mass_spec(a)?)?)?)
}

fn primes(a: &MassArgs) -> Result<Value, CliError> {
    let spec = mass_spec(a)?;
    let mut rep = masses::mass(&spec)?;
    if let (Some(h1), Some(e1)) = (spec.h1, spec.e1) {
        rep = rep.with_nonabelian_filters(spec.n as u64, h1, e1);
    }
    let primes: Vec<Value> = rep.congruence_primes.iter().map(|(p, d)| json!({ "p": p, "depth": d })).collect();
    Ok(json!({ "family": rep.family, "value": rep.value, "primes": primes, "filters": rep.filters }))
}

fn satake(a: &SatakeArgs) -> Result<Value, CliError> {
    let lambda = Partition::new(a.lambda.clone())?;
    let poly = symfunc::hecke_degree_gl_poly(&lambda, a.n)?;
    let degree = symfunc::hecke_degree_gl(&lambda, a.n, a.q)?;
    let z: BTreeMap<String, String> =
        symfunc::z_basis_gl(&lambda, a.n, a.q)?.iter().map(|(mu, c)| (mu.to_string(), rat::to_string(c))).collect();
    let oracle = symfunc::coset_count_oracle(&lambda, a.n, a.q).ok();
    let mut out = json!({
        "lambda": lambda.parts(),
        "n": a.n,
        "q": a.q,
        "degree_polynomial": poly.to_string(),
        "degree": degree.to_string(),
        "coset_count": oracle,
        "generator_expansion": z,
    });
    match (a.p, &a.alpha) {
        (Some(p), Some(alpha)) => {
            let ctx = localcong::build_context(p, &[(a.q, true)], &[])?;
            let gf = ctx.gf();
            let s = ctx.sqrt_q(a.q)?;
            let al: Vec<_> = alpha.iter().map(|&c| gf.from_i64(c)).collect();
            let value = symfunc::satake_gl(gf, &lambda, &al, a.q, s)?;
            let gens: Vec<String> =
                (1..=al.len()).map(|r| symfunc::gl_generator(gf, r, &al, s).map(|v| gf.fmt(&v))).collect::<Result<_, _>>()?;
            out["evaluation"] = json!({ "p": p, "field": crate::params::field_name(&ctx), "value": gf.fmt(&value), "generators": gens });
        }
        (None, None) => {}
        _ => return Err(CliError::Input("--p and --alpha go together".into())),
    }
    Ok(out)
}

fn check(path: &str) -> Result<Value, CliError> {
    let params: CheckParams = serde_json::from_str(&read_input(path)?)?;
    Ok(serde_json::to_value(run_check(&params)?)?)
}

fn lift(a: &LiftArgs) -> Result<Value, CliError> {
    let kinds: Vec<LiftKind> = match &a.kind {
        Some(k) => vec![*LiftKind::ALL.iter().find(|x| x.name() == k).ok_or_else(|| {
            CliError::Input(format!("unknown lift {k:?}; known: {}", LiftKind::ALL.map(|x| x.name()).join(", ")))
        })?],
        None => LiftKind::ALL.to_vec(),
    };
    let mut outcomes = Vec::new();
    for (i, kind) in kinds.iter().enumerate() {
        for (j, c) in configurations(*kind).into_iter().enumerate() {
            outcomes.push(run_transport(*kind, c, a.samples, a.seed ^ ((i as u64) << 32) ^ j as u64)?);
        }
    }
    let failures = outcomes.iter().filter(|o| !o.all_transported()).count();
    let v = json!({ "outcomes": outcomes, "failures": failures });
    if failures > 0 {
        return Err(CliError::Domain(format!("{failures} configurations failed transport: {}", serde_json::to_string(&v)?)));
    }
    Ok(v)
}

fn detect(a: &DetectArgs) -> Result<Value, CliError> {
    let text = match (&a.input, &a.dataset) {
        (Some(p), _) => read_input(p)?,
        (None, Some(d)) => dataset(d)?,
        (None, None) => return Err(CliError::Input("give --input or --dataset".into())),
    };
    let imp = heckemod::import_hecke_json(&text)?;
    let mut out = json!({});
    if !imp.space.operators.is_empty() {
        let mass = heckemod::mass_of(&imp.space);
        let ps: Vec<u64> = match a.p {
            Some(p) => vec![p],
            None => {
                let (f, _) = exactnum::factor_integer(mass.numer(), 1 << 20);
                f.into_iter().map(|(p, _)| p).collect()
            }
        };
        let mut found = Vec::new();
        for p in ps {
            found.extend(heckemod::detect_eis_congruences(&imp.space, p)?);
        }
        out["mass"] = json!(rat::to_string(&mass));
        out["congruences"] = serde_json::to_value(found)?;
    }
    if !imp.eigendata.is_empty() {
        let fam = GroupFamily::parse(a.family.as_deref().unwrap_or("U3"))?;
        let d = imp.ring_d.ok_or_else(|| CliError::Input("eigenvalue tables need a ring".into()))?;
        let g = match a.prime.as_deref() {
            Some([x, y, h]) => QuadraticRingElem::new(d, *x, *y, *h != 0)?,
            Some(_) => return Err(CliError::Input("--prime is a,b,half".into())),
            None => return Err(CliError::Input("eigenvalue tables need --prime".into())),
        };
        let spec = PrimeIdealSpec::from_generator(&g)?;
        let cmp = heckemod::compare_with_trivial(&imp.eigendata, fam, &spec)?;
        out["prime"] = json!({ "p": spec.p, "residue_degree": spec.residue_degree, "root": spec.root });
        out["all_congruent"] = json!(cmp.iter().all(|c| c.congruent));
        out["comparisons"] = serde_json::to_value(cmp)?;
    }
    Ok(out)
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct UntwistInput {
    values: Vec<Vec<i64>>,
    orbits: Vec<Vec<usize>>,
    p: u64,
    r: u32,
}

fn untwist(path: &str) -> Result<Value, CliError> {
    let i: UntwistInput = serde_json::from_str(&read_input(path)?)?;
    Ok(serde_json::to_value(heckemod::untwist_orbits(&i.values, &i.orbits, i.p, i.r)?)?)
}

fn congmod(orders: &[u64]) -> Result<Value, CliError> {
    let h = AbelianGroup::new(orders.to_vec())?;
    let c = heckemod::congruence_module_invariants(&h)?;
    let inv = h.invariant_factors();
    Ok(json!({
        "group": orders,
        "order": h.order(),
        "group_invariant_factors": inv,
        "invariant_factors": c,
        "isomorphic_to_group": c == inv,
    }))
}

fn data(name: Option<&str>) -> Result<Value, CliError> {
    match name {
        None => Ok(json!({ "datasets": names(), "override_variable": crate::data::DATA_DIR_VAR })),
        Some(n) => Ok(serde_json::from_str(&dataset(n)?)?),
    }
}

fn manifest(path: &str) -> Result<Value, CliError> {
    let jobs: Vec<JobConfig> = serde_json::from_str(&read_input(path)?)?;
    let outcomes: Vec<JobOutcome> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|job| {
                s.spawn(move || {
                    let argv = std::iter::once("hecke".to_string()).chain(job.args.iter().cloned());
                    let r = execute(argv).and_then(|(v, _)| {
                        if let Some(p) = &job.output {
                            std::fs::write(p, render(&v)).map_err(|e| CliError::Input(format!("{p}: {e}")))?;
                        }
                        Ok(v)
                    });
                    match r {
                        Ok(v) => JobOutcome { args: job.args.clone(), exit: 0, result: Some(v), error: None },
                        Err(e) => JobOutcome { args: job.args.clone(), exit: e.code(), result: None, error: Some(e.to_string()) },
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("job thread panicked")).collect()
    });
    Ok(serde_json::to_value(outcomes)?)
}
