//! One PASS/FAIL line per acceptance criterion. Exits nonzero on failure
//! only when ACCEPTANCE_STRICT=1, so the workspace test run records every
//! line rather than stopping at the first failure.

use brandt::gl2_pipeline;
use exactnum::{bernoulli, factor_numerator, gen_bernoulli, BigRational, PrimeIdealSpec, QuadraticCharacter, QuadraticRingElem};
use heckemod::import::{validate_trivial_row, PlaceKind, Q5_U3_TABLES};
use heckemod::{compare_with_trivial, congruence_module_invariants, detect_eis_congruences, groups_of_order, import_hecke_json, mass_of, GroupFamily};
use localcong::predicates::{c1_g2, c1_gsp4, c2_g2, c2_gsp4, eisenstein_g2, eisenstein_gsp4};
use localcong::{build_context, G2Weight, Gsp4Weight};
use masses::{mass_g2, mass_unitary_field, Family, MassSpec};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};
use symfunc::{coset_count_oracle, hecke_degree_gl, Partition};

type Outcome = (bool, String);

fn r(n: i64, d: i64) -> BigRational {
    exactnum::rat(n, d)
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let (ok, msg) = f();
    let el = t.elapsed();
    let within = el <= limit;
    (ok && within, format!("{msg}; {:.2?} (limit {:?}){}", el, limit, if within { "" } else { " — TOO SLOW" }))
}

fn unitary_field(disc: i64, n: u32, ell: u64) -> BigRational {
    let mut s = MassSpec::new(Family::UnitaryField);
    s.disc = Some(disc);
    s.n = n;
    s.ell = ell;
    mass_unitary_field(&s).unwrap().value().clone()
}

fn c1_masses() -> Outcome {
    timed(Duration::from_secs(1), || {
        let a = unitary_field(-4, 3, 5);
        let b = unitary_field(-19, 3, 1);
        (a == r(31, 384) && b == r(11, 48), format!("ℚ(i), n=3, ℓ=5 → {a}; ℚ(√−19), n=3, ℓ=1 → {b}"))
    })
}

fn c2_g2_mass() -> Outcome {
    timed(Duration::from_secs(1), || {
        let m = mass_g2(&MassSpec::new(Family::G2)).unwrap().value().clone();
        (m == r(1, 6048), format!("G₂ over ℚ, S = ∅ → {m}"))
    })
}

fn c3_bernoulli() -> Outcome {
    timed(Duration::from_secs(1), || {
        let chi = QuadraticCharacter::new(-4).unwrap();
        let divides = |n: u32, p: u64| factor_numerator(&gen_bernoulli(n, &chi), 10_000).unwrap().divides_numerator(p);
        let checks = [
            ("61 | B_{7,χ₋₄}", divides(7, 61)),
            ("19 | B_{11,χ₋₄}", divides(11, 19)),
            ("277 | B_{9,χ₋₄}", divides(9, 277)),
            ("2659 | B_{9,χ₋₄}", divides(9, 2659)),
            ("691 | B₁₂", factor_numerator(&bernoulli(12), 10_000).unwrap().divides_numerator(691)),
        ];
        let b13 = factor_numerator(&gen_bernoulli(13, &chi), 10_000).unwrap();
        let resolved = b13.divides_numerator(43) && b13.divides_numerator(967) && !b13.divides_numerator(97);
        let ok = checks.iter().all(|c| c.1) && resolved;
        let mut msg: Vec<String> = checks.iter().map(|(n, b)| format!("{n}: {b}")).collect();
        msg.push(format!("2659 | B_{{11,χ₋₄}}: {}", divides(11, 2659)));
        msg.push(format!("B_{{13,χ₋₄}} numerator primes {:?} (43·967, not 97)", b13.numerator_factors));
        (ok, msg.join(", "))
    })
}

fn brandt_case(d: u64, p: u64, units: &[u64], pgl_mass: &str, limit: Duration) -> Outcome {
    timed(limit, || {
        let rep = gl2_pipeline(d, 1, 20).unwrap();
        let mut u = rep.unit_orders.clone();
        u.sort();
        let rows = rep.space.operators.iter().all(|o| {
            let q: i64 = o.name[1..].parse().unwrap();
            o.matrix.iter().all(|row| row.iter().sum::<i64>() == q + 1)
        });
        let cong = rep.congruences.iter().any(|c| c.p == p && c.k == 1);
        let ok = u == units && rep.mass == pgl_mass && rows && cong && rep.operators_up_to_20();
        (ok, format!("D={d}: h={}, |O^×|={:?}, PGL mass {}, row sums q+1: {rows}, mod-{p} system: {cong}", rep.h, u, rep.mass))
    })
}

trait Ops {
    fn operators_up_to_20(&self) -> bool;
}

impl Ops for brandt::PipelineReport {
    fn operators_up_to_20(&self) -> bool {
        let want: Vec<String> = [2u64, 3, 5, 7, 11, 13, 17, 19].iter().filter(|q| (self.disc * self.level) % *q != 0).map(|q| format!("T{q}")).collect();
        self.space.operators.iter().map(|o| o.name.clone()).collect::<Vec<_>>() == want
    }
}

fn c4_brandt() -> Outcome {
    let a = brandt_case(11, 5, &[4, 6], "5/6", Duration::from_secs(30));
    let b = brandt_case(23, 11, &[2, 4, 6], "11/6", Duration::from_secs(60));
    (a.0 && b.0, format!("{}; {}", a.1, b.1))
}

fn c5_mass_variants() -> Outcome {
    let mut ok = true;
    let mut msg = Vec::new();
    for d in [2u64, 11, 23, 47] {
        let rep = gl2_pipeline(d, 1, 7).unwrap();
        ok &= rep.eichler_mass_matches && !rep.gl2_matches.is_empty();
        msg.push(format!("D={d}: Σ1/|O^×| = {} ({}), variant {:?}", rep.eichler_mass, rep.eichler_mass_matches, rep.gl2_matches));
    }
    (ok, msg.join("; "))
}

fn c6_degree_oracle() -> Outcome {
    timed(Duration::from_secs(60), || {
        let mut cases = 0;
        let mut bad = Vec::new();
        for n in 1..=3usize {
            for parts in [vec![], vec![1], vec![2], vec![1, 1], vec![3], vec![2, 1], vec![1, 1, 1]] {
                if parts.len() > n {
                    continue;
                }
                let l = Partition::new(parts).unwrap();
                for q in [2u64, 3, 5] {
                    cases += 1;
                    let a = hecke_degree_gl(&l, n, q).unwrap();
                    let b = coset_count_oracle(&l, n, q).unwrap();
                    if a != b.into() {
                        bad.push(format!("{l} n={n} q={q}: {a} vs {b}"));
                    }
                }
            }
        }
        (bad.is_empty() && cases >= 27, format!("{cases} cases, mismatches {bad:?}"))
    })
}

fn c7_trivial_degrees() -> Outcome {
    let mut bad = Vec::new();
    for q in [2u64, 3, 5, 7] {
        if GroupFamily::U3.trivial_degree(PlaceKind::Split, q) != (q * q + q + 1) as i64 {
            bad.push(format!("U(3) split q={q}"));
        }
        if GroupFamily::U2.trivial_degree(PlaceKind::Split, q) != (q + 1) as i64 {
            bad.push(format!("U(2) split q={q}"));
        }
        let ctx = build_context(1_000_003, &[(q, true)], &[]).unwrap();
        let e = eisenstein_gsp4(&ctx, q, Gsp4Weight { k1: 3, k2: 3 }).unwrap();
        let pw = |k: u32| q.pow(k);
        if c1_gsp4(&ctx, q, &e).unwrap() != ctx.q(pw(3) + pw(2) + q + 1) || c2_gsp4(&ctx, q, &e) != ctx.q(pw(4) + pw(3) + pw(2) + q) {
            bad.push(format!("GSp(4) q={q}"));
        }
        let g = eisenstein_g2(&ctx, q, G2Weight { a: 4, b: 2 }).unwrap();
        let c1 = (1..=6).map(pw).sum::<u64>();
        let c2 = (5..=10).map(pw).sum::<u64>();
        if c1_g2(&ctx, q, &g).unwrap() != ctx.q(c1) || c2_g2(&ctx, q, &g).unwrap() != ctx.q(c2) {
            bad.push(format!("G₂ q={q}"));
        }
    }
    (bad.is_empty(), format!("U(3), U(2), GSp(4) at (3,3), G₂ at (4,2) for q ∈ {{2,3,5,7}}; mismatches {bad:?}"))
}

fn c8_transport() -> Outcome {
    let all = localcong::transport::run_all(500, 0x5eed).unwrap();
    let failed: Vec<String> = all.iter().filter(|o| !o.all_transported()).map(|o| format!("{} {:?}", o.kind.name(), o.config)).collect();
    let kinds: std::collections::BTreeSet<&str> = all.iter().map(|o| o.kind.name()).collect();
    let samples: usize = all.iter().map(|o| o.samples).sum();
    (failed.is_empty(), format!("{} configurations over {} lifts, {samples} congruent samples; failures {failed:?}", all.len(), kinds.len()))
}

fn c9_congruence_modules() -> Outcome {
    timed(Duration::from_secs(10), || {
        let mut total = 0;
        let mut bad = Vec::new();
        for n in 1..=24 {
            for h in groups_of_order(n) {
                total += 1;
                let c = congruence_module_invariants(&h).unwrap();
                if c != h.invariant_factors() {
                    bad.push(format!("{:?} → {c:?}", h.invariant_factors()));
                }
            }
        }
        (bad.is_empty(), format!("{total} groups, {} agree; disagreements {bad:?}", total - bad.len()))
    })
}

fn c10_import() -> Outcome {
    let imp = import_hecke_json(Q5_U3_TABLES).unwrap();
    let row = validate_trivial_row(&imp.eigendata, GroupFamily::U3).is_ok();
    let degs: Vec<i64> = imp.eigendata.iter().map(|o| o.degree.unwrap()).collect();
    let degs_ok = degs == [183, 307, 871, 1407, 84, 2408, 14652, 130340];
    let p31 = PrimeIdealSpec::from_generator(&QuadraticRingElem::new(5, 1, 5, true).unwrap()).unwrap();
    let cmp = compare_with_trivial(&imp.eigendata, GroupFamily::U3, &p31).unwrap();
    let cong: Vec<&str> = cmp.iter().filter(|c| c.congruent).map(|c| c.operator.as_str()).collect();
    let not: Vec<String> = cmp.iter().filter(|c| !c.congruent).map(|c| format!("{} ({} vs {})", c.operator, c.residues.0, c.residues.1)).collect();
    let control = PrimeIdealSpec { p: 7, residue_degree: 2, root: None };
    let ctl = compare_with_trivial(&imp.eigendata, GroupFamily::U3, &control).unwrap();
    let ctl_ok = ctl.iter().any(|c| !c.congruent);
    let ok = row && degs_ok && cong.len() == 8 && ctl_ok;
    (ok, format!("𝟙-row valid: {row}, degrees {degs:?}; congruent at the norm-31 prime: {}/8, not congruent: {not:?}; control prime over 7 rejects: {ctl_ok}", cong.len()))
}

fn c11_corpus() -> Outcome {
    let mut spaces: Vec<(String, heckemod::WeightedClassSpace)> =
        heckemod::synthetic::corpus().unwrap().into_iter().map(|f| (f.label, f.space)).collect();
    let synthetic = spaces.len();
    for (d, m) in [(2u64, 1u64), (11, 1), (23, 1), (37, 1), (47, 1), (11, 3), (5, 7)] {
        spaces.push((format!("brandt D={d} M={m}"), gl2_pipeline(d, m, 7).unwrap().space));
    }
    let mut checked = 0;
    let mut bad = Vec::new();
    for (label, s) in &spaces {
        let mass = mass_of(s);
        let (f, _) = exactnum::factor_integer(mass.numer(), 1 << 20);
        for (p, _) in f {
            checked += 1;
            if detect_eis_congruences(s, p).map(|v| v.is_empty()).unwrap_or(true) {
                bad.push(format!("{label} p={p}"));
            }
        }
    }
    (bad.is_empty() && synthetic == 20, format!("{} spaces ({synthetic} synthetic), {checked} (space, p) pairs; failures {bad:?}", spaces.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("unitary masses 31/384 and 11/48", c1_masses),
        ("G₂ mass 1/6048", c2_g2_mass),
        ("Bernoulli divisibilities", c3_bernoulli),
        ("Brandt pipeline D=11 and D=23", c4_brandt),
        ("Eichler mass and GL₂ variant", c5_mass_variants),
        ("degree oracle", c6_degree_oracle),
        ("trivial-representation degrees", c7_trivial_degrees),
        ("lift transport, 500 samples", c8_transport),
        ("congruence modules, |H| ≤ 24", c9_congruence_modules),
        ("ℚ(√5) table import", c10_import),
        ("p | mass ⟹ congruence, corpus", c11_corpus),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (ok, msg) = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let m = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default();
            (false, format!("panicked: {m}"))
        });
        failures += !ok as usize;
        println!("{} criterion {:>2} — {name}: {msg}", if ok { "PASS" } else { "FAIL" }, i + 1);
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 && std::env::var("ACCEPTANCE_STRICT").as_deref() == Ok("1") {
        std::process::exit(1);
    }
}
