use exactnum::Fe;
use localcong::*;
use proptest::prelude::*;

fn ctx(p: u64, q: u64) -> CoefficientField {
    build_context(p, &[(q, true)], &[]).unwrap()
}

/// GSp(4) Weyl generators: swap, and the two inversions.
fn gsp4_weyl(c: &CoefficientField, b: SatakeGSp4, word: &[u8]) -> SatakeGSp4 {
    let gf = c.gf();
    word.iter().fold(b, |b, w| match w % 3 {
        0 => SatakeGSp4 { a0: b.a0, a1: b.a2, a2: b.a1 },
        1 => SatakeGSp4 { a0: gf.mul(&b.a0, &b.a1), a1: gf.inv(&b.a1).unwrap(), a2: b.a2 },
        _ => SatakeGSp4 { a0: gf.mul(&b.a0, &b.a2), a1: b.a1, a2: gf.inv(&b.a2).unwrap() },
    })
}

/// A fixed list of predicate evaluations whose inputs are built from the
/// context's designated √q.
fn example_truths(c: &CoefficientField, q: u64) -> Vec<bool> {
    let gf = c.gf();
    let s = c.sqrt_q(q).unwrap();
    let si = gf.inv(&s).unwrap();
    let one = gf.one();
    let mut out = vec![
        eis_cong_gl2(c, q, [s, si], 2, one, one).unwrap(),
        eis_cong_gl2(c, q, [s, s], 2, one, one).unwrap(),
        eis_cong_pgl2(c, q, gf.pow_u(&s, 3), 4).unwrap(),
        eis_cong_pgl2(c, q, s, 4).unwrap(),
    ];
    let k = LParamGL::new(vec![3, 1, -1, -3]);
    let e = eisenstein_gl(c, q, &k).unwrap();
    out.push(eis_cong_gl(c, q, &e, &k).unwrap());
    let mut bad = e.clone();
    bad[0] = gf.neg(&bad[0]);
    out.push(eis_cong_gl(c, q, &bad, &k).unwrap());
    for (k1, k2) in [(3, 3), (4, 3), (5, 2), (6, 5)] {
        let w = Gsp4Weight { k1, k2 };
        let b = eisenstein_gsp4(c, q, w).unwrap();
        out.push(eis_cong_gsp4(c, q, &b, w).unwrap());
        out.push(eis_cong_gsp4(c, q, &SatakeGSp4 { a0: gf.neg(&b.a0), ..b }, w).unwrap());
    }
    let (b, w) = lift_sym_cube(c, [s, si], 2).unwrap();
    out.push(eis_cong_gsp4(c, q, &b, w).unwrap());
    let (b, w) = lift_saito_kurokawa(c, q, [gf.pow_u(&s, 3), gf.pow_u(&si, 3)], 4).unwrap();
    out.push(eis_cong_gsp4(c, q, &b, w).unwrap());
    let (a, w) = lift_g2(c, gf.pow_u(&s, 3), 3, s, 1).unwrap();
    out.push(eis_cong_g2(c, q, &a, w).unwrap());
    out
}

#[test]
fn negating_the_square_root_changes_nothing() {
    for (p, q) in [(5, 2), (7, 3), (11, 2), (13, 5)] {
        let c = ctx(p, q);
        let d = c.with_negated_sqrt(q).unwrap();
        let t = example_truths(&c, q);
        assert_eq!(t, example_truths(&d, q), "p = {p}, q = {q}");
        assert!(t.iter().any(|&x| x) && t.iter().any(|&x| !x));
    }
}

#[test]
fn gl2_example_congruent_mod_5() {
    // q = 2, p = 5: s(α₁+α₂) = −2 and α₁α₂ = 1 is congruent at weight 2
    let c = ctx(5, 2);
    let gf = c.gf();
    let t = gf.div(&gf.from_i64(-2), &c.sqrt_q(2).unwrap()).unwrap();
    let r = gf.sqrt(&gf.sub(&gf.square(&t), &gf.from_u64(4))).unwrap();
    let h = gf.inv(&gf.from_u64(2)).unwrap();
    let a = [gf.mul(&gf.add(&t, &r), &h), gf.mul(&gf.sub(&t, &r), &h)];
    assert!(eis_cong_gl2(&c, 2, a, 2, gf.one(), gf.one()).unwrap());
    assert!(!eis_cong_gl2(&c, 2, a, 4, gf.one(), gf.one()).unwrap());
}

#[test]
fn unitary_example_with_sqrt5() {
    // U(3), q = 3, p = 31 with √5 ↦ 6: ĉ_(1) = 10 + 2√5 against the trivial 84
    let c = CoefficientField::with_degree(31, 2, &[(3, false)], &[]).unwrap();
    let gf = c.gf();
    let alpha_from_c1 = |c1: i64| {
        // Z̃_1 = ĉ_(1) − (q − 1) = q²(α + α⁻¹)
        let y = gf.div(&gf.from_i64(c1 - 2), &gf.from_u64(9)).unwrap();
        let d = gf.sqrt(&gf.sub(&gf.square(&y), &gf.from_u64(4))).unwrap();
        gf.mul(&gf.add(&y, &d), &gf.inv(&gf.from_u64(2)).unwrap())
    };
    let k = LParamU::trivial(3);
    assert!(eis_cong_u(&c, 3, &[alpha_from_c1(10 + 2 * 6)], &k).unwrap());
    assert!(eis_cong_u(&c, 3, &[alpha_from_c1(84)], &k).unwrap());
    // the conjugate √5 ↦ −6 is not congruent
    assert!(!eis_cong_u(&c, 3, &[alpha_from_c1(10 - 2 * 6)], &k).unwrap());
}

#[test]
fn g2_weights_from_both_orderings() {
    let c = build_context(101, &[(2, true)], &[]).unwrap();
    let gf = c.gf();
    let s = c.sqrt_q(2).unwrap();
    let (a, w) = lift_g2(&c, gf.pow_u(&s, 3), 3, s, 1).unwrap();
    assert_eq!(w, G2Weight { a: 4, b: 2 });
    assert!(eis_cong_g2(&c, 2, &a, w).unwrap());
    let (a2, w2) = lift_g2(&c, s, 1, gf.pow_u(&s, 5), 5).unwrap();
    assert_eq!(w2, G2Weight { a: 6, b: -4 });
    assert!(eis_cong_g2(&c, 2, &a2, w2).unwrap());
    // both are congruent to the trivial parameter at (4, 2)
    assert!(eis_cong_g2(&c, 2, &a2, G2Weight { a: 4, b: 2 }).unwrap());
    assert_eq!(c1_g2(&c, 2, &a).unwrap(), c1_g2(&c, 2, &a2).unwrap());
    assert!(lift_g2(&c, s, 2, s, 1).is_err());
}

#[test]
fn sym_cube_weight_example() {
    let c = ctx(7, 3);
    let gf = c.gf();
    let a = eisenstein_gl(&c, 3, &LParamGL::gl2_weight(3)).unwrap();
    let (b, w) = lift_sym_cube(&c, [a[0], a[1]], 3).unwrap();
    // (k − ½, (k+1)/2) = (5/2, 2) carried as (5, 4)
    assert_eq!(w, Gsp4Weight { k1: 5, k2: 4 });
    assert!(eis_cong_gsp4(&c, 3, &b, w).unwrap());
    assert_eq!(b.a0, gf.pow_u(&a[0], 3));
}

#[test]
fn lift_preconditions() {
    let c = ctx(7, 3);
    let gf = c.gf();
    let one = gf.one();
    let k = LParamGL::gl2_weight(3);
    assert!(lift_sym_gl_even(&c, 3, [one, one], &k, 3).is_err());
    assert!(lift_sym_gl_even(&c, 3, [one, one], &k, 2).is_ok());
    // reordering into 𝕃_4 is impossible when entries collide
    let mk = |t: Vec<i64>, u| GlSummand {
        alpha: eisenstein_gl(&c, 3, &LParamGL::new(t.clone())).unwrap(),
        k: LParamGL::new(t.clone()),
        u,
        beta: c.q_half_pow(3, twice_nu(2, u)).unwrap(),
    };
    let r = lift_isobaric_gl(&c, 3, &mk(vec![3, -3], 0), &mk(vec![3, -3], 0));
    assert!(matches!(r, Err(LocalError::Precondition(_))));
    assert!(lift_isobaric_gl(&c, 3, &mk(vec![3, -3], 0), &mk(vec![1, -1], 0)).is_ok());
    // a wrong β
    let mut bad = mk(vec![1, -1], 1);
    bad.beta = one;
    assert!(lift_isobaric_gl(&c, 3, &mk(vec![3, -3], 0), &bad).is_err());
    assert!(lift_yoshida(&c, [one, one], 4, [one, one], 3).is_err());
    assert!(lift_yoshida(&c, [one, one], 2, [one, one], 4).is_err());
    assert!(lift_yoshida(&c, [one, gf.from_u64(2)], 4, [one, one], 2).is_err());
    assert!(eis_cong_gsp4(&c, 3, &eisenstein_gsp4(&c, 3, Gsp4Weight { k1: 3, k2: 3 }).unwrap(), Gsp4Weight { k1: 2, k2: 1 })
        .is_err());
}

#[test]
fn isobaric_example() {
    // GL(2) ⊕ GL(2), weights 6 and 2 (k > k′, same parity), into GL(4)
    let c = ctx(13, 2);
    let k6 = LParamGL::gl2_weight(6);
    let k2 = LParamGL::gl2_weight(2);
    let sa = GlSummand { alpha: eisenstein_gl(&c, 2, &k6).unwrap(), k: k6, u: 0, beta: c.gf().one() };
    let sb = GlSummand { alpha: eisenstein_gl(&c, 2, &k2).unwrap(), k: k2, u: 0, beta: c.gf().one() };
    let (a, k) = lift_isobaric_gl(&c, 2, &sa, &sb).unwrap();
    assert_eq!(k.twice_k, vec![5, 1, -1, -5]);
    assert!(eis_cong_gl(&c, 2, &a, &k).unwrap());
}

/// Three fixed Hecke polynomials in ĉ₁, ĉ₂.
fn hecke_polys(c: &CoefficientField, x: Fe, y: Fe) -> [Fe; 3] {
    let gf = c.gf();
    [
        gf.sub(&gf.square(&x), &gf.scale(&y, 3)),
        gf.add(&gf.mul(&x, &y), &gf.from_u64(7)),
        gf.sub(&gf.pow_u(&y, 3), &gf.mul(&gf.square(&x), &gf.scale(&y, 2))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gl_predicate_weyl_invariant(
        d in prop::collection::vec(-4i64..5, 3),
        perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
        perm2 in Just(vec![0usize, 1, 2]).prop_shuffle(),
        tweak in 0u64..4,
    ) {
        let c = ctx(11, 2);
        let gf = c.gf();
        let mut d = d;
        d.sort_unstable_by(|a, b| b.cmp(a));
        let twice: Vec<i64> = d.iter().zip(twice_rho(3)).map(|(x, r)| 2 * x + r).collect();
        let k = LParamGL::new(twice.clone());
        let mut e = eisenstein_gl(&c, 2, &k).unwrap();
        e[0] = gf.mul(&e[0], &gf.pow_u(&gf.from_u64(2), tweak));
        let e2: Vec<Fe> = perm.iter().map(|&i| e[i]).collect();
        let k2 = LParamGL::new(perm2.iter().map(|&i| twice[i]).collect());
        let base = eis_cong_gl(&c, 2, &e, &k).unwrap();
        prop_assert_eq!(base, tweak == 0 || gf.pow_u(&gf.from_u64(2), tweak) == gf.one());
        prop_assert_eq!(eis_cong_gl(&c, 2, &e2, &k).unwrap(), base);
        prop_assert_eq!(eis_cong_gl(&c, 2, &e2, &k2).unwrap(), base);
    }

    #[test]
    fn u_predicate_inversion_invariant(
        d in prop::collection::vec(-4i64..5, 4),
        flips in prop::collection::vec(any::<bool>(), 2),
        x in 1u64..13,
    ) {
        let c = ctx(13, 3);
        let gf = c.gf();
        let mut d = d;
        d.sort_unstable_by(|a, b| b.cmp(a));
        let k = LParamU::new(d.iter().zip(twice_rho(4)).map(|(x, r)| 2 * x + r).collect()).unwrap();
        let mut a = eisenstein_u(&c, 3, &k);
        a[1] = gf.mul(&a[1], &gf.from_u64(x));
        let b: Vec<Fe> = a.iter().zip(&flips).map(|(v, &f)| if f { gf.inv(v).unwrap() } else { *v }).collect();
        prop_assert_eq!(eis_cong_u(&c, 3, &a, &k).unwrap(), eis_cong_u(&c, 3, &b, &k).unwrap());
        if x == 1 {
            prop_assert!(eis_cong_u(&c, 3, &b, &k).unwrap());
        }
    }

    #[test]
    fn gsp4_hecke_polynomials_follow_generators(
        k1 in 2i64..9,
        k2 in 2i64..9,
        word in prop::collection::vec(0u8..3, 0..6),
        x in 0u64..5,
    ) {
        prop_assume!(k1 + 1 >= k2);
        let c = ctx(13, 2);
        let gf = c.gf();
        let w = Gsp4Weight { k1, k2 };
        let e = eisenstein_gsp4(&c, 2, w).unwrap();
        let mut b = gsp4_weyl(&c, e, &word);
        b.a2 = gf.mul(&b.a2, &gf.pow_u(&gf.from_u64(2), x));
        let cong = eis_cong_gsp4(&c, 2, &b, w).unwrap();
        let gens = |b: &SatakeGSp4| (c1_gsp4(&c, 2, b).unwrap(), c2_gsp4(&c, 2, b));
        let (x1, x2) = gens(&b);
        let (y1, y2) = gens(&e);
        prop_assert_eq!(cong, x1 == y1 && x2 == y2);
        if x == 0 {
            prop_assert!(cong);
        }
        if cong {
            prop_assert_eq!(hecke_polys(&c, x1, x2), hecke_polys(&c, y1, y2));
        }
    }

    #[test]
    fn g2_predicate_root_reflection_invariant(a in 1i64..5, b in 1i64..5, swap in any::<bool>()) {
        // (a, b) ↦ (b, a) permutes the exponent sets
        let c = build_context(101, &[(3, true)], &[]).unwrap();
        let e = eisenstein_g2(&c, 3, G2Weight { a: 2 * a, b: 2 * b }).unwrap();
        let w = if swap { G2Weight { a: 2 * b, b: 2 * a } } else { G2Weight { a: 2 * a, b: 2 * b } };
        prop_assert!(eis_cong_g2(&c, 3, &e, w).unwrap());
    }
}
