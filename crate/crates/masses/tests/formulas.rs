use exactnum::rat::{self, BigRational};
use masses::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn r(n: i64, d: i64) -> BigRational {
    rat::rat(n, d)
}

fn unitary(family: Family, disc: i64, n: u32) -> MassSpec {
    MassSpec { disc: Some(disc), n, ..MassSpec::new(family) }
}

#[test]
fn unitary_field_examples() {
    let mut s = unitary(Family::UnitaryField, -4, 3);
    s.ell = 5;
    let rep = mass_unitary_field(&s).unwrap();
    assert_eq!(rep.value(), &r(31, 384));
    assert_eq!(rep.congruence_primes, vec![(31, 1)]);
    let rep = mass_unitary_field(&unitary(Family::UnitaryField, -19, 3)).unwrap();
    assert_eq!(rep.value(), &r(11, 48));
    assert_eq!(rep.depth(11), 1);
    let rep = mass_unitary_field(&unitary(Family::UnitaryField, -4, 3)).unwrap();
    assert_eq!(rep.value(), &r(1, 384));
}

#[test]
fn unitary_field_rejects_ramified_ell() {
    let mut s = unitary(Family::UnitaryField, -4, 3);
    s.ell = 2;
    assert!(mass_unitary_field(&s).is_err());
    s.ell = 9;
    assert!(mass_unitary_field(&s).is_err());
}

#[test]
fn unitary_field_even_rank() {
    // (−1, −4)_2 = −1: λ_2(2) = (1/2)(2²−1)/3 = 1/2
    let rep = mass_unitary_field(&unitary(Family::UnitaryField, -4, 2)).unwrap();
    assert_eq!(rep.value(), &r(1, 96));
    // override the norm condition
    let mut s = unitary(Family::UnitaryField, -4, 2);
    s.norm_condition.insert(2, true);
    assert_eq!(mass_unitary_field(&s).unwrap().value(), &r(1, 48));
}

#[test]
fn unitary_division_examples() {
    let mut s = unitary(Family::UnitaryDivision, -4, 3);
    s.ramified_a = vec![5];
    let rep = mass_unitary_division(&s).unwrap();
    assert_eq!(rep.value(), &r(1, 4));
    assert_eq!(rep.notes["ex_qi_display"], "1/2");
    s.ramified_a = vec![13];
    assert_eq!(mass_unitary_division(&s).unwrap().value(), &r(21, 4));
    s.ramified_a = vec![];
    assert!(mass_unitary_division(&s).is_err());
    let mut s = unitary(Family::UnitaryDivision, -4, 4);
    s.ramified_a = vec![5];
    assert!(mass_unitary_division(&s).is_err());
}

#[test]
fn unitary_division_special_places() {
    let mut s = unitary(Family::UnitaryDivision, -4, 3);
    s.ramified_a = vec![5];
    s.special_places = vec![3];
    // (3³+1)/(3+1) = 7
    assert_eq!(mass_unitary_division(&s).unwrap().value(), &r(7, 4));
}

#[test]
fn so5_examples() {
    let mut s = MassSpec::new(Family::So5);
    s.s2 = vec![2];
    assert_eq!(mass_so5(&s).unwrap().value(), &r(1, 1920));
    let mut s = MassSpec::new(Family::So5);
    s.s1 = vec![2];
    assert_eq!(mass_so5(&s).unwrap().value(), &r(1, 384));
    let mut s = MassSpec::new(Family::So5);
    s.s3 = vec![3];
    assert_eq!(mass_so5(&s).unwrap().value(), &r(1, 576));
    s.s1 = vec![3];
    assert!(mass_so5(&s).is_err());
}

#[test]
fn g2_examples() {
    let s = MassSpec::new(Family::G2);
    let rep = mass_g2(&s).unwrap();
    assert_eq!(rep.value(), &r(1, 6048));
    assert!(rep.congruence_primes.is_empty());
    let mut s = MassSpec::new(Family::G2);
    s.s1 = vec![2];
    assert_eq!(mass_g2(&s).unwrap().value(), &r(1, 288));
    let mut s = MassSpec::new(Family::G2);
    s.s2 = vec![2];
    assert_eq!(mass_g2(&s).unwrap().value(), &r(1, 672));
}

#[test]
fn sp_so_examples() {
    let mut s = MassSpec::new(Family::Sp2n);
    s.n = 2;
    assert_eq!(mass_sp_or_so(&s).unwrap().value(), &r(1, 5760));
    s.sp_places = vec![SpPlace { q: 2, local: SpLocal::MaximalLattice }];
    assert_eq!(mass_sp_or_so(&s).unwrap().value(), &r(1, 1152));
    s.sp_places = vec![SpPlace { q: 2, local: SpLocal::GroupOrder }];
    assert_eq!(mass_sp_or_so(&s).unwrap().value(), &r(1, 8));
    // [Sp(4,Z_2) : Iwahori] = 3·15 = 45
    s.sp_places = vec![SpPlace { q: 2, local: SpLocal::Iwahori }];
    assert_eq!(mass_sp_or_so(&s).unwrap().value(), &r(1, 128));

    let mut s = MassSpec::new(Family::So2n1);
    s.n = 2;
    assert_eq!(mass_sp_or_so(&s).unwrap().value(), &r(1, 2880));
    s.sp_places = vec![SpPlace { q: 3, local: SpLocal::MaximalLattice }];
    assert!(mass_sp_or_so(&s).is_err());
    s.sp_places = vec![SpPlace { q: 3, local: SpLocal::Custom { lambda: "10/1".into() } }];
    assert_eq!(mass_sp_or_so(&s).unwrap().value(), &r(1, 288));
}

#[test]
fn gl2_examples() {
    let mut s = MassSpec::new(Family::Gl2Quaternion);
    s.n2 = vec![LevelPlace { q: 11, r: 1 }];
    let (v, w) = mass_gl2_both(&s).unwrap();
    assert_eq!(v.value(), &r(1, 1));
    assert_eq!(w.value(), &r(5, 6));
    assert_eq!(w.notes["variant"], "swapped");
    for p in [5u64, 7, 13] {
        for m in 1..4u32 {
            s.n2 = vec![LevelPlace { q: p, r: 2 * m + 1 }];
            let v = mass_gl2(&s, Gl2Variant::Verbatim).unwrap();
            let expect = rat::pow(&rat::int(p as i64), 2 * m as i64) * rat::int(p as i64 + 1) / rat::int(12);
            assert_eq!(v.value(), &expect);
            assert!(v.depth(p) >= 1);
        }
    }
    s.n2 = vec![LevelPlace { q: 11, r: 2 }];
    assert!(mass_gl2(&s, Gl2Variant::Verbatim).is_err());
}

#[test]
fn eichler_mass() {
    assert_eq!(eichler_mass_q(&[11], &[]), r(5, 12));
    assert_eq!(eichler_mass_q(&[2], &[]), r(1, 24));
    assert_eq!(eichler_mass_q(&[23], &[]), r(11, 12));
    assert_eq!(eichler_mass_q(&[2], &[LevelPlace { q: 3, r: 1 }]), r(1, 6));
}

#[test]
fn wtk_examples() {
    let rep = mass_wtk(&unitary(Family::Wtk, -4, 4)).unwrap();
    assert_eq!(rep.value(), &r(1, 46080));
    let rep = mass_wtk(&unitary(Family::Wtk, -4, 2)).unwrap();
    assert_eq!(rep.value(), &r(1, 96));
    let rep = mass_wtk(&unitary(Family::Wtk, -19, 3)).unwrap();
    assert!(rep.depth(11) >= 1);
    assert!(rep.notes.contains_key("refined_i"));
    let mut s = unitary(Family::Wtk, -19, 3);
    s.ell = 19;
    assert!(mass_wtk(&s).is_err());
    s.ell = 5;
    let rep = mass_wtk(&s).unwrap();
    assert!(rep.notes.contains_key("refined_ii"));
}

#[test]
fn wt4_examples() {
    assert_eq!(mass_wt4_conj(2, 5).unwrap().value(), &r(26, 15));
    assert_eq!(mass_wt4_conj(11, 1).unwrap().value(), &r(8, 3));
    assert_eq!(mass_wt4_conj(2, 1).unwrap().value(), &r(1, 15));
    assert!(mass_wt4_conj(6, 1).is_err());
    assert!(mass_wt4_conj(2, 2).is_err());
    assert!(mass_wt4_conj(4, 1).is_err());
}

#[test]
fn nonabelian_examples() {
    let m = r(31, 384);
    assert!(nonabelian_filter(&m, 3, 1, 1, 31));
    assert!(!nonabelian_filter(&m, 3, 1, 1, 2));
    assert!(!nonabelian_filter(&r(5 * 7, 3), 3, 5, 1, 5));
    assert!(nonabelian_filter(&r(25 * 7, 3), 3, 5, 1, 5));
}

#[test]
fn report_json_and_filters() {
    let mut s = unitary(Family::UnitaryField, -4, 3);
    s.ell = 5;
    s.h1 = Some(1);
    s.e1 = Some(1);
    let rep = mass(&s).unwrap();
    assert_eq!(rep.filters["nonabelian:31"], true);
    let js = serde_json::to_value(&rep).unwrap();
    assert_eq!(js["value"], "31/384");
    assert_eq!(js["mass"]["value"], "31/384");
    assert_eq!(js["family"], "unitary-field");
}

#[test]
fn spec_from_json() {
    let s: MassSpec = serde_json::from_str(
        r#"{"family":"sp2n","n":2,"sp_places":[{"q":2,"kind":"maximal-lattice"}]}"#,
    )
    .unwrap();
    assert_eq!(mass(&s).unwrap().value(), &r(1, 1152));
    assert_eq!(Family::parse("gl2-quaternion"), Some(Family::Gl2Quaternion));
}

#[test]
fn order_independence() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let primes = [2u64, 3, 5, 7, 11, 13, 17, 19];
    let mut so5 = MassSpec::new(Family::So5);
    so5.s1 = vec![2, 3];
    so5.s2 = vec![5, 7, 11];
    so5.s3 = vec![13, 17];
    let mut gl2 = MassSpec::new(Family::Gl2Quaternion);
    gl2.n1 = primes[..4].iter().map(|&q| LevelPlace { q, r: (q % 3) as u32 + 1 }).collect();
    gl2.n2 = primes[4..].iter().map(|&q| LevelPlace { q, r: 1 }).collect();
    let mut ud = unitary(Family::UnitaryDivision, -4, 5);
    ud.ramified_a = vec![5, 13, 17, 29];
    ud.special_places = vec![3, 7];
    let mut sp = MassSpec::new(Family::Sp2n);
    sp.n = 3;
    sp.sp_places = vec![
        SpPlace { q: 2, local: SpLocal::Iwahori },
        SpPlace { q: 3, local: SpLocal::MaximalLattice },
        SpPlace { q: 5, local: SpLocal::GroupOrder },
    ];
    for spec in [so5, gl2, ud, sp] {
        let base = mass(&spec).unwrap();
        for _ in 0..100 {
            let mut t = spec.clone();
            t.s1.shuffle(&mut rng);
            t.s2.shuffle(&mut rng);
            t.s3.shuffle(&mut rng);
            t.n1.shuffle(&mut rng);
            t.n2.shuffle(&mut rng);
            t.ramified_a.shuffle(&mut rng);
            t.special_places.shuffle(&mut rng);
            t.sp_places.shuffle(&mut rng);
            assert_eq!(mass(&t).unwrap(), base);
        }
    }
}

proptest! {
    #[test]
    fn gl2_level_monotone(r1 in 1u32..5, dr in 1u32..4, qi in 0usize..5, swapped in any::<bool>()) {
        let qs = [2u64, 3, 5, 7, 13];
        let variant = if swapped { Gl2Variant::Swapped } else { Gl2Variant::Verbatim };
        let mut s = MassSpec::new(Family::Gl2Quaternion);
        s.n2 = vec![LevelPlace { q: 11, r: 1 }];
        s.n1 = vec![LevelPlace { q: qs[qi], r: r1 }];
        let a = mass_gl2(&s, variant).unwrap();
        s.n1[0].r = r1 + dr;
        let b = mass_gl2(&s, variant).unwrap();
        prop_assert_eq!(b.value(), &(a.value() * rat::pow(&rat::int(qs[qi] as i64), dr as i64)));
    }

    #[test]
    fn split_ell_factor_is_integral(ell in prop::sample::select(vec![5u64, 13, 17, 29, 37, 41, 53, 61]), n in prop::sample::select(vec![1u32, 3, 5, 7])) {
        // primes ≡ 1 mod 4 split in ℚ(i)
        let mut a = unitary(Family::UnitaryField, -4, n);
        a.ell = ell;
        let mut b = a.clone();
        b.ell = 1;
        let ratio = mass_unitary_field(&a).unwrap().value() / mass_unitary_field(&b).unwrap().value();
        let geom: u64 = (0..n).map(|i| ell.pow(i)).sum();
        prop_assert!(rat::is_integer(&ratio));
        prop_assert_eq!(ratio, rat::int(geom as i64));
    }

    #[test]
    fn congruence_primes_match_numerator(s1 in prop::collection::btree_set(2u64..40, 0..3), s2 in prop::collection::btree_set(41u64..80, 0..3)) {
        let mut s = MassSpec::new(Family::G2);
        s.s1 = s1.into_iter().collect();
        s.s2 = s2.into_iter().collect();
        let rep = mass_g2(&s).unwrap();
        let mut prod = num_bigint::BigInt::from(1);
        for &(p, e) in &rep.congruence_primes {
            prop_assert!(e >= 1);
            prop_assert!(exactnum::factor::is_prime_u64(p));
            prod *= num_bigint::BigInt::from(p).pow(e);
        }
        prop_assert_eq!(&prod, rep.value().numer());
    }
}
