use heckemod::untwist::Cyclotomic;
use heckemod::*;
use proptest::prelude::*;

#[test]
fn cube_root_orbit() {
    let r = untwist_orbits(&[vec![1], vec![0, 1], vec![-1, -1]], &[vec![0, 1, 2]], 3, 1).unwrap();
    assert_eq!(r.values, vec![vec![1, 0]; 3]);
    assert!(untwist_orbits(&[vec![1], vec![2]], &[vec![0, 1]], 3, 1).is_err());
    assert!(untwist_orbits(&[vec![1]], &[vec![0], vec![0]], 3, 1).is_err());
}

proptest! {
    #[test]
    fn twisted_orbits_untwist(pi in 0usize..3, r in 1u32..=2, base in proptest::collection::vec(-9i64..9, 1..6), js in proptest::collection::vec(0usize..200, 1..6)) {
        let p = [2u64, 3, 5][pi];
        let z = Cyclotomic::new(p, r).unwrap();
        let vals: Vec<Vec<i64>> = js.iter().map(|&j| z.mul_zeta(&base, j % z.order())).collect();
        let orbit: Vec<usize> = (0..vals.len()).collect();
        let out = untwist_orbits(&vals, &[orbit], p, r).unwrap();
        let first = z.reduce(&vals[0]);
        prop_assert!(out.values.iter().all(|v| *v == first));
        for (v, res) in vals.iter().zip(&out.residues) {
            prop_assert_eq!(z.residue(v), *res);
        }
    }
}
