use heckemod::congmod::{rational_characters, ramanujan_sum};
use heckemod::*;

#[test]
fn small_examples() {
    assert_eq!(congruence_module_invariants(&AbelianGroup::new(vec![2]).unwrap()).unwrap(), vec![2]);
    assert_eq!(congruence_module_invariants(&AbelianGroup::new(vec![]).unwrap()).unwrap(), Vec::<u64>::new());
}

#[test]
fn cyclic_groups_up_to_24() {
    for n in 2..=24 {
        let h = AbelianGroup::new(vec![n]).unwrap();
        assert_eq!(congruence_module_invariants(&h).unwrap(), h.invariant_factors(), "ℤ/{n}");
    }
}

// X(ℤ) → ℤ/|H|, φ ↦ Σφ, has kernel exactly ℤ𝟙 ⊕ X_0(ℤ): the quotient is
// always cyclic of order |H|, whatever the structure of H.
#[test]
fn quotient_is_cyclic_of_order_h() {
    for n in 1..=24 {
        for h in groups_of_order(n) {
            let inv = congruence_module_invariants(&h).unwrap();
            let expect: Vec<u64> = if n == 1 { vec![] } else { vec![n] };
            assert_eq!(inv, expect, "{:?}", h.cyclic_orders);
        }
    }
}

#[test]
fn rational_characters_are_orthogonal() {
    for n in 1..=24 {
        for h in groups_of_order(n) {
            let c = rational_characters(&h);
            for (i, a) in c.iter().enumerate() {
                for b in &c[i + 1..] {
                    assert_eq!(a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>(), 0);
                }
            }
        }
    }
    assert_eq!(ramanujan_sum(12, 4), -2);
}
