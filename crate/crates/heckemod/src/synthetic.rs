//! Synthetic weighted class spaces: orbit quotients Γ\X of a finite set X
//! carrying a commuting family of Γ-invariant adjacency operators. The weight
//! of an orbit is the order of a point stabilizer, so the mass is |X|/|Γ|.
//!
//! Two sources of X: Johnson schemes (k-subsets of {0..n}, A_d(x, y) = 1
//! when |x ∩ y| = k − d, Γ ≤ S_n) and circulants (X = ℤ/n, A_S(x, y) = 1
//! when y − x ∈ S, Γ a group of units acting by multiplication, each S a
//! union of Γ-orbits).

use crate::space::{Operator, WeightedClassSpace};
use crate::Result;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeSet, HashSet};

type Perm = Vec<usize>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

/// All elements of the group generated by `gens` (permutations of 0..n).
pub fn closure(n: usize, gens: &[Perm]) -> Vec<Perm> {
    let id: Perm = (0..n).collect();
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(g) = queue.pop() {
        for s in gens {
            let h = compose(s, &g);
            if seen.insert(h.clone()) {
                queue.push(h);
            }
        }
    }
    let mut out: Vec<Perm> = seen.into_iter().collect();
    out.sort();
    out
}

/// Γ\X for Γ given by its action on points (every element listed), with
/// operators A(x, y) summed over y in each target orbit.
pub fn orbit_quotient(points: usize, group: &[Perm], ops: &[(String, Box<dyn Fn(usize, usize) -> i64 + '_>)]) -> Result<WeightedClassSpace> {
    let mut orbit_of = vec![usize::MAX; points];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for x in 0..points {
        if orbit_of[x] != usize::MAX {
            continue;
        }
        let orb: BTreeSet<usize> = group.iter().map(|g| g[x]).collect();
        for &y in &orb {
            orbit_of[y] = orbits.len();
        }
        orbits.push(orb.into_iter().collect());
    }
    let weights: Vec<u64> = orbits.iter().map(|o| (group.len() / o.len()) as u64).collect();
    let operators = ops
        .iter()
        .map(|(name, a)| Operator {
            name: name.clone(),
            matrix: orbits.iter().map(|oi| orbits.iter().map(|oj| oj.iter().map(|&y| a(oi[0], y)).sum()).collect()).collect(),
            declared_degree: None,
        })
        .collect();
    // the weighted adjointness of the quotient reflects symmetry on X
    let symmetric = ops.iter().all(|(_, a)| (0..points).all(|x| (0..x).all(|y| a(x, y) == a(y, x))));
    WeightedClassSpace::new(weights, operators, symmetric)
}

fn subsets(n: usize, k: usize) -> Vec<u32> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).collect()
}

/// Johnson scheme J(n, k) modulo the group generated by `gens` ≤ S_n.
pub fn johnson_quotient(n: usize, k: usize, gens: &[Perm]) -> Result<WeightedClassSpace> {
    let group = closure(n, gens);
    let subs = subsets(n, k);
    let index = |m: u32| subs.binary_search(&m).unwrap();
    let act = |g: &Perm, m: u32| (0..n).filter(|&i| m >> i & 1 == 1).fold(0u32, |acc, i| acc | 1 << g[i]);
    let on_points: Vec<Perm> = group.iter().map(|g| subs.iter().map(|&m| index(act(g, m))).collect()).collect();
    let subs_ref = &subs;
    let ops: Vec<(String, Box<dyn Fn(usize, usize) -> i64>)> = (1..=k)
        .map(|d| {
            let f: Box<dyn Fn(usize, usize) -> i64> =
                Box::new(move |x, y| ((subs_ref[x] & subs_ref[y]).count_ones() as usize == k - d) as i64);
            (format!("A{d}"), f)
        })
        .collect();
    orbit_quotient(subs.len(), &on_points, &ops)
}

/// Circulants on ℤ/n modulo multiplication by the subgroup of units
/// generated by `units`; each connection set is closed under that group.
pub fn circulant_quotient(n: usize, units: &[usize], sets: &[Vec<usize>]) -> Result<WeightedClassSpace> {
    let gens: Vec<Perm> = units.iter().map(|&u| (0..n).map(|x| x * u % n).collect()).collect();
    let group = closure(n, &gens);
    let closed: Vec<BTreeSet<usize>> = sets.iter().map(|s| s.iter().flat_map(|&x| group.iter().map(move |g| g[x % n])).collect()).collect();
    let ops: Vec<(String, Box<dyn Fn(usize, usize) -> i64 + '_>)> = closed
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let f: Box<dyn Fn(usize, usize) -> i64 + '_> = Box::new(move |x, y| s.contains(&((y + n - x) % n)) as i64);
            (format!("S{}", i + 1), f)
        })
        .collect();
    orbit_quotient(n, &group, &ops)
}

#[derive(Clone, Debug)]
pub struct Family {
    pub label: String,
    pub space: WeightedClassSpace,
}

/// The fixed corpus of twenty synthetic families.
pub fn corpus() -> Result<Vec<Family>> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    // Johnson quotients by random subgroups of S_n
    let shapes = [(5, 2), (6, 2), (6, 3), (7, 2), (7, 3), (8, 2), (8, 3), (8, 4), (6, 2), (7, 3)];
    for (idx, &(n, k)) in shapes.iter().enumerate() {
        let ngens = 1 + idx % 2;
        let gens: Vec<Perm> = (0..ngens)
            .map(|_| {
                // a random permutation moving only a few points keeps Γ small
                let moved = rng.gen_range(2..=n.min(5));
                let mut pts: Vec<usize> = (0..n).collect();
                pts.shuffle(&mut rng);
                let mut g: Perm = (0..n).collect();
                let cyc = &pts[..moved];
                for w in 0..moved {
                    g[cyc[w]] = cyc[(w + 1) % moved];
                }
                g
            })
            .collect();
        let space = johnson_quotient(n, k, &gens)?;
        out.push(Family { label: format!("johnson-{n}-{k}-{idx}"), space });
    }
    // circulant quotients
    let circ: [(usize, &[usize], &[&[usize]]); 10] = [
        (10, &[9], &[&[1], &[2]]),
        (12, &[11], &[&[1], &[3]]),
        (15, &[14], &[&[1], &[5]]),
        (14, &[9], &[&[1], &[7]]),
        (9, &[8], &[&[1], &[3]]),
        (20, &[19], &[&[1], &[4], &[10]]),
        (21, &[2], &[&[1], &[3], &[7]]),
        (16, &[15], &[&[1], &[2]]),
        (25, &[24], &[&[1], &[5]]),
        (18, &[17, 5], &[&[1], &[3], &[6]]),
    ];
    for (n, units, sets) in circ {
        debug_assert!(units.iter().all(|u| u.gcd(&n) == 1));
        let sets: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        let space = circulant_quotient(n, units, &sets)?;
        out.push(Family { label: format!("circulant-{n}-{units:?}"), space });
    }
    Ok(out)
}
