//! D, M ↦ classes, Brandt matrices, masses and Eisenstein congruences.

use crate::algebra::{construct_algebra, primes_of, QuaternionAlgebra};
use crate::classes::{brandt_matrix, enumerate_ideal_classes, ClassSet};
use crate::order::{eichler_order, maximal_order};
use crate::{BrandtError, Result};
use heckemod::{detect_eis_congruences, EigensystemModP, Operator, WeightedClassSpace};
use masses::{eichler_mass_q, mass_gl2_both, Family, LevelPlace, MassSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub disc: u64,
    pub level: u64,
    pub algebra: QuaternionAlgebra,
    pub h: usize,
    /// |O_R(I_i)^×|.
    pub unit_orders: Vec<u64>,
    /// |O_R(I_i)^× / ℚ^×| = |O_R(I_i)^×| / 2.
    pub weights: Vec<u64>,
    pub mass: String,
    pub eichler_mass: String,
    pub eichler_mass_matches: bool,
    pub gl2_verbatim: String,
    pub gl2_swapped: String,
    /// Which variants of the GL₂ formula equal which total: "swapped=pgl"
    /// means the swapped variant equals Σ 1/w_i, "…=units" that it equals
    /// Σ 1/|O_R(I_i)^×|.
    pub gl2_matches: Vec<String>,
    pub space: WeightedClassSpace,
    pub congruences: Vec<EigensystemModP>,
}

fn fmt(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// The class set of an Eichler order of level `m` (1 or a prime ∤ D) in the
/// definite algebra of discriminant `d`.
pub fn class_set(d: u64, m: u64) -> Result<ClassSet> {
    let alg = construct_algebra(d)?;
    let o = maximal_order(&alg)?;
    let order = if m == 1 { o } else { eichler_order(&alg, &o, m)? };
    enumerate_ideal_classes(&alg, &order)
}

pub fn gl2_pipeline(d: u64, m: u64, q_bound: u64) -> Result<PipelineReport> {
    let set = class_set(d, m)?;
    let dm = d * m;
    let units = set.weights();
    let weights: Vec<u64> = units.iter().map(|u| u / 2).collect();
    let mut operators = Vec::new();
    for q in (2..=q_bound).filter(|&q| exactnum::factor::is_prime_u64(q) && dm % q != 0) {
        operators.push(Operator { name: format!("T{q}"), matrix: brandt_matrix(&set, q)?, declared_degree: Some(q as i64 + 1) });
    }
    if operators.is_empty() {
        return Err(BrandtError::Input(format!("no prime ≤ {q_bound} is prime to {dm}")));
    }
    let space = WeightedClassSpace::new(weights.clone(), operators, true)?;

    let mass = heckemod::mass_of(&space);
    let ram = primes_of(d);
    let level: Vec<LevelPlace> = primes_of(m).into_iter().map(|q| LevelPlace { q, r: 1 }).collect();
    let em = eichler_mass_q(&ram, &level);
    let mut spec = MassSpec::new(Family::Gl2Quaternion);
    spec.n1 = level;
    spec.n2 = ram.iter().map(|&q| LevelPlace { q, r: 1 }).collect();
    let (verb, swap) = mass_gl2_both(&spec)?;
    let mut gl2_matches = Vec::new();
    for (name, v) in [("verbatim", verb.value()), ("swapped", swap.value())] {
        for (total, t) in [("pgl", &mass), ("units", &em)] {
            if v == t {
                gl2_matches.push(format!("{name}={total}"));
            }
        }
    }

    let mut congruences = Vec::new();
    let num = mass.numer().to_u64().ok_or_else(|| BrandtError::Input("mass numerator too large".into()))?;
    for p in primes_of(num) {
        congruences.extend(detect_eis_congruences(&space, p)?);
    }
    Ok(PipelineReport {
        disc: d,
        level: m,
        algebra: set.alg.clone(),
        h: set.h(),
        unit_orders: units,
        weights,
        mass: fmt(&mass),
        eichler_mass: fmt(&em),
        eichler_mass_matches: em == set.mass() && em * BigRational::from_integer(BigInt::from(2)) == mass,
        gl2_verbatim: verb.value.clone(),
        gl2_swapped: swap.value.clone(),
        gl2_matches,
        space,
        congruences,
    })
}
