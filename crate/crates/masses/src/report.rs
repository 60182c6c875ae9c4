use crate::{Family, MassError, Result};
use exactnum::rat::{self, BigRational};
use exactnum::{factor_numerator, FactoredRational};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

/// Trial-division bound used when factoring masses.
pub const FACTOR_BOUND: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MassReport {
    pub family: Family,
    /// |mass| as "num/den".
    pub value: String,
    pub mass: FactoredRational,
    /// The product before taking absolute values.
    #[serde(with = "exactnum::rat::serde_str")]
    pub signed: BigRational,
    /// (p, v_p(numerator)) for every prime of the numerator.
    pub congruence_primes: Vec<(u64, u32)>,
    pub filters: BTreeMap<String, bool>,
    pub notes: BTreeMap<String, String>,
}

impl MassReport {
    pub fn new(family: Family, signed: BigRational) -> Result<Self> {
        if signed.is_zero() {
            return Err(MassError::Zero);
        }
        let value = signed.abs();
        let mass = factor_numerator(&value, FACTOR_BOUND)?;
        Ok(MassReport {
            family,
            value: rat::to_string(&value),
            congruence_primes: mass.numerator_factors.clone(),
            mass,
            signed,
            filters: BTreeMap::new(),
            notes: BTreeMap::new(),
        })
    }

    pub fn value(&self) -> &BigRational {
        &self.mass.value
    }

    pub fn depth(&self, p: u64) -> u32 {
        self.mass.depth(p)
    }

    pub fn note(mut self, key: &str, val: impl Into<String>) -> Self {
        self.notes.insert(key.to_string(), val.into());
        self
    }

    /// Adds `nonabelian:p` for each congruence prime.
    pub fn with_nonabelian_filters(mut self, n: u64, h1: u64, e1: u64) -> Self {
        for &(p, _) in &self.congruence_primes {
            let ok = crate::nonabelian_filter(&self.mass.value, n, h1, e1, p);
            self.filters.insert(format!("nonabelian:{p}"), ok);
        }
        self
    }
}
