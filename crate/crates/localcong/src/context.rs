use crate::{LocalError, Result};
use exactnum::factor::is_prime_u64;
use exactnum::{Fe, Gf};
use num_integer::Integer;
use std::collections::BTreeMap;

pub const MAX_DEGREE: usize = 12;

/// A finite field F_{p^k} with a designated square root of each registered
/// residue size q and designated roots of unity.
#[derive(Clone, Debug)]
pub struct CoefficientField {
    gf: Gf,
    sqrt_table: BTreeMap<u64, Fe>,
    roots_of_unity: BTreeMap<u64, Fe>,
}

/// Multiplicative order of p modulo m.
fn order_mod(p: u64, m: u64) -> Option<usize> {
    if m == 1 {
        return Some(1);
    }
    if p.gcd(&m) != 1 {
        return None;
    }
    let mut x = p % m;
    for k in 1..=MAX_DEGREE * 8 {
        if x == 1 {
            return Some(k);
        }
        x = ((x as u128 * p as u128) % m as u128) as u64;
    }
    None
}

fn is_qr(q: u64, p: u64) -> bool {
    exactnum::kronecker(q as i64, p as i64) == 1
}

impl CoefficientField {
    /// The smallest F_{p^k} containing √q for each `(q, true)` in `qs` and a
    /// primitive m-th root of unity for each m in `zeta_orders`.
    pub fn build(p: u64, qs: &[(u64, bool)], zeta_orders: &[u64]) -> Result<Self> {
        if p == 2 || !is_prime_u64(p) {
            return Err(LocalError::Context(format!("p = {p} must be an odd prime")));
        }
        let mut k = 1usize;
        for &(q, need) in qs {
            if q % p == 0 {
                return Err(LocalError::Context(format!("p = {p} divides q = {q}")));
            }
            if need && !is_qr(q % p, p) {
                k = k.lcm(&2);
            }
        }
        for &m in zeta_orders {
            let o = order_mod(p, m).ok_or_else(|| {
                LocalError::Context(format!("no primitive {m}-th root of unity in characteristic {p}"))
            })?;
            k = k.lcm(&o);
        }
        if k > MAX_DEGREE {
            return Err(LocalError::Context(format!("required degree {k} exceeds {MAX_DEGREE}")));
        }
        let gf = Gf::new(p, k).map_err(|e| LocalError::Field(e.to_string()))?;
        let mut sqrt_table = BTreeMap::new();
        for &(q, need) in qs {
            if need {
                let s = gf.sqrt(&gf.from_u64(q)).expect("degree chosen so that q is a square");
                sqrt_table.insert(q, s);
            }
        }
        let mut roots_of_unity = BTreeMap::new();
        for &m in zeta_orders {
            let z = gf.root_of_unity(m).expect("degree chosen so that m | p^k - 1");
            roots_of_unity.insert(m, z);
        }
        Ok(CoefficientField { gf, sqrt_table, roots_of_unity })
    }

    /// Like [`CoefficientField::build`] but in F_{p^k} for a given k.
    pub fn with_degree(p: u64, k: usize, qs: &[(u64, bool)], zeta_orders: &[u64]) -> Result<Self> {
        let base = Self::build(p, qs, zeta_orders)?;
        if k % base.gf.k() != 0 || k > MAX_DEGREE {
            return Err(LocalError::Context(format!("degree {k} is not a multiple of {}", base.gf.k())));
        }
        let gf = Gf::new(p, k).map_err(|e| LocalError::Field(e.to_string()))?;
        let mut ctx = CoefficientField { gf, sqrt_table: BTreeMap::new(), roots_of_unity: BTreeMap::new() };
        for &(q, need) in qs {
            if need {
                let s = ctx.gf.sqrt(&ctx.gf.from_u64(q)).expect("subfield square");
                ctx.sqrt_table.insert(q, s);
            }
        }
        for &m in zeta_orders {
            ctx.roots_of_unity.insert(m, ctx.gf.root_of_unity(m).expect("subfield root"));
        }
        Ok(ctx)
    }

    pub fn gf(&self) -> &Gf {
        &self.gf
    }

    pub fn p(&self) -> u64 {
        self.gf.p()
    }

    pub fn k(&self) -> usize {
        self.gf.k()
    }

    /// Image of q.
    pub fn q(&self, q: u64) -> Fe {
        self.gf.from_u64(q)
    }

    /// The designated s with s² = q.
    pub fn sqrt_q(&self, q: u64) -> Result<Fe> {
        self.sqrt_table.get(&q).copied().ok_or(LocalError::MissingSqrt(q))
    }

    pub fn zeta(&self, m: u64) -> Result<Fe> {
        self.roots_of_unity.get(&m).copied().ok_or(LocalError::MissingRoot(m))
    }

    /// q^{e/2}; needs √q only when e is odd.
    pub fn q_half_pow(&self, q: u64, twice_e: i64) -> Result<Fe> {
        let gf = &self.gf;
        let base = if twice_e % 2 == 0 { self.q(q) } else { self.sqrt_q(q)? };
        let e = if twice_e % 2 == 0 { twice_e / 2 } else { twice_e };
        gf.pow_i(&base, e).map_err(|e| LocalError::Field(e.to_string()))
    }

    /// The same field with −s designated as √q.
    pub fn with_negated_sqrt(&self, q: u64) -> Result<Self> {
        let s = self.sqrt_q(q)?;
        let mut c = self.clone();
        c.sqrt_table.insert(q, self.gf.neg(&s));
        Ok(c)
    }

    pub fn registered_q(&self) -> Vec<u64> {
        self.sqrt_table.keys().copied().collect()
    }
}

/// Convenience wrapper matching the operation name used elsewhere.
pub fn build_context(p: u64, qs: &[(u64, bool)], zeta_orders: &[u64]) -> Result<CoefficientField> {
    CoefficientField::build(p, qs, zeta_orders)
}
