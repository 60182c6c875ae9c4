use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    UnitaryDivision,
    #[default]
    UnitaryField,
    So5,
    G2,
    Sp2n,
    So2n1,
    Gl2Quaternion,
    Wtk,
    Wt4,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::UnitaryDivision,
        Family::UnitaryField,
        Family::So5,
        Family::G2,
        Family::Sp2n,
        Family::So2n1,
        Family::Gl2Quaternion,
        Family::Wtk,
        Family::Wt4,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::UnitaryDivision => "unitary-division",
            Family::UnitaryField => "unitary-field",
            Family::So5 => "so5",
            Family::G2 => "g2",
            Family::Sp2n => "sp2n",
            Family::So2n1 => "so2n1",
            Family::Gl2Quaternion => "gl2-quaternion",
            Family::Wtk => "wtk",
            Family::Wt4 => "wt4",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

/// A place of residue size q carrying a level exponent r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelPlace {
    pub q: u64,
    pub r: u32,
}

/// Local factor for a non-hyperspecial place of Sp(2n) or SO(2n+1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum SpLocal {
    /// Iwahori level: the index |G(F_q)| / |B(F_q)|.
    Iwahori,
    /// The full finite group order as an index (|Sp(2n,F_q)| = q^{n²}∏(q^{2r}−1),
    /// and q^{2n²+3n}∏(q^{2r}−1) for SO(2n+1)).
    GroupOrder,
    /// Stabiliser of a maximal lattice; Sp(2n) only: ∏(q^r + (−1)^r).
    MaximalLattice,
    /// An explicitly supplied λ_v, as "num/den".
    Custom { lambda: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpPlace {
    pub q: u64,
    #[serde(flatten)]
    pub local: SpLocal,
}

/// Declarative input to every mass formula. Fields not used by a family
/// are ignored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct MassSpec {
    pub family: Family,
    /// Rank n (unitary, Sp/SO) or weight k (Wtk).
    pub n: u32,
    /// d = [F:ℚ]; 0 is read as 1.
    pub base_degree: u32,
    /// Discriminant of E (unitary families, Wtk).
    pub disc: Option<i64>,
    /// Residue sizes of the finite places ramified in E; derived from the
    /// discriminant when empty and F = ℚ.
    pub ramified_e: Vec<u64>,
    /// Residue sizes of the finite places where the division algebra ramifies.
    pub ramified_a: Vec<u64>,
    /// Quasi-split places with special, non-hyperspecial level (unitary division).
    pub special_places: Vec<u64>,
    /// 1 or a prime unramified in E; 0 is read as 1.
    pub ell: u64,
    /// χ(ℓ) when it cannot be computed (d > 1).
    pub chi_ell: Option<i32>,
    pub s1: Vec<u64>,
    pub s2: Vec<u64>,
    pub s3: Vec<u64>,
    /// Per-place answer to "is (−1)^{n/2} a local norm from E"; overrides
    /// the Hilbert-symbol default.
    pub norm_condition: BTreeMap<u64, bool>,
    pub sp_places: Vec<SpPlace>,
    pub n1: Vec<LevelPlace>,
    pub n2: Vec<LevelPlace>,
    /// ζ_F(1−2r) for r = 1, 2, … as "num/den" (required when d > 1).
    pub zeta_values: Option<Vec<String>>,
    /// L(1−r, χ^r) for r = 1..n as "num/den" (required for unitary families when d > 1).
    pub l_values: Option<Vec<String>>,
    /// 2-exponent of the narrow class group of F.
    pub e2_narrow: u32,
    /// Class number and exponent of Cl(U(1)), for the non-abelian filter.
    pub h1: Option<u64>,
    pub e1: Option<u64>,
    /// Squarefree levels for the weight-4 quantity.
    pub level_n1: u64,
    pub level_n2: u64,
}

impl MassSpec {
    pub fn new(family: Family) -> Self {
        MassSpec { family, ..Default::default() }
    }

    pub fn d(&self) -> u32 {
        self.base_degree.max(1)
    }

    pub fn ell(&self) -> u64 {
        self.ell.max(1)
    }
}
