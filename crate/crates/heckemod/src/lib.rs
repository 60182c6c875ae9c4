//! Weighted class spaces with commuting integer Hecke operators: masses,
//! Eisenstein-congruent vectors, simultaneous eigensystems mod p and their
//! congruences with the degree character, congruence modules of finite
//! abelian groups, orbit untwisting, and JSON import of external data.

pub mod congmod;
pub mod eigen;
pub mod import;
pub mod linalg;
pub mod space;
pub mod synthetic;
pub mod untwist;

pub use congmod::{congruence_module_invariants, groups_of_order, AbelianGroup};
pub use eigen::{detect_eis_congruences, modp_eigensystems, modp_eigensystems_seeded, EigensystemModP};
pub use import::{compare_with_trivial, import_hecke_json, Comparison, GroupFamily, Imported, PlaceKind};
pub use space::{degree_check, eis_vector_construct, mass_of, DegreeReport, Operator, WeightedClassSpace};
pub use untwist::{untwist_orbits, Untwisted};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("invalid space: {0}")]
    Invalid(String),
    #[error("operators {0} and {1} do not commute")]
    NonCommuting(String, String),
    #[error("operator {0} has non-constant row sums {1:?}")]
    RowSums(String, Vec<i64>),
    #[error("{0} does not divide the mass numerator of {1}")]
    NotDividing(u64, String),
    #[error("eigensystem search: {0}")]
    Split(String),
    #[error("untwisting: {0}")]
    Untwist(String),
    #[error("schema: {0}")]
    Schema(String),
    #[error("trivial row of {0}: {1}")]
    TrivialRow(String, String),
    #[error(transparent)]
    Num(#[from] exactnum::NumError),
}

pub type Result<T> = std::result::Result<T, HeckeError>;
