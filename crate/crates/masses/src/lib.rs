//! Exact mass formulas for definite groups, with factored values,
//! congruence primes and the divisibility filter for non-abelian
//! congruences.

pub mod formulas;
pub mod report;
pub mod spec;

pub use formulas::{
    eichler_mass_q, ex_qi_display, mass, mass_g2, mass_gl2, mass_gl2_both, mass_so5, mass_sp_or_so,
    mass_unitary_division, mass_unitary_field, mass_wt4_conj, mass_wtk, nonabelian_filter, Gl2Variant,
};
pub use report::MassReport;
pub use spec::{Family, LevelPlace, MassSpec, SpLocal, SpPlace};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MassError {
    #[error("expected family {expected:?}, got {got:?}")]
    WrongFamily { expected: &'static str, got: Family },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("mass evaluates to zero")]
    Zero,
    #[error(transparent)]
    Num(#[from] exactnum::NumError),
}

pub type Result<T> = std::result::Result<T, MassError>;
