//! Local Eisenstein congruences for unramified Satake parameters over finite
//! fields: predicates for GL(n), U(N), GL(2)/PGL(2), GSp(4) and G₂, the
//! lifts between them, and seeded transport suites.

pub mod context;
pub mod lifts;
pub mod params;
pub mod predicates;
pub mod transport;

pub use context::{build_context, CoefficientField};
pub use lifts::*;
pub use params::{in_l, twice_nu, twice_rho, G2Weight, Gsp4Weight, LParamGL, LParamU};
pub use predicates::*;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalError {
    #[error("coefficient field: {0}")]
    Context(String),
    #[error("no designated square root of q = {0} in this field")]
    MissingSqrt(u64),
    #[error("no designated primitive {0}-th root of unity in this field")]
    MissingRoot(u64),
    #[error("precondition: {0}")]
    Precondition(String),
    #[error("a Satake parameter is not invertible")]
    NotInvertible,
    #[error("finite field: {0}")]
    Field(String),
    #[error(transparent)]
    Sym(#[from] symfunc::SymError),
}

pub type Result<T> = std::result::Result<T, LocalError>;
