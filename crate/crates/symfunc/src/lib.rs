//! Partitions, symmetric polynomials and Hall–Littlewood polynomials, with
//! the GL(n) Satake eigenvalues ĉ_λ, Hecke-operator degrees, the generator
//! bases used for GL(n) and U(N), and a brute-force coset-counting oracle.

pub mod hl;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod satake;

pub use hl::{elementary_monomial_expand, hall_littlewood_p, kostka, schur_monomial};
pub use oracle::coset_count_oracle;
pub use partition::{dominance_leq, pair_rho, pair_rho_partition, HalfExponent, Partition};
pub use poly::{LaurentQ, LaurentSymPoly, SymPoly, TPoly};
pub use satake::{
    gl_generator, hecke_degree_gl, hecke_degree_gl_poly, satake_gl, u_generator, y_values, z_basis_gl,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("not a partition: {0:?}")]
    NotPartition(Vec<u32>),
    #[error("outside supported bounds: {0}")]
    Bounds(String),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("s² is not the image of q = {0}")]
    BadHalf(u64),
    #[error("a Satake parameter is not invertible")]
    NotInvertible,
    #[error("degree is not a nonnegative integer: {0}")]
    NonIntegral(String),
    #[error("finite field: {0}")]
    Field(String),
}

pub type Result<T> = std::result::Result<T, SymError>;
