//! Exact arithmetic used across the workspace: reduced big rationals,
//! Bernoulli numbers, quadratic Dirichlet characters and their special
//! values, factored rationals, quadratic integers and their reductions
//! into small finite fields.

pub mod bernoulli;
pub mod character;
pub mod factor;
pub mod ff;
pub mod quadratic;
pub mod rat;

pub use bernoulli::{bernoulli, bernoulli_poly, gen_bernoulli, gen_bernoulli_with, l_value_neg};
pub use character::{hilbert_symbol, kronecker, QuadraticCharacter};
pub use factor::{factor_integer, factor_numerator, is_probable_prime, FactoredRational};
pub use ff::{Fe, Gf};
pub use quadratic::{reduce_mod, PrimeIdealSpec, QuadraticRingElem};
pub use rat::{int, rat, BigInt, BigRational};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumError {
    #[error("cannot factor zero")]
    ZeroInput,
    #[error("not a fundamental discriminant: {0}")]
    BadDiscriminant(i64),
    #[error("p = 2 cannot invert the half in (a+b√d)/2")]
    HalfAtTwo,
    #[error("inconsistent prime ideal: {0}")]
    InconsistentRoot(String),
    #[error("invalid quadratic integer: {0}")]
    BadElement(String),
    #[error("finite field: {0}")]
    Field(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, NumError>;
