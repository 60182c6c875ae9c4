//! Definite quaternion algebras over ℚ, their maximal and Eichler orders,
//! ideal classes and Brandt matrices, packaged as weighted class spaces.

pub mod algebra;
pub mod classes;
pub mod lattice;
pub mod order;
pub mod pipeline;
pub mod theta;

pub use algebra::{construct_algebra, Quat, QuaternionAlgebra};
pub use classes::{brandt_matrix, eichler_mass, enumerate_ideal_classes, ClassSet, IdealClass};
pub use lattice::Lattice;
pub use order::{eichler_order, maximal_order, QuaternionOrder};
pub use pipeline::{gl2_pipeline, PipelineReport};

#[derive(Debug, thiserror::Error)]
pub enum BrandtError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("lattice: {0}")]
    Lattice(String),
    #[error("order: {0}")]
    Order(String),
    #[error("class enumeration: {0}")]
    Enumeration(String),
    #[error(transparent)]
    Hecke(#[from] heckemod::HeckeError),
    #[error(transparent)]
    Mass(#[from] masses::MassError),
}

pub type Result<T> = std::result::Result<T, BrandtError>;
