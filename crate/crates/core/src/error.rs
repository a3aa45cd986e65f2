use thiserror::Error;

use crate::scalar::ScalarError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),

    #[error("operands live in different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),

    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("unit law fails for basis vector {0}")]
    UnitLaw(usize),

    #[error("invalid idempotent decomposition: {0}")]
    Idempotents(String),

    #[error(
        "product of basis vectors {0} and {1} has a component in degree {2} outside the grading"
    )]
    Grading(usize, usize, usize),

    #[error("radical by trace form needs characteristic zero, field has characteristic {0}")]
    PositiveCharacteristic(u64),

    #[error("algebra {0} carries no idempotent decomposition and is not local")]
    MissingIdempotents(String),

    #[error("element is not idempotent")]
    NotIdempotent,

    #[error("set {0:?} is not admissible")]
    NotAdmissible(Vec<u32>),

    #[error("module action does not respect structure constants at basis pair ({0}, {1})")]
    NotRepresentation(usize, usize),

    #[error("sequence is not short exact: {0}")]
    NotExact(String),

    #[error("middle term is not in the additive closure of the given modules")]
    NotInAdd,

    #[error("module is not projective")]
    NotProjective,

    #[error("module is not a generator-cogenerator")]
    NotGeneratorCogenerator,

    #[error("right ideal must be wrapped over the opposite algebra")]
    RightIdeal,

    #[error("resolution depth {have} is insufficient, need {need}")]
    DepthExceeded { have: usize, need: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
