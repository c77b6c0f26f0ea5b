use thiserror::Error;

use crate::complex::Simplex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),

    #[error("vertices {0:?} appear in no facet")]
    UncoveredVertices(Vec<u32>),

    #[error("vertex subset must be non-empty and lie in the vertex set")]
    InvalidSubset,

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("{0} is not a minimal non-face")]
    NotMinimalNonFace(Simplex),

    #[error("the 1-skeleton of the closure is disconnected")]
    DisconnectedClosure,

    #[error("invalid contraction ordering {order:?} for non-face {non_face}")]
    InvalidOrdering { non_face: Simplex, order: Vec<u32> },

    #[error("chains of mixed dimension")]
    DimensionMismatch,

    #[error("no integer solution to the chain relation")]
    NoSolution,

    #[error("filling is not pure or cardinalities disagree: {0}")]
    Purity(String),

    #[error("not a filling: {0}")]
    NotFilling(String),

    #[error("homology profile is not that of a sphere")]
    NotSphere,

    #[error("{0} is not a facet")]
    NotAFacet(Simplex),

    #[error("sphere identity coefficient {0} is not a unit")]
    NonUnitCoefficient(String),

    #[error("unsupported bracket shape: {0}")]
    UnsupportedShape(String),

    #[error("generator e{0} has degree 0")]
    DegreeZero(u32),

    #[error("index {index} out of range for filling of size {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("json: {0}")]
    Json(String),
}
