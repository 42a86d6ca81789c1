use thiserror::Error;

use crate::forms::PolyForm;

/// Errors raised while building complexes, forms and reports.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("duplicate simplex {0:?}")]
    DuplicateSimplex(Vec<usize>),

    #[error("vertex id {vertex} out of range (complex has {vertex_count} vertices)")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("simplex {0:?} is not in the complex")]
    SimplexNotInComplex(Vec<usize>),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("complex is not a closed manifold")]
    NotClosedManifold,

    #[error("complex is not orientable")]
    NotOrientable,

    #[error("subspace containment violated: inconsistent complex data")]
    InconsistentSubspace,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("form of degree {degree} is not closed")]
    NotClosed {
        degree: usize,
        derivative: Box<PolyForm>,
    },

    #[error("form lies outside the Whitney subspace; unsupported form space")]
    UnsupportedFormSpace,

    #[error("form is not tangentially continuous across simplex {0:?}")]
    Discontinuous(Vec<usize>),

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
