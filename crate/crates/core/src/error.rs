use thiserror::Error;

/// Errors are reserved for invalid input or unverifiable preconditions.
/// Negative mathematical outcomes (failed purity, non-stabilization) are
/// ordinary values carried by reports, not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-admissible presentation: path count exceeded {cap} at length {length}")]
    NonAdmissible { cap: usize, length: usize },

    #[error("radical unavailable in positive characteristic without quiver")]
    RadicalUnavailable,

    #[error("undetermined beyond bound: needs resolution degree {needed}, computed {computed}")]
    UndeterminedBeyondBound { needed: usize, computed: usize },

    #[error("theta not concentrated: Ext^{index} has dim {dim}, expected 0 away from n={n}")]
    ThetaNotConcentrated { index: usize, dim: usize, n: usize },

    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),

    #[error("purity failure at stage {stage}: Tor_{index} has dim {dim}")]
    PurityFailure {
        stage: usize,
        index: usize,
        dim: usize,
    },

    #[error("algebra mismatch: operands live over different algebras")]
    AlgebraMismatch,

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
