//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty dataset")]
    EmptyDataset,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    #[error("invalid class label {0} (labels must be -1 or +1)")]
    InvalidLabel(i64),

    #[error("degenerate labels: training data contains a single class")]
    DegenerateLabels,

    #[error("no minority samples")]
    NoMinoritySamples,

    #[error("singular system: {0}")]
    SingularSystem(&'static str),

    #[error(
        "SMO did not converge within {iterations} iterations \
         (KKT gap {gap:.6e}, dual objective {dual_objective:.6e})"
    )]
    SmoNonConvergence {
        iterations: usize,
        gap: f64,
        dual_objective: f64,
    },

    #[error("undefined rate: test labels must contain both classes")]
    UndefinedRate,

    #[error("insufficient history: cycle {cycle} needs {needed} earlier cycles")]
    InsufficientHistory { cycle: usize, needed: usize },

    #[error("trace too short: {cycles} cycles, need at least {needed}")]
    TraceTooShort { cycles: usize, needed: usize },

    #[error("infeasible generator config: {0}")]
    InfeasibleConfig(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of the numerical machinery (as opposed to bad
    /// inputs), used by callers that distinguish exit codes.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::SingularSystem(_) | Error::SmoNonConvergence { .. }
        )
    }
}
