//! Crate-wide error type.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Requested dimension exceeds the configured materialization cap.
    #[error("dimension {requested} exceeds the configured cap {cap}")]
    DimensionCap { requested: usize, cap: usize },

    /// Quadratic-residue construction needs a prime p with p % 4 == 3.
    #[error("{p} is not a prime congruent to 3 mod 4")]
    InvalidPrime { p: u64 },

    #[error("vector length {len} is not a power of two")]
    NotPowerOfTwo { len: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Operation not defined for this spinner kind (e.g. fast inverse of an
    /// explicit dense matrix; callers use a dense solve instead).
    #[error("operation not supported for spinner kind {kind}")]
    UnsupportedKind { kind: &'static str },

    #[error("matrix is numerically singular")]
    SingularMatrix,

    /// Q_uu (plus regularization) failed its Cholesky factorization at the
    /// given timestep; the caller increases regularization and retries.
    #[error("quadratic control term not positive definite at timestep {timestep}")]
    NotPositiveDefinite { timestep: usize },

    /// A rollout produced a non-finite state; treated as a rejected candidate.
    #[error("rollout diverged at timestep {timestep}")]
    DivergedRollout { timestep: usize },

    /// Blackbox evaluation failed. `index` is the measurement index, or
    /// `None` when the base-point evaluation failed.
    #[error("blackbox evaluation failed at measurement {index:?}: {message}")]
    EvalFailed {
        index: Option<usize>,
        message: String,
    },

    #[error("invalid argument: {0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
