//! Error types shared across the library.

use thiserror::Error;

/// Library-wide error type.
///
/// Variants map onto the failure classes surfaced by the CLI: bad inputs,
/// accuracy/quadrature failures, solver non-convergence, and violations of
/// state invariants that indicate an internal bug rather than a bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("accuracy failure: {0}")]
    Accuracy(String),

    #[error("no pairing: lowest eigenvalue positive for all T down to {t_min:e}")]
    NoPairing { t_min: f64 },

    #[error("degenerate pair state: gap to next eigenvalue {gap:e} below tolerance {tol:e}")]
    DegeneratePairState { gap: f64, tol: f64 },

    #[error("convergence failure: {0}")]
    Convergence(String),

    #[error("state invariant violated: {0}")]
    StateInvariant(String),

    #[error("symmetry violation: {0}")]
    Symmetry(String),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("relative entropy divergent: {0}")]
    DivergentEntropy(String),

    #[error("geometry mismatch: {0}")]
    GeometryMismatch(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code class for the CLI (`3` convergence, `4` consistency,
    /// `2` everything input-shaped).
    pub fn exit_class(&self) -> i32 {
        match self {
            Error::Convergence(_) | Error::NoPairing { .. } | Error::Accuracy(_) => 3,
            Error::StateInvariant(_)
            | Error::Symmetry(_)
            | Error::InternalConsistency(_)
            | Error::DivergentEntropy(_)
            | Error::DegeneratePairState { .. } => 4,
            _ => 2,
        }
    }
}
