use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {rank} out of range for type {family} (minimum {min})")]
    RankOutOfRange { family: char, rank: usize, min: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("polynomial is not invariant under generator {generator}")]
    NotInvariant { generator: usize },
    #[error("exponent {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("orbit or group size exceeds the cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("iteration cap of {cap} reached in {what}")]
    IterationCap { what: &'static str, cap: usize },
    #[error("exact division failed: {0}")]
    Division(String),
    #[error("point is not on the torus: {0}")]
    OffTorus(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("root finding did not converge; residuals {residuals:?}")]
    RootFinding { residuals: Vec<f64> },
    #[error("degenerate window")]
    DegenerateWindow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
