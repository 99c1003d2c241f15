use thiserror::Error;

/// Errors raised across the skein, geometric and knot-state layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("level r = {0} is out of range (need r >= 3)")]
    InvalidLevel(u32),
    #[error("diagram needs {crossings} crossings in the state sum, limit is {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid braid word: {0}")]
    InvalidBraid(String),
    #[error("braid closure has {0} components, a knot needs exactly one")]
    NotAKnot(usize),
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("R-matrix state space of dimension {dim} exceeds the budget {budget}")]
    StateSpaceTooLarge { dim: usize, budget: usize },
    #[error("unknown catalog entry '{0}'")]
    UnknownCatalogEntry(String),
    #[error("curve ({0}, {1}) is not primitive")]
    NotPrimitive(i64, i64),
    #[error("translation ({0}, {1}) is not a multiple of 1/(2r+1)")]
    NotLatticeFraction(f64, f64),
    #[error("theta series needs more than {0} terms per residue")]
    NonconvergentSeries(usize),
    #[error("quadrature did not converge: relative change {change:e} at {points} points per axis")]
    QuadratureNotConverged { change: f64, points: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
