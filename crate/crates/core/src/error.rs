use thiserror::Error;

/// Errors raised by constructors, algorithms and the harness.
///
/// Theorem verifiers do not use this type to report a failed hypothesis;
/// that outcome is part of the returned report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex set is not symmetric about the origin")]
    NotSymmetric,
    #[error("degenerate convex body: {0}")]
    NotConvexBody(String),
    #[error("operation requires a polygonal unit ball")]
    NotPolygonal,
    #[error("direction must be non-zero")]
    ZeroDirection,
    #[error("points span no more than a line through the origin")]
    DegenerateHull,
    #[error("vector count must be odd, got {0}")]
    EvenCardinality(usize),
    #[error("need at least {need} vectors, got {got}")]
    TooFew { need: usize, got: usize },
    #[error("k must be odd with 3 < k <= n, got k={k}, n={n}")]
    BadK { k: usize, n: usize },
    #[error("hypothesis does not hold: {0}")]
    HypothesisFailed(String),
    #[error("vector {0} is not on the unit sphere")]
    NotOnBoundary(usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("theorem falsified: {0}")]
    TheoremFalsified(String),
    #[error("vector {0} is not a unit vector")]
    NotUnitVectors(usize),
    #[error("vector {0} lies outside the closed halfplane")]
    HalfplaneViolated(usize),
    #[error("epsilon neighbourhood of vector {0} leaves the unit ball")]
    EpsilonTooLarge(usize),
    #[error("no admissible sample for vector {index} after {attempts} attempts")]
    SamplingExhausted { index: usize, attempts: usize },
    #[error("search exceeded {0} iterations")]
    SearchBudgetExceeded(usize),
    #[error("unknown gallery case `{0}`")]
    UnknownCase(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
