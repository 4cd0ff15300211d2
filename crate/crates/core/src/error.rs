use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("n = {n} is outside the supported range {supported}")]
    Domain { n: usize, supported: &'static str },
    #[error("empty polytope")]
    EmptyPolytope,
    #[error("point has {got} coordinates, expected {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("point coordinates sum to {0}, expected 2")]
    NotOnSlice(String),
    #[error("witness is not full-dimensional: it lies on wall {0}")]
    NotFullDimensional(String),
    #[error("malformed label {0:?}")]
    BadLabel(String),
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("label {label} is not classified for n = {n}")]
    Unclassified { label: String, n: usize },
    #[error("cache file {path} not found; run `orbitope chambers --n {n}` or pass --build")]
    CacheMissing { path: String, n: usize },
    #[error("cache file {path} is invalid: {reason}")]
    CacheInvalid { path: String, reason: String },
    #[error("unsupported grade {grade} for n = {n}")]
    Grade { n: usize, grade: usize },
    #[error("cycle vectors over different generator lists")]
    Ambient,
    #[error("{0} is not a generator of the target system")]
    NotAGenerator(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
