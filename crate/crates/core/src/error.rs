use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("zero input: {0}")]
    ZeroInput(&'static str),
    #[error("matrix is rank deficient")]
    RankDeficient,
    #[error("generator mismatch between operators")]
    GeneratorMismatch,
    #[error("polynomial is not square-free in y: {0}")]
    NotSquareFree(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("x = {0} is a singular point of the operator")]
    SingularPoint(String),
    #[error("matrix is not strictly proper")]
    NotStrictlyProper,
    #[error("{0}")]
    Parse(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("random generation gave up after {0} attempts")]
    GenerationFailed(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
