use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("descriptor {0} is tabulated only; its weights are not generated")]
    Unsupported(String),
    #[error("rank guard exceeded: dim t = {dim} > {limit}")]
    RankGuard { dim: usize, limit: usize },
    #[error("membership undecided for {element} in {descriptor}")]
    UnknownMembership { descriptor: String, element: String },
    #[error("witness cannot be realized: {0}")]
    Unrealizable(String),
    #[error("empty join: {0}")]
    EmptyJoin(String),
    #[error("grid point is not a unit quaternion: {0}")]
    NotUnitQuaternion(String),
    #[error("unknown descriptor: {0}")]
    UnknownDescriptor(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
