use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("non-admissible relations: {0}")]
    NonAdmissible(String),
    #[error("guard exceeded: {0}")]
    Guard(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("construction rejected: {0}")]
    Rejected(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
