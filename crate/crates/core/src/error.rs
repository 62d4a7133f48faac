use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid projective point: all coordinates are zero")]
    InvalidPoint,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degree mismatch: expected total degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: String },
    #[error("point is not on X")]
    NotOnVariety,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
