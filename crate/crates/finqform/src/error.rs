use thiserror::Error;

#[derive(Debug, Error)]
pub enum FinqError {
    #[error("group too large for machine-size representation")]
    TooLarge,
    #[error("enumeration cap exceeded; raise the candidate cap")]
    CapExceeded,
    #[error("element does not belong to the group")]
    NotInGroup,
    #[error("matrix is not an isometry of the form")]
    NotAnIsometry,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, FinqError>;
