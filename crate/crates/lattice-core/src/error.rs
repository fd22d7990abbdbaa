use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("degenerate lattice")]
    Degenerate,
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix is not square")]
    NotSquare,
    #[error("odd lattice: diagonal entry not in 2Z")]
    OddLattice,
    #[error("invalid lattice symbol: {0}")]
    BadSymbol(String),
    #[error("rescale by zero")]
    ZeroRescale,
    #[error("degenerate sublattice")]
    DegenerateSublattice,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, LatticeError>;
