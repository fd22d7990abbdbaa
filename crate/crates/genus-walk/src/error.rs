use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenusError {
    #[error("lattice is not positive definite")]
    NotPositiveDefinite,
    #[error("lattice is not definite")]
    NotDefinite,
    #[error("transcendental lattice must have signature (2, rank-2)")]
    BadTranscendentalSignature,
    #[error("prime {0} divides the determinant; choose a coprime prime")]
    PrimeDividesDet(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("genus walk incomplete; try additional primes")]
    WalkIncomplete,
    #[error("seed not in frame genus")]
    SeedNotInGenus,
    #[error("lattice error: {0}")]
    Lattice(#[from] lattice_core::LatticeError),
    #[error("finite form error: {0}")]
    Finite(#[from] finqform::FinqError),
    #[error("automorphism search: {0}")]
    Aut(#[from] definite::AutError),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, GenusError>;
