use thiserror::Error;

#[derive(Debug, Error)]
pub enum CountError {
    #[error("lattice error: {0}")]
    Lattice(#[from] lattice_core::LatticeError),
    #[error("finite form error: {0}")]
    Finq(#[from] finqform::FinqError),
    #[error("automorphism error: {0}")]
    Aut(#[from] definite::AutError),
    #[error("genus error: {0}")]
    Genus(#[from] genus_walk::GenusError),
    #[error("frame discriminant form is not the negated discriminant form of T")]
    FrameNotInGenus,
    #[error("Hodge generator does not lie in O(T#)")]
    HodgeNotInGroup,
    #[error("no Hodge candidate of order {0} within entry bound {1}")]
    NoHodgeCandidate(u32, i64),
    #[error("order {0} admits {1} candidate generator classes; pick one explicitly")]
    AmbiguousHodge(u32, usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, CountError>;
