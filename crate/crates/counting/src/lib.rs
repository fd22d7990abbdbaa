//! Counting jacobian elliptic fibrations on a K3 surface up to
//! automorphisms, from the transcendental lattice T: enumerate the frame
//! genus and sum the double-coset multiplicities |H \ O(T#) / O#(W)|.

pub mod context;
pub mod error;
pub mod hodge;
pub mod report;

pub use context::CountingContext;
pub use error::{CountError, Result};
pub use hodge::{euler_phi, hodge_candidates, HodgeCandidate, DEFAULT_ENTRY_BOUND};
pub use report::{
    choices_from_candidates, count_fibrations, multiplicity, resolve_hodge, uniform_bounds,
    CountReport, FrameReport, HodgeChoice, HodgeSpec,
};
