//! Exact algebra of even integral lattices: Gram matrices, signatures,
//! discriminant groups and quadratic forms, direct sums, rescalings and
//! orthogonal complements. All arithmetic is arbitrary precision.

pub mod disc;
pub mod error;
pub mod io;
pub mod lattice;
pub mod mat;

pub use disc::{discriminant_form, DiscriminantGroup, FiniteQuadraticForm};
pub use error::{LatticeError, Result};
pub use lattice::{ade_lattice, lattice_from_symbol, GramLattice};
