//! Genus descriptors, Kneser neighbor enumeration, and the exact
//! Smith-Minkowski-Siegel mass used as the completeness certificate.

pub mod error;
pub mod genus;
pub mod mass;
pub mod neighbor;

pub use error::{GenusError, Result};
pub use genus::{
    enumerate_genus, frame_genus_descriptor, in_same_genus, GenusClass, GenusDescriptor,
    GenusList, WalkOptions,
};
pub use mass::mass;
pub use neighbor::{isotropic_lines, neighbor_of, neighbor_try, neighbors};
