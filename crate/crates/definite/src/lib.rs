//! Exact algorithms for definite even lattices: LLL reduction, short
//! vector enumeration, root system classification, automorphism groups
//! and isometry testing, and the induced action on discriminant forms.

pub mod aut;
pub mod disc_image;
pub mod reduce;
pub mod roots;
pub mod shortvec;

pub use aut::{automorphism_group, automorphism_group_capped, isometric, isometric_capped, AutError, AutGroup};
pub use disc_image::{disc_action, discriminant_image, weyl_reflection};
pub use reduce::lll;
pub use roots::{mordell_weil, root_classification, MordellWeil, RootDatum};
pub use shortvec::{short_vectors, theta_profile};
