//! Orthogonal groups of finite quadratic forms: full enumeration,
//! conjugacy classes, subgroup and double-coset machinery, and isometry
//! testing between forms.

pub mod data;
pub mod error;
pub mod form;
pub mod group;
pub mod isometry;
pub mod search;

pub use error::{FinqError, Result};
pub use form::CompactForm;
pub use group::{orthogonal_group, ConjClass, FiniteOrthGroup, Subgroup};
pub use isometry::FiniteIsometry;
pub use search::{are_isometric, FormMap};
