//! Combinatorics of spherical nilpotent orbits in the classical Lie algebras:
//! partition classification, orbital-variety tableaux, weight-extension
//! feasibility, infinitesimal-character sets, and an exact matrix oracle.

pub mod characters;
pub mod linalg;
pub mod harness;
pub mod num;
pub mod oracle;
pub mod orbit;
pub mod par;
pub mod partition;
pub mod tableau;
pub mod weight;

pub use num::Q;
pub use orbit::{LieType, Numeral, OrbitDescriptor, OrbitError, OrbitFlags};
pub use partition::Partition;
