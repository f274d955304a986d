//! Exact and numerical convolution on coset spaces of a group by a
//! subgroup. The finite backend works over complex rationals and proves its
//! identities exactly; the rotation-group backend works on quadrature grids
//! for the sphere as a quotient of the 3D rotation group.

pub mod algebra;
pub mod catalog;
pub mod coset;
pub mod error;
pub mod group;
pub mod involution;
pub mod linalg;
pub mod measure;
pub mod random;
pub mod scalar;
pub mod sphere;
pub mod suites;
pub mod transfer;

pub use error::{Error, Result};
