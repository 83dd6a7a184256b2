//! Latin hypercuboids of class r.
//!
//! A Latin hypercuboid of type `(n1, .., nd)` (sizes non-increasing) and
//! class `r` is a d-dimensional array over `n = n1 * .. * nr` symbols in
//! which every r-dimensional subarray holds each symbol at most once, and
//! exactly once when it has `n` cells. The crate provides
//!
//! * the domain types and the validity check ([`CuboidShape`],
//!   [`Hypercuboid`], [`validate()`]),
//! * isotopy/paratopy actions and semi-reduced forms ([`symmetry`]),
//! * existence bounds and mixed-code bounds ([`bounds`]),
//! * explicit constructions ([`constructions`]),
//! * exhaustive counting of semi-reduced hypercuboids ([`enumeration`]),
//! * mixed codes and the correspondences between hypercuboids, mixed MDS
//!   codes, cliques and graph endomorphisms ([`codes`]).
//!
//! Symbols are 0-based. Cells are stored flat with coordinate 1 varying
//! fastest; see [`radix`].

pub mod bounds;
pub mod codes;
pub mod constructions;
pub mod cuboid;
pub mod enumeration;
pub mod error;
pub mod radix;
pub mod shape;
pub mod subarray;
pub mod symmetry;
pub mod validate;

#[cfg(test)]
mod fixtures;

pub use cuboid::{Hypercuboid, Symbol, EMPTY};
pub use error::{Error, Result};
pub use shape::CuboidShape;
pub use subarray::{iter_subarrays, SubarraySelector};
pub use validate::{is_valid, validate, ValidationReport, Violation, ViolationKind};
