//! Asymmetric correction of errors for concatenated CSS codes.
//!
//! Physical T1/T2 times give a biased Pauli channel ([`noise`]). Logical
//! circuits carry explicit X and Z correction blocks ([`circuit`]); under a
//! strong Z bias most X corrections can be dropped ([`ace`]). Failure rates
//! follow from counting locations in extended rectangles ([`analysis`]) and
//! are cross-checked by Monte Carlo sampling ([`simulate`]).

pub mod ace;
pub mod analysis;
pub mod circuit;
pub mod error;
pub mod noise;
pub mod simulate;

pub use error::{AceError, Result};

#[cfg(test)]
mod proptests;
