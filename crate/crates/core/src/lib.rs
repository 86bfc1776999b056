//! Exact relative K-stability indicators for anti-canonically polarized
//! toric Fano manifolds, computed from their lattice polytopes.

pub mod bitset;
pub mod certificate;
pub mod cli;
pub mod error;
pub mod exact;
pub mod families;
pub mod integrate;
pub mod io;
pub mod kstability;
pub mod published;
pub mod polytope;
pub mod verify;

pub use error::{Error, Result};
