//! Exact algebra, Leech lattice models, permutation groups and F2-modules
//! used to re-execute the computer-checkable steps in the proof that the
//! Monster has no subgroup isomorphic to Sz(8).
//!
//! Everything here is `no_std` with `alloc`; IO lives in the `sz8-verify`
//! crate.
#![cfg_attr(not(feature = "std"), no_std)]
// index loops read closer to the matrix formulas here
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod constants;
pub mod error;
pub mod exact;
pub mod golay;
pub mod leech;
pub mod m12;
pub mod modrep;
pub mod notm24;
pub mod perm;
pub mod permfile;
pub mod projective;
pub mod steps;
pub mod suzuki;

pub use error::{Error, Result};
