//! Leech lattice models and the mod-2 geometry used by the proof steps.

pub mod enumerate;
pub mod examples;
pub mod mod2;
pub mod model;
pub mod octo;
pub mod pairs;
pub mod standard;
pub mod typec;
pub mod zlat;

pub use model::{CrossClass, LeechLattice};
