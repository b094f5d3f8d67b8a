//! Permutations, stabilizer chains, orbits and subgroup searches.

pub mod finite;
pub mod group;
pub mod permutation;
pub mod search;

pub use finite::{FiniteGroup, PermGroupElems};
pub use group::{elements_of_order, object_stabilizer, point_stabilizer, seeded_rng, setwise_stabilizer, Bsgs, OrbitPartition, PermGroup};
pub use permutation::Permutation;
