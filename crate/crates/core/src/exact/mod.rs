//! Exact scalars (dyadic rationals, F2, F8) and the octonions.

pub mod dyadic;
pub mod f2;
pub mod f8;
pub mod octonion;
pub mod poly2;

pub use dyadic::DyadicRational;
pub use f2::{F2Matrix, F2Vec, Quotient, Subspace};
pub use f8::F8;
pub use octonion::{oct_mul, Octonion};
