//! Exact scalars and the linear-algebra substrate.

mod field;
mod matrix;
mod poly;
mod subspace;
mod wedge;

pub use field::{is_prime, vector, Field, FieldTag, PrimeField, Rationals};
pub(crate) use field::parse_rational;
pub use matrix::Matrix;
pub use poly::Poly;
pub use subspace::Subspace;
pub use wedge::WedgeIndex;
