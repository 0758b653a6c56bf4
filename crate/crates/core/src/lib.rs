//! Exact decision procedures for zero-product-determined Lie algebras and
//! zero-action-determined modules.

pub mod builtins;
pub mod commuting;
pub mod decide;
pub mod error;
pub mod exactla;
pub mod io;
pub mod liealg;
pub mod repmod;

pub use error::{Error, Result};
pub use exactla::{Field, FieldTag, Matrix, PrimeField, Rationals, Subspace, WedgeIndex};
pub use liealg::{CommAlgebra, LieAlgebra};
pub use repmod::LieModule;
