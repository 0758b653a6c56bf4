//! Lie algebras by structure constants and the standard constructions on them.

mod algebra;
mod cohomology;
mod comm;
mod constructions;
mod ideal;

pub use algebra::{JacobiFailure, JacobiReport, LieAlgebra};
pub use cohomology::{h2_dimension, is_centrally_closed, H2Dims};
pub use comm::CommAlgebra;
pub use constructions::{direct_sum, semidirect, tensor_with_comm};
pub use ideal::{bracket_with, ideal_bracket_identity, quotient, IdealHandle};
