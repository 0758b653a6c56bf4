//! Verified commuting pairs: sampling strategies, polynomial families and
//! exhaustive enumeration over prime fields.

mod arena;
mod config;
mod exhaustive;
mod family;
mod sampler;

pub use arena::{Arena, CommutingPair};
pub use config::{SamplerConfig, Strategy};
pub use exhaustive::{exhaustive_kprime_gfp, FiniteScan, ScanOutcome};
pub use family::{
    builtin_families, bvm_families, current_families, heisenberg_families, qplane_families,
    semidirect_families, vm_families, PairFamily,
};
pub use sampler::{centralizer, generate_pairs, module_pairs, PairGenerator, Round, RoundKind};
