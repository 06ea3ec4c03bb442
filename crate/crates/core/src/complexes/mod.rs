mod betti;
mod complex;
mod ops;
mod resolution;

pub use betti::BettiTable;
pub use complex::{FreeComplex, HomologyInfo};
pub use ops::{dual_into_ring, koszul_complex, syzygy_module, tensor, truncate_above};
pub use resolution::{
    has_i_linear_resolution, minimal_resolution, regularity, LinearStatus, Regularity, ResolutionPrefix,
    DEFAULT_CUTOFF,
};
pub(crate) use resolution::linear_status;
