//! Operations on finitely presented graded modules.

mod hom;
mod iso;
mod module;
mod ops;

pub(crate) use hom::{blocks_of, hom_free, precompose};
pub use hom::{dual, hom_module, homology, kernel_gens, tensor, tensor_raw, HomModule, Subquotient};
pub use iso::{iso_probe, is_bijective, IsoOptions, IsoVerdict};
pub use module::ModulePres;
pub use ops::{
    ideal_times_module, image_in, is_stable, lambda, lambda_c, lambda_via_dual, pushforward,
    quotient_by_ideal, syzygy, trace_ideal, transpose, transpose_c, Pushforward,
};
