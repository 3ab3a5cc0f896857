//! Gröbner bases for submodules of graded free modules, syzygies, minimal
//! presentations, resolutions and dimension counts.

mod engine;
pub mod free;
pub mod hilbert;
pub mod ideal;
pub mod modvec;
pub mod prune;
pub mod quotient;
pub mod resolve;
pub mod syz;

pub use free::{GradedFree, HomMatrix};
pub use hilbert::GradedDimTable;
pub use ideal::{Ideal, IdealOp};
pub use modvec::{ModVec, Term};
pub use prune::{prune, Pruned};
pub use quotient::{Caps, QuotientRing, Ring};
pub use resolve::{resolve, ResolutionSlice};
pub use syz::{image_matrix, minimal_generators, syzygies, Lifter, SubmoduleGb};

use crate::error::Result;
use crate::poly::{Poly, PolyRing};

/// Reduced Gröbner basis of the submodule generated by `gens` (plus the ring
/// ideal times `free`).
pub fn buchberger(free: &GradedFree, gens: &[ModVec]) -> Result<SubmoduleGb> {
    SubmoduleGb::new(free, gens)
}

/// Reduced Gröbner basis of a polynomial ideal of `S`.
pub fn buchberger_polys(ring: &PolyRing, gens: &[Poly]) -> Result<Vec<Poly>> {
    quotient::ideal_gb(ring, &[], gens, Caps::default())
}

/// Remainder of `f` modulo a Gröbner basis.
pub fn normal_form(f: &ModVec, gb: &SubmoduleGb) -> ModVec {
    gb.nf(f)
}
