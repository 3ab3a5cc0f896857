//! Ext, Tor, depth and the G-dimension lattice.

mod depth;
mod ext;
mod gdim;

pub use depth::{
    annihilator, depth, depth_at_prime, depth_profile, grade, in_support, krull_dim,
    low_depth_locus, module_grade, monomial_primes, ring_depth, serre_check, DepthProfile,
    Primality, PrimeCandidate, Provenance, SerreEntry, SerreReport,
};
pub use ext::{ext, ext_ambient, ext_ambient_dual, ext_unminimized, tor};
pub use gdim::{
    biduality, canonical_module, gc_perfect, gdim, in_auslander_class, is_cohen_macaulay_ring,
    is_gorenstein_ring, is_semidualizing, is_totally_c_reflexive, n_torsionfree, nth_syzygy_test,
    semidualizing_from_perfect_ideal, total_reflexivity, GdimReport, ReflexivityReport,
};
