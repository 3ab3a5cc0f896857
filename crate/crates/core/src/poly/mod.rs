//! Polynomial arithmetic over F_p.

pub mod monomial;
mod parse;
#[allow(clippy::module_inception)]
pub mod poly;
pub mod ring;

pub use monomial::{Monomial, MAX_VARS};
pub use poly::{ArithOp, Poly};
pub use ring::{MonomialOrder, PolyRing};
