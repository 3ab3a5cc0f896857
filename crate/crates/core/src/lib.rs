//! Linkage of graded modules over quotients of polynomial rings over F_p.

pub mod error;
pub mod field;
pub mod cohatt;
pub mod gb;
pub mod homlat;
pub mod linkverify;
pub mod shell;
pub mod modops;
pub mod poly;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use poly::{Monomial, MonomialOrder, Poly, PolyRing};
