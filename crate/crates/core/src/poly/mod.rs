//! Exact polynomial arithmetic over finite fields and their function fields.

mod ff;
mod multi;
mod ratfun;
mod ring;
mod symmetric;
mod uni;

pub use ff::{find_special_constants, FfElem, FiniteField, SpecialConstants, MAX_EXTENSION_DEGREE};
pub use multi::{Monomial, MultiPoly, PolyRing, MAX_VARS};
pub use ratfun::RationalFunction;
pub use ring::{Domain, Field, Ring};
pub use symmetric::{elementary_ring, elementary_symmetric, is_symmetric, symmetric_reduce};
pub use uni::{bareiss_det, UniPoly};
