//! Exact arithmetic kernels for checking the finite ingredients of the
//! torsion Galois group computation for `y^2 = x^3 + s x + t` over `F_p(s, t)`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function on immutable values:
//!
//! * [`modular`]: residues mod `M`, CRT, unit groups, exact rationals.
//! * [`groups`]: `SL_2(Z/MZ)` enumeration, the congruence subgroup
//!   `S(Nl, N)`, the `gamma` identification with `F_l^3`, the conjugation
//!   representation, commutator subgroups and product-group closures.
//! * [`poly`]: finite fields, sparse multivariate polynomials over `F_p`,
//!   rational functions, univariate algebra (gcd, resultant, discriminant),
//!   and reduction to elementary symmetric polynomials.
//! * [`elliptic`]: division polynomials, `theta`, the 3-torsion resolvent,
//!   and supersingular j-invariants.
//! * [`valuation`]: h-adic and pi-adic valuations and the checks built on them.
//! * [`cardano`]: Cardano's formula in characteristic at least 5.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cardano;
pub mod elliptic;
pub mod error;
pub mod groups;
pub mod modular;
pub mod poly;
pub mod valuation;

pub use error::{Error, Result};
