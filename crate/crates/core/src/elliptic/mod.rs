//! Division polynomials of `y^2 = x^3 + s x + t` over `F_p[s, t]` and the
//! objects read from them.

mod division;
mod resolvent;
mod supersingular;
mod theta;

pub use division::{curve_rhs, division_polynomials, st_ring, stx_ring, DivisionPolySet, DIVISION_BOUND};
pub use resolvent::{expected_resolvent, lambda, three_torsion_resolvent, ResolventReport};
pub use supersingular::{curve_for_j, frobenius_trace, supersingular_j_list, SUPERSINGULAR_MAX_P};
pub use theta::{
    mu_discriminant, mu_from_theta, radical_check_for, theta_extract, theta_radical_check, RadicalReport, Theta,
    THETA_MAX_P,
};
