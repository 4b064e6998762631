//! Hurwitz zeta and friends: ζ(s, a) by Euler–Maclaurin, s-derivatives,
//! Stieltjes constants, exact Bernoulli/Euler numbers, named constants.

mod bernoulli;
mod constants;
mod hurwitz;

pub use bernoulli::{bernoulli_number, bernoulli_poly, bernoulli_poly_exact, euler_number, MAX_BERNOULLI, MAX_EULER};
pub use constants::{ConstantsTable, CONSTANTS};
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_sderiv, stieltjes};
