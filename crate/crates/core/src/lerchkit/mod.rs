//! Hurwitz–Lerch zeta Φ(z, s, a) = Σ_{n≥0} zⁿ (n+a)^{−s}, its derivatives,
//! and the special functions and functional equations built on it.

mod funeq;
mod phi;
mod polylog;

pub use funeq::{funeq515_residual, funeq515_sides, funeq_residual, funeq_sides, jonquiere_residual, jonquiere_sides};
pub use phi::{lerch_phi, lerch_phi_sderiv, lerch_phi_zderiv, LerchPoint};
pub use polylog::{legendre_chi, polylog, polylog_sderiv, ti_inverse_tangent_integral};
