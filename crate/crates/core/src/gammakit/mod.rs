//! Gamma-family functions: Γ, logΓ, ψ, Pochhammer, the incomplete gamma pair
//! with sheet continuation, E_n, and the incomplete beta function.

mod beta;
mod gamma;
mod incomplete;

pub use beta::inc_beta;
pub use gamma::{digamma, gamma, loggamma, pochhammer};
pub use incomplete::{
    expint_en, lower_gamma, upper_gamma, upper_gamma_a_deriv, upper_gamma_continued, upper_gamma_scaled,
    GammaBranchSpec,
};
