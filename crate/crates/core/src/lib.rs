//! Complex special functions around the Hurwitz–Lerch zeta function.
//!
//! Everything here is `no_std` (with `alloc`) and works in IEEE-754 binary64.
//! Evaluators return an [`EvalOutcome`]: a value, an absolute error estimate
//! and status flags. Domain violations are reported as [`Error`].
//!
//! Modules, bottom up:
//! - [`numkernel`]: branch-consistent `clog`/`cpow`, compensated sums, series
//!   acceleration, contour differentiation.
//! - [`gammakit`]: Γ, logΓ, ψ, incomplete gamma (with sheet continuation), E_n,
//!   incomplete beta.
//! - [`zetakit`]: Hurwitz zeta and its s-derivatives, Stieltjes constants,
//!   exact Bernoulli/Euler numbers.
//! - [`lerchkit`]: Φ(z, s, a), derivatives, polylog, χ, Ti and functional
//!   equation residuals.
//! - [`quadkit`]: tanh-sinh, exp-sinh and principal-value quadrature.
#![no_std]

extern crate alloc;

pub mod error;
pub mod gammakit;
pub mod lerchkit;
pub mod numkernel;
pub mod quadkit;
pub mod zetakit;

pub use error::{Error, Result};
pub use numkernel::{CValue, EvalOutcome, Flags};
