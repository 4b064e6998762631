use core::f64::consts::PI;

use super::{CValue, EvalOutcome, Flags, EPS};
use crate::Result;

/// Parameters of the trapezoid rule on a circle.
#[derive(Debug, Clone, Copy)]
pub struct CauchyOptions {
    pub radius: f64,
    pub nodes: usize,
    /// Relative tolerance for the CONVERGED flag.
    pub tol: f64,
    /// How many times the radius may be halved after a domain error.
    pub shrink: u32,
}

impl Default for CauchyOptions {
    fn default() -> Self {
        CauchyOptions { radius: 0.25, nodes: 32, tol: 1e-10, shrink: 6 }
    }
}

/// j-th derivative of `f` at `z0` from the Cauchy integral, N-point trapezoid
/// on |z − z0| = radius, compared against 2N points for the error estimate.
///
/// `f` reports its own error estimate; it is propagated through the
/// j!/r^j amplification. Domain errors from `f` halve the radius.
pub fn cauchy_deriv<F>(f: F, z0: CValue, order: u32, radius: f64, nodes: usize) -> Result<EvalOutcome>
where
    F: Fn(CValue) -> Result<EvalOutcome>,
{
    cauchy_deriv_with(f, z0, order, CauchyOptions { radius, nodes, ..CauchyOptions::default() })
}

pub fn cauchy_deriv_with<F>(f: F, z0: CValue, order: u32, opts: CauchyOptions) -> Result<EvalOutcome>
where
    F: Fn(CValue) -> Result<EvalOutcome>,
{
    assert!(order >= 1 && opts.nodes >= 16);
    let mut r = opts.radius;
    let mut tries = 0;
    loop {
        match ring(&f, z0, order, r, opts) {
            Ok(v) => return Ok(v),
            Err(e) if tries >= opts.shrink => return Err(e),
            Err(_) => {
                tries += 1;
                r *= 0.5;
            }
        }
    }
}

fn ring<F>(f: &F, z0: CValue, j: u32, r: f64, opts: CauchyOptions) -> Result<EvalOutcome>
where
    F: Fn(CValue) -> Result<EvalOutcome>,
{
    let n2 = 2 * opts.nodes;
    let mut coarse = CValue::new(0.0, 0.0);
    let mut fine = CValue::new(0.0, 0.0);
    let mut fmax = 0.0f64;
    let mut errmax = 0.0f64;
    let mut flags = Flags::CONVERGED;
    for k in 0..n2 {
        let th = 2.0 * PI * (k as f64) / (n2 as f64);
        let (s, co) = libm::sincos(th);
        let w = CValue::new(co, s);
        let o = f(z0 + w * r)?;
        if !(o.value.re.is_finite() && o.value.im.is_finite()) {
            return Ok(EvalOutcome::new(CValue::new(f64::NAN, f64::NAN), f64::INFINITY, Flags::empty()));
        }
        if !o.is_converged() {
            flags.remove(Flags::CONVERGED);
        }
        flags |= o.flags - Flags::CONVERGED;
        // w^{-j}
        let (sj, cj) = libm::sincos(-(j as f64) * th);
        let t = o.value * CValue::new(cj, sj);
        fine += t;
        if k % 2 == 0 {
            coarse += t;
        }
        fmax = fmax.max(o.value.norm());
        errmax = errmax.max(o.abs_err_est);
    }
    let amp = factorial(j) / libm::pow(r, j as f64);
    let dc = coarse * (amp / opts.nodes as f64);
    let df = fine * (amp / n2 as f64);
    let err = (df - dc).norm() + amp * (errmax + 4.0 * EPS * fmax);
    if err > opts.tol * df.norm().max(1.0) {
        flags.remove(Flags::CONVERGED);
    }
    Ok(EvalOutcome::new(df, err, flags))
}

fn factorial(j: u32) -> f64 {
    (1..=j).fold(1.0, |p, k| p * k as f64)
}
