//! Shared numerical machinery: principal-branch complex primitives,
//! compensated summation, series acceleration and contour differentiation.

mod complex;
mod contour;
mod outcome;
mod series;

pub use complex::{cexpm1, clog, cpow, cpow_real, is_nonpositive_integer, NeumaierSum};
pub use contour::{cauchy_deriv, cauchy_deriv_with, CauchyOptions};
pub use outcome::{EvalOutcome, Flags};
pub use series::{block_for_angle, condensed, sum_iter, sum_power_series, sum_series, Accel, SeriesSpec};

/// The universal numeric currency: a binary64 complex number.
pub type CValue = num_complex::Complex64;

/// Default relative target for well-conditioned evaluations.
pub const TARGET_TOL: f64 = 1e-13;

pub(crate) const EPS: f64 = f64::EPSILON;

#[inline]
pub(crate) fn c(re: f64, im: f64) -> CValue {
    CValue::new(re, im)
}

#[inline]
pub(crate) fn re(x: f64) -> CValue {
    CValue::new(x, 0.0)
}

/// B_2, B_4, …, B_26 in binary64 (exact values live in `zetakit`).
pub(crate) const BERNOULLI_EVEN: [f64; 13] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
];

/// sin(πz) with exact argument reduction by the nearest integer.
pub(crate) fn sinpi(z: CValue) -> CValue {
    let n = libm::round(z.re);
    let r = CValue::new(z.re - n, z.im) * core::f64::consts::PI;
    let s = r.sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// cos(πz) with exact argument reduction.
pub(crate) fn cospi(z: CValue) -> CValue {
    let n = libm::round(z.re);
    let r = CValue::new(z.re - n, z.im) * core::f64::consts::PI;
    let s = r.cos();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// e^{iπx} for real x, exact at integers and half-integers.
pub(crate) fn cispi(x: f64) -> CValue {
    let r = x - 2.0 * libm::floor(x / 2.0);
    match r {
        v if v == 0.0 => CValue::new(1.0, 0.0),
        v if v == 0.5 => CValue::new(0.0, 1.0),
        v if v == 1.0 => CValue::new(-1.0, 0.0),
        v if v == 1.5 => CValue::new(0.0, -1.0),
        v => {
            let (s, co) = libm::sincos(core::f64::consts::PI * v);
            CValue::new(co, s)
        }
    }
}

/// e^{iπw} for complex w (the principal reading of (−1)^w).
pub fn neg_one_pow(w: CValue) -> CValue {
    cispi(w.re) * libm::exp(-core::f64::consts::PI * w.im)
}
