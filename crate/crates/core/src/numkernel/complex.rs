use core::f64::consts::PI;
use core::ops::AddAssign;

use super::{c, CValue};
use crate::{Error, Result};

/// Principal logarithm: cut along the negative real axis, Im ∈ (−π, π].
///
/// A signed zero imaginary part on the negative axis is folded onto the
/// upper lip so that `clog(-1) == iπ` regardless of the sign of zero.
pub fn clog(z: CValue) -> Result<CValue> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::domain("clog", "log of zero"));
    }
    let (x, y) = (z.re, z.im);
    let ax = x.abs().max(y.abs());
    let bx = x.abs().min(y.abs());
    // log|z| with extra care near the unit circle.
    let lr = if ax > 0.5 && ax < 2.0 && bx < 1.0 {
        0.5 * libm::log1p((ax - 1.0) * (ax + 1.0) + bx * bx)
    } else {
        libm::log(libm::hypot(x, y))
    };
    let th = if y == 0.0 && x < 0.0 { PI } else { libm::atan2(y, x) };
    Ok(c(lr, th))
}

/// Principal power z^w = exp(w·clog z).
pub fn cpow(z: CValue, w: CValue) -> Result<CValue> {
    if z.re == 0.0 && z.im == 0.0 {
        if w.re > 0.0 {
            return Ok(c(0.0, 0.0));
        }
        return Err(Error::domain("cpow", "zero base with Re(w) <= 0"));
    }
    if w.im == 0.0 {
        if w.re == 0.0 {
            return Ok(c(1.0, 0.0));
        }
        if w.re == 1.0 {
            return Ok(z);
        }
        if z.im == 0.0 && z.re > 0.0 {
            return Ok(c(libm::pow(z.re, w.re), 0.0));
        }
        if w.re.fract() == 0.0 && w.re.abs() <= 8.0 {
            return Ok(z.powi(w.re as i32));
        }
    }
    Ok((w * clog(z)?).exp())
}

/// Principal power with a positive real base: x^w.
#[inline]
pub fn cpow_real(x: f64, w: CValue) -> CValue {
    debug_assert!(x > 0.0);
    if w.im == 0.0 {
        return c(libm::pow(x, w.re), 0.0);
    }
    let l = libm::log(x);
    let m = libm::exp(w.re * l);
    let (s, co) = libm::sincos(w.im * l);
    c(m * co, m * s)
}

/// exp(w) − 1 without cancellation for small |w|.
pub fn cexpm1(w: CValue) -> CValue {
    let (x, y) = (w.re, w.im);
    let em1 = libm::expm1(x);
    let (s, co) = libm::sincos(y);
    let h = libm::sin(0.5 * y);
    // cos y − 1 = −2 sin²(y/2)
    c(em1 * co - 2.0 * h * h, (em1 + 1.0) * s)
}

/// True when z is 0, −1, −2, … exactly.
pub fn is_nonpositive_integer(z: CValue) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Kahan–Neumaier compensated accumulator for complex terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: CValue,
    comp: CValue,
    abs: f64,
}

#[inline]
fn two_sum(s: f64, t: f64) -> (f64, f64) {
    let n = s + t;
    let e = if s.abs() >= t.abs() { (s - n) + t } else { (t - n) + s };
    (n, e)
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, t: CValue) {
        let (r, er) = two_sum(self.sum.re, t.re);
        let (i, ei) = two_sum(self.sum.im, t.im);
        self.sum = c(r, i);
        self.comp += c(er, ei);
        self.abs += t.norm();
    }

    pub fn value(&self) -> CValue {
        self.sum + self.comp
    }

    /// Σ|t| over everything added, for roundoff estimates.
    pub fn abs_sum(&self) -> f64 {
        self.abs
    }
}

impl AddAssign<CValue> for NeumaierSum {
    fn add_assign(&mut self, t: CValue) {
        self.add(t);
    }
}

impl core::iter::FromIterator<CValue> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = CValue>>(it: I) -> Self {
        let mut s = NeumaierSum::new();
        for t in it {
            s.add(t);
        }
        s
    }
}
