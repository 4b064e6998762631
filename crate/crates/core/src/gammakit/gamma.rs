use alloc::format;
use core::f64::consts::PI;

use crate::numkernel::{
    c, clog, is_nonpositive_integer, re, sinpi, CValue, EvalOutcome, NeumaierSum, BERNOULLI_EVEN, EPS,
};
use crate::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

fn pole(func: &'static str, z: CValue) -> Error {
    Error::domain(func, format!("pole at z = {}", z.re))
}

fn lanczos(z: CValue) -> CValue {
    let z = z - 1.0;
    let mut x = re(LANCZOS[0]);
    for (i, p) in LANCZOS.iter().enumerate().skip(1) {
        x += *p / (z + i as f64);
    }
    let t = z + (LANCZOS_G + 0.5);
    // √(2π) t^{z+½} e^{−t}
    ((z + 0.5) * t.ln() - t + HALF_LN_2PI).exp() * x
}

pub(crate) fn gamma_raw(z: CValue) -> CValue {
    if z.im == 0.0 && z.re > 0.0 && z.re.fract() == 0.0 && z.re <= 23.0 {
        let n = z.re as u32;
        return re((1..n).fold(1.0, |p, k| p * k as f64));
    }
    if z.re < 0.5 {
        re(PI) / (sinpi(z) * lanczos(re(1.0) - z))
    } else {
        lanczos(z)
    }
}

/// Γ(z), Lanczos with reflection for Re z < ½.
pub fn gamma(z: CValue) -> Result<EvalOutcome> {
    if is_nonpositive_integer(z) {
        return Err(pole("gamma", z));
    }
    let v = gamma_raw(z);
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Ok(EvalOutcome::new(v, f64::INFINITY, crate::Flags::empty()));
    }
    let grow = 1.0 + z.norm() * 0.25;
    Ok(EvalOutcome::converged(v, 8.0 * EPS * grow * v.norm()))
}

/// Stirling series for lnΓ(w), |w| ≥ 10.
fn stirling(w: CValue) -> CValue {
    let lw = w.ln();
    let mut s = (w - 0.5) * lw - w + HALF_LN_2PI;
    let w2 = w * w;
    let mut wp = w;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate().take(10) {
        let k2 = 2.0 * (k as f64 + 1.0);
        s += *b / (k2 * (k2 - 1.0)) / wp;
        wp *= w2;
    }
    s
}

/// Principal log-gamma: analytic on C \ (−∞, 0], real on the positive axis.
///
/// Differs from clog(Γ(z)) by multiples of 2πi away from the positive axis.
pub fn loggamma(z: CValue) -> Result<EvalOutcome> {
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::domain("loggamma", format!("z = {} lies on the cut (-inf, 0]", z.re)));
    }
    if z == re(1.0) || z == re(2.0) {
        return Ok(EvalOutcome::exact(re(0.0)));
    }
    let shift = if z.im.abs() >= 10.0 { 0 } else { libm::ceil((10.0 - z.re).max(0.0)) as usize };
    let w = z + shift as f64;
    let st = stirling(w);
    let mut acc = NeumaierSum::new();
    acc.add(st);
    for k in 0..shift {
        acc.add(-clog(z + k as f64)?);
    }
    let v = acc.value();
    if shift > 0 {
        // The shifted sum fixes the branch; log Γ(z) supplies the digits.
        let g = gamma_raw(z);
        if g.norm() > 1e-300 && g.norm().is_finite() {
            let l = clog(g)?;
            let k = libm::round((v.im - l.im) / (2.0 * PI));
            let w = l + c(0.0, 2.0 * PI * k);
            return Ok(EvalOutcome::converged(w, 8.0 * EPS * (1.0 + w.norm()) * (1.0 + z.norm() * 0.25)));
        }
    }
    Ok(EvalOutcome::converged(v, 4.0 * EPS * (acc.abs_sum() + v.norm())))
}

/// ψ(z) = Γ'(z)/Γ(z).
pub fn digamma(z: CValue) -> Result<EvalOutcome> {
    if is_nonpositive_integer(z) {
        return Err(pole("digamma", z));
    }
    if z.re < 0.0 {
        // ψ(z) = ψ(1 − z) − π cot(πz)
        let w = re(1.0) - z;
        let d = digamma(w)?;
        let cot = crate::numkernel::cospi(z) / sinpi(z);
        let v = d.value - cot * PI;
        return Ok(EvalOutcome::converged(v, d.abs_err_est + 4.0 * EPS * (cot.norm() * PI + v.norm())));
    }
    let shift = if z.im.abs() >= 10.0 { 0 } else { libm::ceil((10.0 - z.re).max(0.0)) as usize };
    let w = z + shift as f64;
    let mut acc = NeumaierSum::new();
    acc.add(w.ln());
    acc.add(-(w * 2.0).inv());
    let w2 = w * w;
    let mut wp = w2;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate().take(10) {
        let k2 = 2.0 * (k as f64 + 1.0);
        acc.add(-(*b / k2) / wp);
        wp *= w2;
    }
    for k in 0..shift {
        acc.add(-(z + k as f64).inv());
    }
    let v = acc.value();
    Ok(EvalOutcome::converged(v, 4.0 * EPS * (acc.abs_sum() + v.norm())))
}

/// Rising factorial (z)_n = z(z+1)…(z+n−1).
pub fn pochhammer(z: CValue, n: u32) -> CValue {
    (0..n).fold(c(1.0, 0.0), |p, k| p * (z + k as f64))
}
