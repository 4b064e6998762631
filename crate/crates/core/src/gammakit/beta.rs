use alloc::format;

use super::gamma::gamma;
use crate::numkernel::{cpow, is_nonpositive_integer, re, sum_power_series, CValue, EvalOutcome, Flags, EPS};
use crate::{Error, Result};

const CF_MAX_ITER: usize = 10_000;

/// Incomplete beta B_z(a, b) = ∫₀^z t^{a−1}(1−t)^{b−1} dt, principal powers.
///
/// b = 0 uses the log-series Σ z^{a+n}/(a+n), which also converges on the
/// unit circle away from z = 1; other b use Gauss's continued fraction.
pub fn inc_beta(z: CValue, a: CValue, b: CValue) -> Result<EvalOutcome> {
    if z.im == 0.0 && z.re >= 1.0 && !(z.re == 1.0 && b.re > 0.0) {
        return Err(Error::domain("inc_beta", "z on the cut [1, inf)"));
    }
    if z.re == 0.0 && z.im == 0.0 {
        if a.re > 0.0 {
            return Ok(EvalOutcome::exact(re(0.0)));
        }
        return Err(Error::domain("inc_beta", "z = 0 requires Re(a) > 0"));
    }
    if b == re(0.0) {
        return log_series(z, a);
    }
    if b == re(1.0) {
        return Ok(EvalOutcome::exact(cpow(z, a)? / a));
    }
    let one = re(1.0);
    let flip = (one - z).norm() < z.norm() && (z - one).norm() > 0.0;
    if flip && !is_nonpositive_integer(a) && !is_nonpositive_integer(b) && !is_nonpositive_integer(a + b) {
        let full = gamma(a)? * gamma(b)? * gamma(a + b)?.recip();
        return Ok(full - gauss_cf(one - z, b, a)?);
    }
    gauss_cf(z, a, b)
}

fn log_series(z: CValue, a: CValue) -> Result<EvalOutcome> {
    if is_nonpositive_integer(a) {
        return Err(Error::domain("inc_beta", format!("a = {} is a nonpositive integer", a.re)));
    }
    let r = z.norm();
    if r > 1.0 + 1e-12 || (z - 1.0).norm() < 1e-12 {
        return Err(Error::domain("inc_beta", "b = 0 log-series diverges for |z| >= 1 at or beyond z = 1"));
    }
    let s = sum_power_series(z, |n| (a + n as f64).inv(), 1e-15);
    Ok(s.scale(cpow(z, a)?))
}

fn gauss_cf(z: CValue, a: CValue, b: CValue) -> Result<EvalOutcome> {
    const TINY: f64 = 1e-300;
    let one = re(1.0);
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut cc = one;
    let mut d = one - qab * z / qap;
    if d.norm() < TINY {
        d = re(TINY);
    }
    d = d.inv();
    let mut h = d;
    let mut ok = false;
    for m in 1..CF_MAX_ITER {
        let mf = m as f64;
        let m2 = 2.0 * mf;
        let aa = (b - mf) * z * mf / ((qam + m2) * (a + m2));
        d = one + aa * d;
        if d.norm() < TINY {
            d = re(TINY);
        }
        cc = one + aa / cc;
        if cc.norm() < TINY {
            cc = re(TINY);
        }
        d = d.inv();
        h *= d * cc;
        let aa = -(a + mf) * (qab + mf) * z / ((a + m2) * (qap + m2));
        d = one + aa * d;
        if d.norm() < TINY {
            d = re(TINY);
        }
        cc = one + aa / cc;
        if cc.norm() < TINY {
            cc = re(TINY);
        }
        d = d.inv();
        let del = d * cc;
        h *= del;
        if (del - 1.0).norm() < 4.0 * EPS {
            ok = true;
            break;
        }
    }
    let pre = cpow(z, a)? * cpow(one - z, b)? / a;
    let v = pre * h;
    let flags = if ok { Flags::CONVERGED } else { Flags::MAX_TERMS };
    Ok(EvalOutcome::new(v, 32.0 * EPS * v.norm(), flags))
}
