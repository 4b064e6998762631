use alloc::format;
use core::f64::consts::PI;

use super::gamma::gamma;
use crate::numkernel::{
    c, cauchy_deriv, cexpm1, cispi, clog, cpow, is_nonpositive_integer, re, sum_iter, CValue, EvalOutcome, Flags, EPS,
};
use crate::{Error, Result};

/// Sheet index m for Γ(a, z·e^{2πim}).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GammaBranchSpec {
    pub winding: i64,
}

const SERIES_TOL: f64 = 1e-16;
const CF_MAX_ITER: usize = 20_000;

/// Taylor coefficients of 1/Γ(1+a) about a = 0.
const RGAMMA1P: [f64; 29] = [
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -2.013_485_478_078_823_865_6e-5,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
    1.186_692_254_751_600_332_6e-18,
    1.412_380_655_318_031_781_6e-18,
    -2.298_745_684_435_370_206_6e-19,
];

fn is_zero(z: CValue) -> bool {
    z.re == 0.0 && z.im == 0.0
}

/// Continued fraction is used well away from the origin and the cut.
fn use_cf(a: CValue, z: CValue) -> bool {
    let r = z.norm();
    let arg = libm::atan2(z.im, z.re).abs();
    r > 2.5 && r > 0.75 * (a.re + 1.0) && arg < 0.9 * PI
}

/// z^a e^{−z}, computed in one exponential.
fn za_emz(a: CValue, z: CValue) -> Result<CValue> {
    Ok((a * clog(z)? - z).exp())
}

/// Γ(a, z) by the Legendre continued fraction (modified Lentz); with
/// `scaled` the result is e^{z}Γ(a, z).
fn upper_cf(a: CValue, z: CValue, scaled: bool) -> Result<EvalOutcome> {
    const TINY: f64 = 1e-300;
    let mut b = z + 1.0 - a;
    let mut cc = re(1.0 / TINY);
    let mut d = b.inv();
    let mut h = d;
    let mut ok = false;
    let mut iters = 0;
    for i in 1..CF_MAX_ITER {
        let fi = i as f64;
        let an = -(re(fi) - a) * fi;
        b += 2.0;
        d = an * d + b;
        if d.norm() < TINY {
            d = re(TINY);
        }
        cc = b + an / cc;
        if cc.norm() < TINY {
            cc = re(TINY);
        }
        d = d.inv();
        let del = d * cc;
        h *= del;
        iters = i;
        if (del - 1.0).norm() < 2.0 * EPS {
            ok = true;
            break;
        }
    }
    let pre = if scaled { cpow(z, a)? } else { za_emz(a, z)? };
    let v = pre * h;
    let err = v.norm() * EPS * (8.0 + libm::sqrt(iters as f64) + (a * clog(z)?).norm());
    let flags = if ok { Flags::CONVERGED } else { Flags::MAX_TERMS };
    Ok(EvalOutcome::new(v, if ok { err } else { f64::INFINITY.min(v.norm()) }, flags))
}

/// γ(a, z) by Kummer's series; a must not be a nonpositive integer.
fn lower_series(a: CValue, z: CValue) -> Result<EvalOutcome> {
    if z.re >= 0.0 {
        // z^a e^{−z} Σ z^n / (a)_{n+1}
        let mut t = a.inv();
        let first = t;
        let terms = core::iter::once(first).chain((1..4000).map(move |n| {
            t = t * z / (a + n as f64);
            t
        }));
        let s = sum_iter(terms, SERIES_TOL);
        let pre = za_emz(a, z)?;
        Ok(s.scale(pre))
    } else {
        // z^a Σ (−z)^n / (n! (a+n))
        let mz = -z;
        let mut p = re(1.0);
        let terms = core::iter::once(a.inv()).chain((1..4000).map(move |n| {
            p = p * mz / n as f64;
            p / (a + n as f64)
        }));
        let s = sum_iter(terms, SERIES_TOL);
        let pre = cpow(z, a)?;
        Ok(s.scale(pre))
    }
}

/// (Γ(1+a) − 1)/a for |a| < ½, from the Taylor series of 1/Γ(1+a).
fn gamma1pm1_over_a(a: CValue) -> CValue {
    let mut r = re(0.0);
    let mut q = re(0.0);
    for (k, d) in RGAMMA1P.iter().enumerate().rev() {
        r = r * a + *d;
        if k >= 1 {
            q = q * a + *d;
        }
    }
    // 1/Γ(1+a) = 1 + a·q  ⇒  (Γ(1+a) − 1)/a = −q / (1 + a q)
    -q / r
}

/// Γ(a, z) for |a| < ½ and z outside the continued-fraction region.
fn upper_small_a(a: CValue, z: CValue) -> Result<EvalOutcome> {
    let l = clog(z)?;
    let z1 = if is_zero(a) { l } else { cexpm1(a * l) / a };
    let g1 = gamma1pm1_over_a(a);
    // z^a Σ_{n≥1} (−z)^n / (n! (a+n))
    let mz = -z;
    let mut p = re(1.0);
    let terms = (1..4000).map(move |n| {
        p = p * mz / n as f64;
        p / (a + n as f64)
    });
    let s = sum_iter(terms, SERIES_TOL);
    let za = if is_zero(a) { re(1.0) } else { (a * l).exp() };
    let tail = s.scale(za);
    let head = g1 - z1;
    let v = head - tail.value;
    let err = tail.abs_err_est + 4.0 * EPS * (g1.norm() + z1.norm() + tail.value.norm());
    Ok(EvalOutcome::new(v, err, tail.flags))
}

fn upper_principal(a: CValue, z: CValue) -> Result<EvalOutcome> {
    if use_cf(a, z) {
        return upper_cf(a, z, false);
    }
    if a.norm() < 0.5 {
        return upper_small_a(a, z);
    }
    if a.re >= -0.5 {
        let g = gamma(a)?;
        return Ok(g - lower_series(a, z)?);
    }
    // Downward recurrence Γ(a, z) = (Γ(a+1, z) − z^a e^{−z}) / a from a
    // start point with Re in [−½, ½).
    let k = libm::ceil(-0.5 - a.re) as usize;
    let mut b = a + k as f64;
    let mut acc = upper_principal(b, z)?;
    for _ in 0..k {
        b -= 1.0;
        let t = za_emz(b, z)?;
        let v = (acc.value - t) / b;
        let err = (acc.abs_err_est + 2.0 * EPS * (acc.value.norm() + t.norm())) / b.norm();
        acc = EvalOutcome::new(v, err, acc.flags);
    }
    Ok(acc)
}

/// Upper incomplete gamma Γ(a, z), principal branch (cut along z ≤ 0).
pub fn upper_gamma(a: CValue, z: CValue) -> Result<EvalOutcome> {
    if is_zero(z) {
        if a.re > 0.0 {
            return gamma(a);
        }
        return Err(Error::domain("upper_gamma", "z = 0 requires Re(a) > 0"));
    }
    upper_principal(a, z)
}

/// e^{z}Γ(a, z), principal branch. Stays finite where e^{z} and Γ(a, z)
/// separately overflow/underflow (large |z| off the positive axis).
pub fn upper_gamma_scaled(a: CValue, z: CValue) -> Result<EvalOutcome> {
    if is_zero(z) {
        return upper_gamma(a, z);
    }
    let r = z.norm();
    let arg = libm::atan2(z.im, z.re).abs();
    // far from the origin the fraction converges quickly even near the cut
    if use_cf(a, z) || (r > 30.0_f64.max(2.0 * a.norm() + 10.0) && arg < PI - 1e-6) {
        return upper_cf(a, z, true);
    }
    Ok(upper_principal(a, z)?.scale(z.exp()))
}

/// Lower incomplete gamma γ(a, z) = Γ(a) − Γ(a, z).
pub fn lower_gamma(a: CValue, z: CValue) -> Result<EvalOutcome> {
    if is_nonpositive_integer(a) {
        return Err(Error::domain("lower_gamma", format!("pole at a = {} (residue (-1)^n/n!)", a.re)));
    }
    if is_zero(z) {
        if a.re > 0.0 {
            return Ok(EvalOutcome::exact(re(0.0)));
        }
        return Err(Error::domain("lower_gamma", "z = 0 requires Re(a) > 0"));
    }
    if use_cf(a, z) {
        return Ok(gamma(a)? - upper_cf(a, z, false)?);
    }
    lower_series(a, z)
}

/// Γ(a, z·e^{2πim}) = e^{2πima}Γ(a, z) + (1 − e^{2πima})Γ(a).
pub fn upper_gamma_continued(a: CValue, z: CValue, branch: GammaBranchSpec) -> Result<EvalOutcome> {
    let m = branch.winding;
    if m == 0 {
        return upper_gamma(a, z);
    }
    if is_nonpositive_integer(a) {
        return Err(Error::domain(
            "upper_gamma_continued",
            format!("Γ(a) has a pole at a = {} on sheet m = {m}", a.re),
        ));
    }
    let up = upper_gamma(a, z)?;
    let mf = m as f64;
    // e^{2πima} with the real part of m·a reduced exactly.
    let e = cispi(2.0 * (mf * a.re).rem_euclid(1.0)) * libm::exp(-2.0 * PI * mf * a.im);
    if e == re(1.0) {
        return Ok(up);
    }
    let one_minus_e = -cexpm1(c(-2.0 * PI * mf * a.im, 2.0 * PI * (mf * a.re).rem_euclid(1.0)));
    Ok(up.scale(e) + gamma(a)?.scale(one_minus_e))
}

/// ∂Γ(a, z)/∂a by contour differentiation in a.
pub fn upper_gamma_a_deriv(a: CValue, z: CValue) -> Result<EvalOutcome> {
    if is_zero(z) {
        return Err(Error::domain("upper_gamma_a_deriv", "z = 0"));
    }
    cauchy_deriv(|b| upper_gamma(b, z), a, 1, 0.25, 32)
}

/// Generalised exponential integral E_n(z) = z^{n−1} Γ(1−n, z).
pub fn expint_en(n: u32, z: CValue) -> Result<EvalOutcome> {
    if n == 0 {
        return Err(Error::domain("expint_en", "order must be >= 1"));
    }
    if is_zero(z) {
        return Err(Error::domain("expint_en", "z = 0"));
    }
    let g = upper_gamma(re(1.0 - n as f64), z)?;
    if n == 1 {
        return Ok(g);
    }
    Ok(g.scale(z.powu(n - 1)))
}
