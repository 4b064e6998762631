use core::f64::consts::PI;

use super::phi::{lerch_phi, LerchPoint};
use super::polylog::polylog;
use crate::gammakit::gamma;
use crate::numkernel::{c, cpow, neg_one_pow, re, CValue, EvalOutcome, Flags};
use crate::zetakit::hurwitz_zeta;
use crate::{Error, Result};

const I: CValue = CValue::new(0.0, 1.0);

fn phi_at(func: &'static str, what: &str, z: CValue, s: CValue, a: CValue) -> Result<EvalOutcome> {
    LerchPoint::new(z, s, a).and_then(lerch_phi).map_err(|e| e.within(func, what))
}

/// Both sides of
/// Φ(e^{−2imπ}, −k, 1 − t/2π) = i (−1)^k e^{−½i(3kπ + 2m(t−2π))} (2π)^{−1−k} Γ(1+k)
///     · (−Φ(e^{−it}, 1+k, m) + (−1)^k e^{it} Φ(e^{it}, 1+k, 1−m)).
pub fn funeq_sides(k: CValue, t: CValue, m: CValue) -> Result<(EvalOutcome, EvalOutcome)> {
    const F: &str = "funeq_residual";
    let one = re(1.0);
    let lhs = phi_at(F, "LHS Φ(e^{−2imπ}, −k, 1−t/2π)", (-2.0 * PI * I * m).exp(), -k, one - t / (2.0 * PI))?;
    let eit = (I * t).exp();
    let p1 = phi_at(F, "RHS Φ(e^{−it}, 1+k, m)", eit.inv(), one + k, m)?;
    let p2 = phi_at(F, "RHS Φ(e^{it}, 1+k, 1−m)", eit, one + k, one - m)?;
    let g = gamma(one + k).map_err(|e| e.within(F, "Γ(1+k)"))?;
    let sk = neg_one_pow(k);
    let pre = I * sk * (-0.5 * I * (3.0 * PI * k + 2.0 * m * (t - 2.0 * PI))).exp() * cpow(re(2.0 * PI), -one - k)?;
    let rhs = g.scale(pre) * (p2.scale(sk * eit) - p1);
    Ok((lhs, rhs))
}

/// LHS − RHS of [`funeq_sides`].
pub fn funeq_residual(k: CValue, t: CValue, m: CValue) -> Result<EvalOutcome> {
    funeq_sides(k, t, m).map(|(l, r)| l - r)
}

/// Both sides of the Re(x) < 0 functional identity
/// Φ(e^{2iπx}, 1−s, a) = −e^{−½iπ(s − 2 + 4a(1+x))} (2π)^{−s} Γ(s)
///     · (e^{iπs} Φ(e^{−2iaπ}, s, 1+x) + e^{2iaπ} Φ(e^{2iaπ}, s, −x)).
pub fn funeq515_sides(x: CValue, s: CValue, a: CValue) -> Result<(EvalOutcome, EvalOutcome)> {
    const F: &str = "funeq515_residual";
    if !(x.re < 0.0) {
        return Err(Error::domain(F, alloc::format!("needs Re(x) < 0, got {}", x.re)));
    }
    let one = re(1.0);
    let lhs = phi_at(F, "LHS Φ(e^{2iπx}, 1−s, a)", (2.0 * PI * I * x).exp(), one - s, a)?;
    let e2a = (2.0 * PI * I * a).exp();
    let p1 = phi_at(F, "RHS Φ(e^{−2iaπ}, s, 1+x)", e2a.inv(), s, one + x)?;
    let p2 = phi_at(F, "RHS Φ(e^{2iaπ}, s, −x)", e2a, s, -x)?;
    let g = gamma(s).map_err(|e| e.within(F, "Γ(s)"))?;
    let pre = -(-0.5 * I * PI * (s - 2.0 + 4.0 * a * (one + x))).exp() * cpow(re(2.0 * PI), -s)?;
    let rhs = g.scale(pre) * (p1.scale((I * PI * s).exp()) + p2.scale(e2a));
    Ok((lhs, rhs))
}

/// LHS − RHS of [`funeq515_sides`].
pub fn funeq515_residual(x: CValue, s: CValue, a: CValue) -> Result<EvalOutcome> {
    funeq515_sides(x, s, a).map(|(l, r)| l - r)
}

/// Both sides of Li_{−k}(e^{−2imπ}) = i (−1)^k e^{−3ikπ/2} (2π)^{−1−k} Γ(1+k)
///     · ((−1)^k ζ(1+k, 1−m) − ζ(1+k, m)).
pub fn jonquiere_sides(k: CValue, m: CValue) -> Result<(EvalOutcome, EvalOutcome)> {
    const F: &str = "jonquiere_sides";
    let one = re(1.0);
    let z = (-2.0 * PI * I * m).exp();
    let lhs = polylog(-k, z).map_err(|e| e.within(F, "LHS Li_{−k}(e^{−2imπ})"))?;
    let z1 = hurwitz_zeta(one + k, one - m).map_err(|e| e.within(F, "ζ(1+k, 1−m)"))?;
    let z2 = hurwitz_zeta(one + k, m).map_err(|e| e.within(F, "ζ(1+k, m)"))?;
    let g = gamma(one + k).map_err(|e| e.within(F, "Γ(1+k)"))?;
    let sk = neg_one_pow(k);
    let pre = I * sk * (-1.5 * I * PI * k).exp() * cpow(re(2.0 * PI), -one - k)?;
    Ok((lhs, g.scale(pre) * (z1.scale(sk) - z2)))
}

/// LHS − RHS of [`jonquiere_sides`].
///
/// Real m puts the polylog argument on the unit circle: the outcome carries
/// DOMAIN_EDGE (and NaN if the circle point is not evaluable).
pub fn jonquiere_residual(k: CValue, m: CValue) -> Result<EvalOutcome> {
    let edge = ((-2.0 * PI * I * m).exp().norm() - 1.0).abs() <= 1e-12;
    match jonquiere_sides(k, m) {
        Ok((l, r)) if edge => Ok((l - r).with_flags(Flags::DOMAIN_EDGE)),
        Ok((l, r)) => Ok(l - r),
        Err(_) if edge => Ok(EvalOutcome::new(c(f64::NAN, f64::NAN), f64::INFINITY, Flags::DOMAIN_EDGE)),
        Err(e) => Err(e),
    }
}
