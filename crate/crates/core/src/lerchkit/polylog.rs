use core::f64::consts::LN_2;

use super::phi::{lerch_phi, lerch_phi_sderiv, LerchPoint};
use crate::numkernel::{cpow, re, CValue, EvalOutcome};
use crate::zetakit::{hurwitz_zeta, hurwitz_zeta_sderiv};
use crate::Result;

/// Li_s(z) = z Φ(z, s, 1).
pub fn polylog(s: CValue, z: CValue) -> Result<EvalOutcome> {
    if z == re(0.0) {
        return Ok(EvalOutcome::exact(re(0.0)));
    }
    Ok(lerch_phi(LerchPoint::new(z, s, re(1.0))?)?.scale(z))
}

/// ∂_s Li_s(z). At z = −1 this is −η′(s) with η(s) = (1 − 2^{1−s}) ζ(s).
pub fn polylog_sderiv(s: CValue, z: CValue) -> Result<EvalOutcome> {
    if z == re(0.0) {
        return Ok(EvalOutcome::exact(re(0.0)));
    }
    if z == re(-1.0) && (s - 1.0).norm() > 0.05 {
        let p = cpow(re(2.0), re(1.0) - s)?;
        let zeta = hurwitz_zeta(s, re(1.0))?;
        let dzeta = hurwitz_zeta_sderiv(1, s, re(1.0))?;
        let eta_d = zeta.scale(p * LN_2) + dzeta.scale(re(1.0) - p);
        return Ok(-eta_d);
    }
    Ok(lerch_phi_sderiv(1, LerchPoint::new(z, s, re(1.0))?)?.scale(z))
}

fn odd_series(s: CValue, z: CValue, w: CValue) -> Result<EvalOutcome> {
    if z == re(0.0) {
        return Ok(EvalOutcome::exact(re(0.0)));
    }
    let k = z * cpow(re(2.0), -s)?;
    Ok(lerch_phi(LerchPoint::new(w, s, re(0.5))?)?.scale(k))
}

/// Legendre chi χ_s(z) = Σ_{k≥0} z^{2k+1}/(2k+1)^s = z 2^{−s} Φ(z², s, ½).
pub fn legendre_chi(s: CValue, z: CValue) -> Result<EvalOutcome> {
    odd_series(s, z, z * z)
}

/// Inverse tangent integral Ti_s(z) = Σ_{k≥0} (−1)^k z^{2k+1}/(2k+1)^s.
pub fn ti_inverse_tangent_integral(s: CValue, z: CValue) -> Result<EvalOutcome> {
    odd_series(s, z, -(z * z))
}
