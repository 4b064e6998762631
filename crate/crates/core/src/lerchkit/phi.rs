use alloc::format;
use core::f64::consts::PI;

use crate::numkernel::{
    cauchy_deriv_with, cispi, cpow, is_nonpositive_integer, re, sum_power_series, CValue, CauchyOptions, EvalOutcome,
    NeumaierSum, EPS,
};
use crate::zetakit::{hurwitz_zeta, hurwitz_zeta_sderiv};
use crate::{Error, Result};

const CIRCLE_SLACK: f64 = 1e-12;
const SERIES_TOL: f64 = 1e-14;
/// Below this Re(s), roots of unity go through the Hurwitz decomposition.
const DECOMPOSE_BELOW: f64 = 0.25;
const MAX_ROOT_ORDER: u32 = 12;

/// A point (z, s, a) where Φ is evaluable.
///
/// |z| ≤ 1; on the circle z ≠ 1 needs Re(s) > 0 (or z a root of unity of
/// order ≤ 12, evaluated by finite Hurwitz decomposition); z = 1 needs
/// Re(s) > 1; a is never a nonpositive integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LerchPoint {
    pub z: CValue,
    pub s: CValue,
    pub a: CValue,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Region {
    Origin,
    Disk,
    One,
    /// z = e^{2πi p/q}
    Root {
        p: u32,
        q: u32,
    },
    Circle,
}

impl LerchPoint {
    pub fn new(z: CValue, s: CValue, a: CValue) -> Result<Self> {
        let p = LerchPoint { z, s, a };
        p.region("lerch_phi")?;
        Ok(p)
    }

    pub fn on_circle(&self) -> bool {
        (self.z.norm() - 1.0).abs() <= CIRCLE_SLACK
    }

    fn region(&self, func: &'static str) -> Result<Region> {
        let LerchPoint { z, s, a } = *self;
        let finite = |w: CValue| w.re.is_finite() && w.im.is_finite();
        if !(finite(z) && finite(s) && finite(a)) {
            return Err(Error::domain(func, "non-finite argument"));
        }
        if is_nonpositive_integer(a) {
            return Err(Error::domain(func, format!("a = {} is a nonpositive integer", a.re)));
        }
        let r = z.norm();
        if r > 1.0 + CIRCLE_SLACK {
            return Err(Error::domain(func, format!("|z| = {r} > 1")));
        }
        if r == 0.0 {
            return Ok(Region::Origin);
        }
        if r < 1.0 - CIRCLE_SLACK {
            return Ok(Region::Disk);
        }
        if let Some((p, q)) = root_of_unity(z) {
            if q == 1 {
                if s.re <= 1.0 {
                    return Err(Error::domain(func, format!("z = 1 needs Re(s) > 1, got {}", s.re)));
                }
                return Ok(Region::One);
            }
            if s.re <= DECOMPOSE_BELOW {
                return Ok(Region::Root { p, q });
            }
            return Ok(Region::Circle);
        }
        if s.re <= 0.0 {
            return Err(Error::domain(func, format!("|z| = 1 needs Re(s) > 0, got {}", s.re)));
        }
        Ok(Region::Circle)
    }
}

fn root_of_unity(z: CValue) -> Option<(u32, u32)> {
    let mut t = libm::atan2(z.im, z.re) / (2.0 * PI);
    if t < 0.0 {
        t += 1.0;
    }
    (1..=MAX_ROOT_ORDER).find_map(|q| {
        let x = t * q as f64;
        let p = libm::round(x);
        ((x - p).abs() <= 1e-12 * q as f64).then(|| ((p as u32) % q, q))
    })
}

/// Σ_{n≥0} w(n) zⁿ (n+a)^{−s}; terms with Re(n+a) < ½ are added explicitly
/// so the accelerated tail sees a smooth, branch-free summand.
pub(crate) fn weighted_sum<W: Fn(usize) -> f64>(z: CValue, s: CValue, a: CValue, w: W) -> Result<EvalOutcome> {
    let k = libm::ceil((0.5 - a.re).max(0.0)) as usize;
    let mut head = NeumaierSum::new();
    let mut zk = re(1.0);
    for n in 0..k {
        head.add(zk * cpow(a + n as f64, -s)? * w(n));
        zk *= z;
    }
    let b = a + k as f64;
    let tail = sum_power_series(
        z,
        |n| cpow(b + n as f64, -s).unwrap_or(CValue::new(f64::NAN, f64::NAN)) * w(n + k),
        SERIES_TOL,
    );
    let h = head.value();
    let herr = 4.0 * EPS * head.abs_sum();
    Ok(tail.scale(zk) + EvalOutcome::converged(h, herr))
}

/// Φ(z, s, a) = Σ_{n≥0} zⁿ (n+a)^{−s}, principal powers.
pub fn lerch_phi(p: LerchPoint) -> Result<EvalOutcome> {
    let LerchPoint { z, s, a } = p;
    match p.region("lerch_phi")? {
        Region::Origin => Ok(EvalOutcome::exact(cpow(a, -s)?)),
        Region::One => hurwitz_zeta(s, a),
        Region::Root { p, q } => {
            // Φ = q^{−s} Σ_r z^r ζ(s, (a+r)/q)
            let qf = q as f64;
            let mut acc = EvalOutcome::exact(re(0.0));
            for r in 0..q {
                let zr = cispi(2.0 * ((p * r) % q) as f64 / qf);
                acc = acc + hurwitz_zeta(s, (a + r as f64) / qf)?.scale(zr);
            }
            Ok(acc.scale(cpow(re(qf), -s)?))
        }
        Region::Disk | Region::Circle => weighted_sum(z, s, a, |_| 1.0),
    }
}

/// ∂ʲΦ/∂sʲ, j ∈ {1, 2}.
pub fn lerch_phi_sderiv(j: u32, p: LerchPoint) -> Result<EvalOutcome> {
    let region = p.region("lerch_phi_sderiv")?;
    if !(1..=2).contains(&j) {
        return Err(Error::domain("lerch_phi_sderiv", format!("order {j} not in {{1, 2}}")));
    }
    let LerchPoint { z, s, a } = p;
    if region == Region::One {
        return hurwitz_zeta_sderiv(j, s, a);
    }
    if region == Region::Origin {
        // a^{−s} (−log a)^j
        let v = cpow(a, -s)? * crate::numkernel::clog(a)?.powu(j) * if j == 1 { -1.0 } else { 1.0 };
        return Ok(EvalOutcome::exact(v));
    }
    let mut radius: f64 = 0.2;
    if region == Region::Circle {
        radius = radius.min(0.9 * s.re);
    }
    let opts = CauchyOptions { radius, nodes: 32, tol: 1e-10, shrink: 4 };
    cauchy_deriv_with(|w| lerch_phi(LerchPoint { z, s: w, a }), s, j, opts)
}

/// ∂ⁿΦ/∂zⁿ = Σ_{k≥0} (k+n)!/k! zᵏ (k+n+a)^{−s}, for |z| < 1.
pub fn lerch_phi_zderiv(n: u32, p: LerchPoint) -> Result<EvalOutcome> {
    let LerchPoint { z, s, a } = p;
    p.region("lerch_phi_zderiv")?;
    if z.norm() >= 1.0 {
        return Err(Error::domain("lerch_phi_zderiv", format!("|z| = {} is not < 1", z.norm())));
    }
    if n == 0 {
        return lerch_phi(p);
    }
    let falling = |k: usize| ((k + 1)..=(k + n as usize)).fold(1.0, |acc, i| acc * i as f64);
    let b = a + n as f64;
    if is_nonpositive_integer(b) {
        // the series still starts at a regular term only if no k+n+a vanishes
        return Err(Error::domain("lerch_phi_zderiv", "k + n + a hits a nonpositive integer"));
    }
    weighted_sum(z, s, b, falling)
}
