use alloc::format;

use crate::gammakit::gamma;
use crate::numkernel::sinpi;
use crate::numkernel::{
    c, cauchy_deriv_with, cpow, is_nonpositive_integer, re, CValue, CauchyOptions, EvalOutcome, Flags, NeumaierSum,
    BERNOULLI_EVEN, EPS,
};
use crate::{Error, Result};

const EM_ORDER: usize = 12;

fn check(func: &'static str, s: CValue, a: CValue) -> Result<()> {
    if s == re(1.0) {
        return Err(Error::domain(func, "pole at s = 1"));
    }
    if is_nonpositive_integer(a) {
        return Err(Error::domain(func, format!("a = {} is a nonpositive integer", a.re)));
    }
    Ok(())
}

/// ζ(s, a) with `n` explicit terms; returns (value, tail bound, Σ|terms|).
fn euler_maclaurin(s: CValue, a: CValue, n: usize) -> Result<(CValue, f64, f64)> {
    let mut acc = NeumaierSum::new();
    for k in 0..n {
        acc.add(cpow(a + k as f64, -s)?);
    }
    let w = a + n as f64;
    let wms = cpow(w, -s)?;
    acc.add(w * wms / (s - 1.0));
    acc.add(wms * 0.5);
    // B_{2j}/(2j)! · (s)_{2j−1} · w^{−s−2j+1}
    let winv = w.inv();
    let winv2 = winv * winv;
    let mut poch = s; // (s)_{2j−1}
    let mut fact = 2.0; // (2j)!
    let mut wp = wms * winv; // w^{−s−2j+1}
    let mut last = 0.0;
    for j in 1..=EM_ORDER + 1 {
        let t = poch * wp * (BERNOULLI_EVEN[j - 1] / fact);
        if j <= EM_ORDER {
            acc.add(t);
        } else {
            last = t.norm();
        }
        let jf = j as f64;
        poch = poch * (s + 2.0 * jf - 1.0) * (s + 2.0 * jf);
        fact *= (2.0 * jf + 1.0) * (2.0 * jf + 2.0);
        wp *= winv2;
    }
    Ok((acc.value(), last, acc.abs_sum()))
}

/// Hurwitz zeta ζ(s, a) = Σ_{n≥0} (n+a)^{−s} (principal powers), continued
/// to all s ≠ 1 by Euler–Maclaurin summation.
pub fn hurwitz_zeta(s: CValue, a: CValue) -> Result<EvalOutcome> {
    check("hurwitz_zeta", s, a)?;
    if a == re(1.0) && s.re < -0.5 {
        return riemann_reflected(s);
    }
    let base = (libm::ceil(s.norm()) as usize + 10).max(15);
    let shift = libm::ceil((-a.re).max(0.0)) as usize;
    let mut n = base + shift;
    loop {
        let (v, tail, abs) = euler_maclaurin(s, a, n)?;
        let round = 4.0 * EPS * abs;
        let err = tail + round;
        let ok = tail <= 1e-15 * v.norm().max(1e-300) || tail <= round;
        if ok || n > 20_000 {
            let mut flags = if ok { Flags::CONVERGED } else { Flags::MAX_TERMS };
            if abs > 1e6 * v.norm() {
                flags |= Flags::CANCELLATION;
            }
            return Ok(EvalOutcome::new(v, err, flags));
        }
        n *= 2;
    }
}

/// ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s): avoids the cancellation
/// Euler–Maclaurin suffers for Re(s) < 0.
fn riemann_reflected(s: CValue) -> Result<EvalOutcome> {
    let one = re(1.0);
    let z = hurwitz_zeta(one - s, one)?;
    let g = gamma(one - s)?;
    let k = cpow(re(2.0), s)? * cpow(re(core::f64::consts::PI), s - 1.0)? * sinpi(s * 0.5);
    Ok((g * z).scale(k))
}

/// j-th s-derivative of ζ(s, a), j ∈ {1, 2}, by contour differentiation.
pub fn hurwitz_zeta_sderiv(j: u32, s: CValue, a: CValue) -> Result<EvalOutcome> {
    check("hurwitz_zeta_sderiv", s, a)?;
    if !(1..=2).contains(&j) {
        return Err(Error::domain("hurwitz_zeta_sderiv", format!("order {j} not in {{1, 2}}")));
    }
    let radius = 0.25f64.min(0.5 * (s - 1.0).norm());
    let opts = CauchyOptions { radius, nodes: 32, tol: 1e-10, shrink: 4 };
    cauchy_deriv_with(|w| hurwitz_zeta(w, a), s, j, opts)
}

/// Generalised Stieltjes constant γ_n(a), n ∈ {0, 1, 2}:
/// ζ(s, a) = 1/(s−1) + Σ (−1)^n γ_n(a) (s−1)^n / n!.
pub fn stieltjes(n: u32, a: CValue) -> Result<EvalOutcome> {
    if n > 2 {
        return Err(Error::Unsupported { func: "stieltjes", n: n as u64, max: 2 });
    }
    if is_nonpositive_integer(a) {
        return Err(Error::domain("stieltjes", format!("a = {} is a nonpositive integer", a.re)));
    }
    const R: f64 = 0.5;
    const NODES: usize = 64;
    let n2 = 2 * NODES;
    let mut coarse = NeumaierSum::new();
    let mut fine = NeumaierSum::new();
    let mut errmax = 0.0f64;
    let mut flags = Flags::CONVERGED;
    for k in 0..n2 {
        let th = 2.0 * core::f64::consts::PI * k as f64 / n2 as f64;
        let (sn, cs) = libm::sincos(th);
        let u = c(cs, sn) * R;
        let z = hurwitz_zeta(u + 1.0, a)?;
        if !z.is_converged() {
            flags.remove(Flags::CONVERGED);
        }
        errmax = errmax.max(z.abs_err_est);
        let g = z.value - u.inv();
        // (s−1)^{−n} on the circle, times the trapezoid weight
        let (sj, cj) = libm::sincos(-(n as f64) * th);
        let t = g * c(cj, sj);
        fine.add(t);
        if k % 2 == 0 {
            coarse.add(t);
        }
    }
    let scale = 1.0 / libm::pow(R, n as f64);
    let cn_f = fine.value() * (scale / n2 as f64);
    let cn_c = coarse.value() * (scale / NODES as f64);
    // γ_n = (−1)^n n! c_n
    let sign_fact = if n.is_multiple_of(2) { 1.0 } else { -1.0 } * (1..=n).fold(1.0, |p, k| p * k as f64);
    let v = cn_f * sign_fact;
    let err = ((cn_f - cn_c).norm() + scale * (errmax + 4.0 * EPS * fine.abs_sum() / n2 as f64)) * sign_fact.abs();
    if err > 1e-10 * v.norm().max(1.0) {
        flags.remove(Flags::CONVERGED);
    }
    Ok(EvalOutcome::new(v, err, flags))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gammakit::{digamma, loggamma};
    use core::f64::consts::PI;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    fn near(a: CValue, b: CValue, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm().max(1e-300)
    }

    #[test]
    fn zeta_examples() {
        let v = hurwitz_zeta(re(2.0), re(1.0)).unwrap();
        assert!(v.is_converged());
        assert!(near(v.value, re(PI * PI / 6.0), 1e-15));
        assert!(near(hurwitz_zeta(re(0.0), re(0.25)).unwrap().value, re(0.25), 1e-14));
        assert!(near(hurwitz_zeta(re(-1.0), re(1.0)).unwrap().value, re(-1.0 / 12.0), 1e-13));
        assert!(hurwitz_zeta(re(1.0), re(0.5)).is_err());
        assert!(hurwitz_zeta(re(2.0), re(-3.0)).is_err());
    }

    #[test]
    fn zeta_complex_oracle() {
        // mpmath: ζ(0.5+14i, 0.3−0.2i), ζ(2.5−1i, −1.7+0.4i)
        let v = hurwitz_zeta(c(0.5, 14.0), c(0.3, -0.2)).unwrap().value;
        assert!(near(v, c(-0.082_036_893_299_883_44, 0.287_316_561_799_429_0), 1e-12), "{v}");
        let v = hurwitz_zeta(c(2.5, -1.0), c(-1.7, 0.4)).unwrap().value;
        assert!(near(v, c(-1.679_850_715_476_614_1, -0.360_263_461_186_596_9), 1e-12), "{v}");
    }

    #[test]
    fn sderiv_examples() {
        let d = hurwitz_zeta_sderiv(1, re(0.0), re(1.0)).unwrap();
        assert!(d.is_converged(), "{d:?}");
        assert!(near(d.value, re(-0.5 * (2.0 * PI).ln()), 1e-13));
        let d = hurwitz_zeta_sderiv(1, re(-1.0), re(1.0)).unwrap();
        assert!(near(d.value, re(-0.165_421_143_700_450_93), 1e-12), "{d:?}");
        let d = hurwitz_zeta_sderiv(2, re(0.0), re(1.0)).unwrap();
        assert!(near(d.value, re(-2.006_356_455_908_584_9), 1e-11), "{d:?}");
        let d = hurwitz_zeta_sderiv(1, re(2.0), re(1.0)).unwrap();
        assert!(near(d.value, re(-0.937_548_254_315_843_8), 1e-12), "{d:?}");
    }

    #[test]
    fn sderiv_at_zero_is_loggamma() {
        for a in [c(0.25, 0.0), c(0.7, 0.3), c(2.5, -1.0)] {
            let d = hurwitz_zeta_sderiv(1, re(0.0), a).unwrap().value;
            let want = loggamma(a).unwrap().value - 0.5 * (2.0 * PI).ln();
            assert!((d - want).norm() < 1e-9, "{a}: {d} vs {want}");
        }
    }

    #[test]
    fn termwise_derivative_oracle() {
        // −Σ log(n+a)(n+a)^{−s} with an integral tail, at s = 3, a = 0.5
        let (s, a) = (3.0f64, 0.5f64);
        let n = 200_000;
        let mut acc = 0.0;
        for k in (0..n).rev() {
            let x = k as f64 + a;
            acc -= x.ln() * x.powf(-s);
        }
        // tail ∫_N^∞ −log x · x^{−s} dx + half-endpoint correction
        let x = n as f64 + a;
        let tail = -(x.powf(1.0 - s) * ((s - 1.0) * x.ln() + 1.0) / ((s - 1.0) * (s - 1.0)));
        let want = acc + tail + 0.5 * x.ln() * x.powf(-s);
        let d = hurwitz_zeta_sderiv(1, re(s), re(a)).unwrap().value;
        assert!((d.re - want).abs() < 1e-11, "{d} {want}");
    }

    #[test]
    fn stieltjes_examples() {
        let g = stieltjes(0, re(1.0)).unwrap();
        assert!(g.is_converged());
        assert!((g.value.re - EULER_GAMMA).abs() < 1e-13, "{g:?}");
        let g = stieltjes(0, re(0.5)).unwrap().value;
        let want = -digamma(re(0.5)).unwrap().value;
        assert!(near(g, want, 1e-13));
        let g = stieltjes(1, re(1.0)).unwrap().value;
        assert!((g.re + 0.072_815_845_483_676_72).abs() < 1e-13, "{g}");
        // mpmath: γ_1(1/4), γ_1(3/4), γ_2(1)
        assert!((stieltjes(1, re(0.25)).unwrap().value.re + 5.518_076_350_199_404).abs() < 1e-12);
        assert!((stieltjes(1, re(0.75)).unwrap().value.re + 0.391_298_902_404_549_8).abs() < 1e-12);
        assert!((stieltjes(2, re(1.0)).unwrap().value.re + 0.009_690_363_192_872_318).abs() < 1e-12);
        assert!(stieltjes(3, re(1.0)).is_err());
    }
}
