use std::f64::consts::{LN_2, PI, SQRT_2};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use phiver_core::gammakit::{digamma, gamma, inc_beta, loggamma, upper_gamma_scaled};
use phiver_core::lerchkit::{
    funeq515_sides, funeq_sides, jonquiere_sides, legendre_chi, lerch_phi, lerch_phi_sderiv, lerch_phi_zderiv,
    polylog_sderiv, ti_inverse_tangent_integral, LerchPoint,
};
use phiver_core::numkernel::{clog, cpow, cpow_real, neg_one_pow, sum_power_series, TARGET_TOL};
use phiver_core::quadkit::{integrate_01_pair, integrate_0inf, integrate_pv, QuadOptions};
use phiver_core::zetakit::{bernoulli_poly_exact, euler_number, hurwitz_zeta, stieltjes, CONSTANTS};
use phiver_core::{CValue, EvalOutcome, Result};

use super::domain::{ParamDomain, ParamSample, ParamSpec};
use super::{EvalCtx, Identity, Sides, Tag};

const I: CValue = CValue::new(0.0, 1.0);
const NAN: CValue = CValue::new(f64::NAN, f64::NAN);

fn c(re: f64, im: f64) -> CValue {
    CValue::new(re, im)
}

fn r(x: f64) -> CValue {
    CValue::new(x, 0.0)
}

/// e^{iπw}
fn m1(w: CValue) -> CValue {
    neg_one_pow(w)
}

/// log(1/x) from the pair (x, 1 − x), accurate at both ends.
fn ln_recip(x: f64, xc: f64) -> f64 {
    if x > 0.5 {
        -(-xc).ln_1p()
    } else {
        -x.ln()
    }
}

/// Principal w^k for w = log(1/x) > 0 or w = log(x) < 0.
fn real_pow(w: f64, k: CValue) -> CValue {
    if w > 0.0 {
        cpow_real(w, k)
    } else {
        cpow(r(w), k).unwrap_or(NAN)
    }
}

fn phi(z: CValue, s: CValue, a: CValue) -> Result<EvalOutcome> {
    lerch_phi(LerchPoint::new(z, s, a)?)
}

fn quad01<F: Fn(f64, f64) -> CValue>(ctx: &EvalCtx, f: F) -> EvalOutcome {
    integrate_01_pair(f, &ctx.quad).outcome()
}

fn exact(v: CValue) -> EvalOutcome {
    EvalOutcome::exact(v)
}

fn cot(z: CValue) -> CValue {
    z.cos() / z.sin()
}

fn rect(re: (f64, f64), im: (f64, f64)) -> ParamSpec {
    ParamSpec::Complex { re, im }
}

fn polar(r: (f64, f64), arg: (f64, f64)) -> ParamSpec {
    ParamSpec::Polar { r, arg }
}

/// Σ_{n≥0} zⁿ f(n) where f may fail; failures poison the sum.
fn series<F: Fn(usize) -> Result<CValue>>(z: CValue, f: F) -> EvalOutcome {
    sum_power_series(z, |n| f(n).unwrap_or(NAN), TARGET_TOL)
}

// ---- functional equations -------------------------------------------------

fn fe1(p: &ParamSample, _: &EvalCtx) -> Sides {
    funeq_sides(p.c("k"), p.c("t"), p.c("m"))
}

fn fe2(p: &ParamSample, _: &EvalCtx) -> Sides {
    funeq515_sides(p.c("x"), p.c("s"), p.c("a"))
}

fn jon(p: &ParamSample, _: &EvalCtx) -> Sides {
    jonquiere_sides(p.c("k"), p.c("m"))
}

// ---- integral families ----------------------------------------------------

/// ∫₀^∞ x^m log(ax)^k / (1 − bx) dx
///   = −e^{2iπm} b^{−1−m} (2iπ)^{1+k} Φ(e^{2iπm}, −k, −i(iπ + log a + log(−1/b))/2π)
fn t21(p: &ParamSample, ctx: &EvalCtx) -> Sides {
    let (k, a, b, m) = (p.c("k"), p.c("a"), p.c("b"), p.c("m"));
    let la = clog(a)?;
    let lhs = integrate_0inf(|x| cpow_real(x, m) * cpow(la + x.ln(), k).unwrap_or(NAN) / (r(1.0) - b * x), &ctx.quad)
        .outcome();
    let z = (2.0 * PI * I * m).exp();
    let shift = -I * (I * PI + la + clog(-b.inv())?) / (2.0 * PI);
    let pre = -m1(m) * (I * PI * m).exp() * cpow(b, -1.0 - m)? * cpow(2.0 * PI * I, 1.0 + k)?;
    Ok((lhs, phi(z, -k, shift)?.scale(pre)))
}

/// ∫₀¹ x^{m−1} log(ax)^k / (1 − e^{it}x) dx
///   = e^{iπk} Σ_n e^{int} a^{−m−n} (m+n)^{−1−k} Γ(1+k, −(m+n) log a)
fn t32(p: &ParamSample, ctx: &EvalCtx) -> Sides {
    let (k, a, m, t) = (p.c("k"), p.c("a"), p.c("m"), p.r("t"));
    let la = clog(a)?;
    let eit = c(t.cos(), t.sin());
    let lhs = quad01(ctx, |x, _| cpow_real(x, m - 1.0) * cpow(la + x.ln(), k).unwrap_or(NAN) / (r(1.0) - eit * x));
    let rhs = series(eit, |n| {
        let mn = m + n as f64;
        Ok(upper_gamma_scaled(1.0 + k, -mn * la)?.value * cpow(mn, -1.0 - k)?)
    });
    Ok((lhs, rhs.scale(m1(k))))
}

/// The incomplete-gamma arguments w(ν) = −(m+ν) log a, ν ≥ 0, must not cross
/// the cut of Γ(1+k, ·): the series picks one branch for every term.
fn gamma_args_off_cut(m: CValue, a: CValue) -> bool {
    let l = a.ln();
    // Im w(ν) vanishes at ν = −Im(m log a)/arg a
    let nu = -(m * l).im / l.im;
    nu < 0.0 || (-(m + nu) * l).re > 0.0
}

/// ∫₀¹ x^{m−1} log(ax)^k / (1 + x² + 2x cos γ) dx
///   = −Σ_j (−1)^j a^{−j−m} (−j−m)^{−1−k} Γ(1+k, −(j+m) log a) sin((j+1)γ)/sin γ
fn prud(p: &ParamSample, ctx: &EvalCtx) -> Sides {
    let (k, a, m, g) = (p.c("k"), p.c("a"), p.c("m"), p.r("g"));
    let la = clog(a)?;
    let cg = g.cos();
    let lhs =
        quad01(ctx, |x, _| cpow_real(x, m - 1.0) * cpow(la + x.ln(), k).unwrap_or(NAN) / (1.0 + x * x + 2.0 * x * cg));
    let h = |j: usize| -> Result<CValue> {
        let jm = m + j as f64;
        Ok(upper_gamma_scaled(1.0 + k, -jm * la)?.value * cpow(-jm, -1.0 - k)?)
    };
    // sin((j+1)γ) splits the sum into two power series in −e^{±iγ}.
    let e = c(g.cos(), g.sin());
    let up = series(-e, h).scale(e);
    let down = series(-e.conj(), h).scale(e.conj());
    let rhs = (up - down).scale(-(2.0 * I * g.sin()).inv());
    Ok((lhs, rhs))
}

/// ∫₀¹ x^{−1−m} log(1/x)^k / (1 − e^{−it}x) dx, closed through two Φ values.
fn e44a(p: &ParamSample, ctx: &EvalCtx) -> Sides {
    let (k, t, m) = (p.c("k"), p.r("t"), p.c("m"));
    let eit = c(t.cos(), t.sin());
    let lhs = quad01(ctx, |x, xc| cpow_real(x, -1.0 - m) * cpow_real(ln_recip(x, xc), k) / (r(1.0) - eit.conj() * x));
    let shift = (PI - I * clog(-eit.conj())?) / (2.0 * PI);
    let p1 = phi((2.0 * PI * I * m).exp(), -k, shift)?
        .scale(m1(m) * (I * PI * m).exp() * cpow(eit, -1.0 - m)? * cpow(2.0 * PI * I, 1.0 + k)?);
    let p2 = (gamma(1.0 + k)? * phi(eit, 1.0 + k, 1.0 + m)?).scale(m1(k));
    Ok((lhs, (-p1 - p2).scale(-eit)))
}

/// ∫₀¹ x^{−m} / (b − x)^{n+1} dx
///   = (−1)ⁿ/n! (−b^{−m−n} π (i + cot πm) (−m)(−m−1)…(−m−n+1) + ∂ⁿ_zΦ(b, 1, m))
fn zder(p: &ParamSample, ctx: &EvalCtx) -> Sides {
    let (b, m, n) = (p.c("b"), p.c("m"), p.int("n"));
    let lhs = quad01(ctx, |x, _| cpow_real(x, -m) / (b - x).powi(n as i32 + 1));
    let falling = (0..n).fold(r(1.0), |acc, j| acc * (-m - j as f64));
    let fact: f64 = (1..=n).map(|j| j as f64).product();
    let d = lerch_phi_zderiv(n as u32, LerchPoint::new(b, r(1.0), m)?)?;
    let pole = -cpow(b, -m - n as f64)? * PI * (I + cot(PI * m)) * falling;
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok((lhs, (d + exact(pole)).scale(r(sign / fact))))
}

/// ∫₀¹ log(1/x)^{s−1} / (√x (1 + xz²)) dx = Γ(s) 2^s Ti_s(z)/z
fn ti(p: &ParamSample, ctx: &EvalCtx) -> Sides {
    let (s, z) = (p.c("s"), p.c("z"));
    let z2 = z * z;
    let lhs = quad01(ctx, |x, xc| cpow_real(ln_recip(x, xc), s - 1.0) / (x.sqrt() * (1.0 + x * z2)));
    let rhs = (gamma(s)? * ti_inverse_tangent_integral(s, z)?).scale(cpow_real(2.0, s) / z);
    Ok((lhs, rhs))
}

/// ∫₀¹ log(1/x)^{s−1} / (√x (1 − xz²)) dx = Γ(s) 2^s χ_s(z)/z
fn chi(p: &ParamSample, ctx: &EvalCtx) -> Sides {
    let (s, z) = (p.c("s"), p.c("z"));
    let z2 = z * z;
    let lhs = quad01(ctx, |x, xc| cpow_real(ln_recip(x, xc), s - 1.0) / (x.sqrt() * (1.0 - x * z2)));
    let rhs = (gamma(s)? * legendre_chi(s, z)?).scale(cpow_real(2.0, s) / z);
    Ok((lhs, rhs))
}

/// Σ_n i(−1)ⁿ (e^{iX}Γ(0, iX) − e^{−iX}Γ(0, −iX)), X = (n+½)au
///   = ½(ψ(½ + (π+au)/4π) − ψ((π+au)/4π))
fn dig(p: &ParamSample, _: &EvalCtx) -> Sides {
    let au = p.c("a") * p.c("u");
    let lhs = series(r(-1.0), |n| {
        let x = I * au * (n as f64 + 0.5);
        Ok(I * (upper_gamma_scaled(r(0.0), x)?.value - upper_gamma_scaled(r(0.0), -x)?.value))
    });
    let w = (PI + au) / (4.0 * PI);
    let rhs = (digamma(w + 0.5)? - digamma(w)?).scale(r(0.5));
    Ok((lhs, rhs))
}

/// ∫₀¹ x^{m−1} log(x)^k / (1 + x^u) dx
///   = 2^k e^{iπk} u^{−1−k} Γ(1+k) (Φ(−i, 1+k, 2m/u) + Φ(i, 1+k, 2m/u))
fn f727(p: &ParamSample, ctx: &EvalCtx) -> Sides {
    let (k, m, u) = (p.c("k"), p.c("m"), p.c("u"));
    let lhs = quad01(ctx, |x, xc| {
        let lx = -ln_recip(x, xc);
        cpow_real(x, m - 1.0) * real_pow(lx, k) / (1.0 + (u * lx).exp())
    });
    let w = 2.0 * m / u;
    let pre = cpow_real(2.0, k) * m1(k) * cpow(u, -1.0 - k)?;
    let rhs = (gamma(1.0 + k)? * (phi(-I, 1.0 + k, w)? + phi(I, 1.0 + k, w)?)).scale(pre);
    Ok((lhs, rhs))
}

/// b^{2α}(B_{1/b}(1+α,0) − B_b(1−α,0)) + B_b(1+α,0) − B_{1/b}(1−α,0)
///   = iπ(b^{2α} − 1) − 2b^α/α + π(1 + b^{2α}) cot πα, |b| = 1
fn beta_fe(p: &ParamSample, _: &EvalCtx) -> Sides {
    let (al, f) = (p.c("alpha"), p.r("phi"));
    let b = c(f.cos(), f.sin());
    let bi = b.conj();
    let (one, zero) = (r(1.0), r(0.0));
    let b2a = cpow(b, 2.0 * al)?;
    let lhs = (inc_beta(bi, one + al, zero)? - inc_beta(b, one - al, zero)?).scale(b2a) + inc_beta(b, one + al, zero)?
        - inc_beta(bi, one - al, zero)?;
    let rhs = I * (b2a - 1.0) * PI - 2.0 * cpow(b, al)? / al + (1.0 + b2a) * PI * cot(PI * al);
    Ok((lhs, exact(rhs)))
}

// ---- constants ------------------------------------------------------------

fn cat(_: &ParamSample, ctx: &EvalCtx) -> Sides {
    let lhs = quad01(ctx, |x, xc| r(ln_recip(x, xc) / ((1.0 + x) * x.sqrt())));
    Ok((lhs, exact(r(4.0 * CONSTANTS.catalan))))
}

fn vardi(_: &ParamSample, ctx: &EvalCtx) -> Sides {
    let lhs = quad01(ctx, |x, xc| r(ln_recip(x, xc).ln() / (x.sqrt() * (1.0 + x))));
    // (π/2) log(8π³/Γ(¼)⁴)
    let lg = loggamma(r(0.25))?;
    let rhs = (lg.scale(r(-4.0)) + exact(r(3.0 * LN_2 + 3.0 * PI.ln()))).scale(r(PI / 2.0));
    Ok((lhs, rhs))
}

fn log2sq(_: &ParamSample, ctx: &EvalCtx) -> Sides {
    let lhs = quad01(ctx, |x, xc| r(ln_recip(x, xc).ln() / (1.0 + x)));
    Ok((lhs, exact(r(-0.5 * LN_2 * LN_2))))
}

/// γ₁(¼) − γ₁(¾) = 2π log(e^{−γ/2} Γ(¼) / (2√(2π) Γ(¾)))
fn sti14(_: &ParamSample, _: &EvalCtx) -> Sides {
    let lhs = stieltjes(1, r(0.25))? - stieltjes(1, r(0.75))?;
    let ratio = loggamma(r(0.25))? - loggamma(r(0.75))?;
    let rhs = (ratio + exact(r(-0.5 * CONSTANTS.euler_gamma - LN_2 - 0.5 * (2.0 * PI).ln()))).scale(r(2.0 * PI));
    Ok((lhs, rhs))
}

/// ∂_sΦ(1, 2, ½) = (π²/2) log(4·2^{1/3} e^γ π / A¹²)
fn phid_1_2_half(_: &ParamSample, _: &EvalCtx) -> Sides {
    let lhs = lerch_phi_sderiv(1, LerchPoint::new(r(1.0), r(2.0), r(0.5))?)?;
    let l = (4.0 * 2f64.powf(1.0 / 3.0) * PI).ln() + CONSTANTS.euler_gamma - 12.0 * CONSTANTS.glaisher.ln();
    Ok((lhs, exact(r(PI * PI / 2.0 * l))))
}

/// ∂_sLi_s(−1) at s = −2 equals −7ζ(3)/(4π²)
fn li_neg2(_: &ParamSample, _: &EvalCtx) -> Sides {
    let lhs = polylog_sderiv(r(-2.0), r(-1.0))?;
    let rhs = hurwitz_zeta(r(3.0), r(1.0))?.scale(r(-7.0 / (4.0 * PI * PI)));
    Ok((lhs, rhs))
}

/// ∂_sΦ(−1, 0, ½) = log(8Γ(5/4)²/π)
fn phid_neg1_0_half(_: &ParamSample, _: &EvalCtx) -> Sides {
    let lhs = lerch_phi_sderiv(1, LerchPoint::new(r(-1.0), r(0.0), r(0.5))?)?;
    let rhs = loggamma(r(1.25))?.scale(r(2.0)) + exact(r(8f64.ln() - PI.ln()));
    Ok((lhs, rhs))
}

/// ∫₀¹ (1−x) / (√x (1 + x² + 2x cos(π/q)) log(1/x)) dx for q ∈ {2, 3, 4, 6, 8}.
fn cot8(p: &ParamSample, ctx: &EvalCtx) -> Sides {
    let q = p.int("q");
    let cb = (PI / q as f64).cos();
    let lhs = quad01(ctx, |x, xc| r(xc / (x.sqrt() * (1.0 + x * x + 2.0 * x * cb) * ln_recip(x, xc))));
    let pi = PI;
    let lcot = |x: f64| (1.0 / x.tan()).ln();
    let ltan = |x: f64| x.tan().ln();
    let rhs = match q {
        2 => r(lcot(pi / 8.0)),
        3 => r(LN_2),
        4 => {
            (1.0 + I)
                * m1(r(5.0 / 8.0))
                * (1.0 + m1(r(0.25)))
                * ((pi / 8.0).cos() * lcot(3.0 * pi / 16.0) + ltan(pi / 16.0) * (pi / 8.0).sin())
        }
        6 => {
            let s3 = 3f64.sqrt();
            r(0.25 * (1.0 + s3) * (s3 * 49f64.acosh() + (577.0 - 408.0 * SQRT_2).ln()))
        }
        8 => {
            let e = |x: f64| m1(r(x));
            -2.0 * e(11.0 / 16.0) / (1.0 + e(1.0 / 8.0))
                * ((1.0 + I) + e(1.0 / 8.0) + e(3.0 / 8.0) + e(5.0 / 8.0) + I * SQRT_2)
                * ((3.0 * pi / 16.0).cos() * lcot(5.0 * pi / 32.0)
                    + (pi / 16.0).cos() * ltan(7.0 * pi / 32.0)
                    + lcot(pi / 32.0) * (pi / 16.0).sin()
                    + ltan(3.0 * pi / 32.0) * (3.0 * pi / 16.0).sin())
        }
        _ => unreachable!("grid holds q ∈ {{2, 3, 4, 6, 8}}"),
    };
    Ok((lhs, exact(rhs)))
}

fn cot8_tol(p: &ParamSample) -> f64 {
    if p.int("q") <= 3 {
        1e-8
    } else {
        1e-7
    }
}

/// 4^{n+1} B_{n+1}(¾) cos(πn/2) / (n+1), exactly.
fn be_lhs_exact(n: i64) -> BigRational {
    let b =
        bernoulli_poly_exact(n as usize + 1, &BigRational::new(3.into(), 4.into())).expect("order ≤ 13 is supported");
    let c = match n.rem_euclid(4) {
        0 => 1,
        2 => -1,
        _ => 0,
    };
    b * BigRational::from_integer(BigInt::from(4).pow(n as u32 + 1) * c) / BigRational::from_integer((n + 1).into())
}

fn be_rhs_exact(n: i64) -> BigRational {
    BigRational::from_integer(euler_number(n as usize).expect("order ≤ 12 is supported").abs())
}

fn be(p: &ParamSample, _: &EvalCtx) -> Sides {
    let n = p.int("n");
    let f = |q: BigRational| exact(r(q.to_f64().unwrap_or(f64::NAN)));
    Ok((f(be_lhs_exact(n)), f(be_rhs_exact(n))))
}

fn be_exact(p: &ParamSample) -> bool {
    let n = p.int("n");
    let (l, r) = (be_lhs_exact(n), be_rhs_exact(n));
    l == r && (n % 2 == 0 || l.is_zero())
}

/// Principal-value integral through the simple pole at x = ½ on the real segment.
fn pv(_: &ParamSample, ctx: &EvalCtx) -> Sides {
    let f = |x: f64| {
        let xc = 1.0 - x;
        r((x - 1.0) * ln_recip(x, xc).ln() / (x.sqrt() * (2.0 * x - 1.0)))
    };
    let opts = QuadOptions { pv_point: Some(0.5), ..ctx.quad };
    let lhs = integrate_pv(&f, 0.5, &opts)?.outcome();
    let (l2, s2) = (LN_2, SQRT_2);
    let w = I * l2 / (4.0 * PI);
    let root = (2.0 * (-2.0 * PI * PI - 2.0 * I * s2 * PI * l2 + l2 * l2)).sqrt();
    let inner = clog(-2.0 * I * s2 * PI + l2 + root)?;
    let lg = loggamma(-w)?.value;
    let lg2 = loggamma(-0.5 - w)?.value;
    let bracket = PI.ln() - 2.0 * (inner - (2.0 * l2).ln() - lg + lg2);
    let d = lerch_phi_sderiv(1, LerchPoint::new(r(0.5), r(1.0), r(-0.5))?)?;
    let g = CONSTANTS.euler_gamma;
    let head = 3.0 * s2 * PI * PI - 2.0 * PI * (4.0 * I + s2 * (PI + I * bracket))
        + 4.0 * (-g * (2.0 + s2 * 1f64.asinh()) + 16f64.ln());
    let rhs = (d.scale(r(4.0)) + exact(head)).scale(r(0.125));
    Ok((lhs, rhs))
}

// ---- table ----------------------------------------------------------------

fn build() -> Vec<Identity> {
    use Tag::*;
    let two_pi = 2.0 * PI;
    let base = |id, anchor, tags, tol, domain, sides| Identity {
        id,
        anchor,
        tags,
        tol,
        domain,
        sides,
        sample_tol: None,
        exact: None,
        skip: None,
    };
    let m_lower = rect((0.05, 0.95), (-0.6, -0.05));
    let k_small = rect((0.2, 1.5), (-0.3, 0.3));
    vec![
        base(
            "I-FE1",
            "derive the functional equation given by",
            &[FunctionalEq, Series],
            1e-8,
            ParamDomain::boxes(vec![
                ("k", rect((0.1, 2.0), (-0.5, 0.5))),
                ("t", ParamSpec::Real(0.1, two_pi - 0.1)),
                ("m", m_lower),
            ]),
            fe1,
        ),
        base(
            "I-FE2",
            "look at functional identity where",
            &[FunctionalEq, Series],
            1e-8,
            ParamDomain::boxes(vec![
                ("x", rect((-0.9, -0.1), (0.05, 0.5))),
                ("s", rect((0.5, 3.0), (-1.0, 1.0))),
                ("a", ParamSpec::Real(0.1, 0.9)),
            ]),
            fe2,
        ),
        base(
            "I-JON",
            "related to the Hurwitz zeta function",
            &[FunctionalEq, Series],
            1e-8,
            ParamDomain::boxes(vec![("k", ParamSpec::Real(0.5, 3.0)), ("m", m_lower)]),
            jon,
        ),
        base(
            "I-T21",
            "The first definite integral",
            &[Integral],
            1e-9,
            ParamDomain::boxes(vec![
                ("k", k_small),
                ("a", polar((0.5, 2.0), (0.2, 1.2))),
                ("b", polar((0.5, 2.0), (0.3, PI - 0.3))),
                ("m", rect((-0.8, -0.2), (0.05, 0.4))),
            ]),
            t21,
        ),
        base(
            "I-T32",
            "yields the desired conclusion",
            &[Integral, Series],
            1e-9,
            ParamDomain::boxes(vec![
                ("k", k_small),
                ("a", polar((0.5, 2.0), (0.15, 2.6))),
                ("m", rect((0.2, 1.5), (-0.3, 0.3))),
                ("t", ParamSpec::Real(0.3, two_pi - 0.3)),
            ])
            .with("−(m+ν)·log a avoids the negative real axis for ν ≥ 0", |p| {
                gamma_args_off_cut(p.c("m"), p.c("a"))
            }),
            t32,
        ),
        base(
            "I-E44A",
            "simply look at the case when",
            &[Integral],
            1e-9,
            ParamDomain::boxes(vec![
                ("k", k_small),
                ("t", ParamSpec::Real(0.2, PI - 0.2)),
                ("m", rect((-0.8, -0.2), (0.05, 0.5))),
            ]),
            e44a,
        ),
        base(
            "I-ZDER",
            "n-th derivative with respect to the parameter",
            &[Integral, Series],
            1e-9,
            ParamDomain::boxes(vec![
                ("b", rect((-0.8, -0.05), (0.05, 0.8))),
                ("m", rect((0.1, 0.9), (-0.3, 0.3))),
                ("n", ParamSpec::Int(1, 3)),
            ])
            .with("|b| < 0.9", |p| p.c("b").norm() < 0.9),
            zder,
        ),
        base("I-STI14", "set m=1/2, t=π", &[Constant, Series], 1e-6, ParamDomain::Constant, sti14),
        base("I-PHID-1-2-HALF", "set m=1/2, k=1, t=0", &[Constant, Series], 1e-9, ParamDomain::Constant, phid_1_2_half),
        base("I-LI-NEG2", "take the limit as k→2", &[Constant, Series], 1e-9, ParamDomain::Constant, li_neg2),
        base(
            "I-PHID-NEG1-0-HALF",
            "set m=1/2, k=0, t=π",
            &[Constant, Series],
            1e-9,
            ParamDomain::Constant,
            phid_neg1_0_half,
        ),
        base("I-CAT", "set a=1, b=-1, k=2, m=1/2", &[Integral, Constant], 1e-9, ParamDomain::Constant, cat),
        base("I-VARDI", "set a=1, b=-1, k=1, m=1/2", &[Integral, Constant], 1e-9, ParamDomain::Constant, vardi),
        base("I-LOG2SQ", "set a=1, b=-1, k=1, m=1", &[Integral, Constant], 1e-9, ParamDomain::Constant, log2sq),
        base(
            "I-TI",
            "integral representation for the inverse tangent integral",
            &[Integral, Series],
            1e-9,
            ParamDomain::boxes(vec![("s", rect((0.5, 3.0), (-1.0, 1.0))), ("z", polar((0.1, 0.95), (-PI, PI)))]),
            ti,
        ),
        base(
            "I-CHI",
            "integral representation for the Legendre chi function",
            &[Integral, Series],
            1e-9,
            ParamDomain::boxes(vec![("s", rect((0.5, 3.0), (-1.0, 1.0))), ("z", polar((0.1, 0.95), (-PI, PI)))]),
            chi,
        ),
        base(
            "I-DIG",
            "Derivation of the digamma function",
            &[Series],
            1e-9,
            ParamDomain::boxes(vec![("a", polar((0.3, 2.0), (-0.5, 0.5))), ("u", polar((0.3, 2.0), (-0.5, 0.5)))]),
            dig,
        ),
        base(
            "I-PRUD",
            "For all Re(m)>0, |γ|<π",
            &[Integral, Series],
            1e-9,
            ParamDomain::boxes(vec![
                ("k", k_small),
                ("a", polar((0.5, 2.0), (0.15, 2.6))),
                ("m", rect((0.2, 1.5), (0.01, 0.3))),
                ("g", ParamSpec::Real(-2.8, 2.8)),
            ])
            .with("|γ| > 0.2", |p| p.r("g").abs() > 0.2),
            prud,
        ),
        base(
            "I-727",
            "Generalized form for equations (2.6.4.3-4)",
            &[Integral],
            1e-9,
            ParamDomain::boxes(vec![
                ("k", rect((0.0, 1.5), (-0.5, 0.5))),
                ("m", rect((0.3, 1.5), (-0.3, 0.3))),
                ("u", rect((0.8, 2.5), (-0.3, 0.3))),
            ])
            .with("Re(2m/u) > 0", |p| (2.0 * p.c("m") / p.c("u")).re > 0.0),
            f727,
        ),
        Identity {
            exact: Some(be_exact),
            ..base(
                "I-BE",
                "functional equation in terms of Bernoulli and Euler numbers",
                &[FunctionalEq, Constant],
                0.0,
                ParamDomain::Grid { name: "n", values: &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12] },
                be,
            )
        },
        base(
            "I-BETA-FE",
            "involving the incomplete Beta function",
            &[FunctionalEq, Series],
            1e-8,
            ParamDomain::boxes(vec![("phi", ParamSpec::Real(-1.45, -0.1)), ("alpha", rect((0.1, 0.9), (-0.3, 0.3)))]),
            beta_fe,
        ),
        Identity {
            sample_tol: Some(cot8_tol),
            ..base(
                "I-COT8-FAMILY",
                "b=π/2, π/3, π/4, π/6, π/8 respectively",
                &[Integral, Constant],
                1e-8,
                ParamDomain::Grid { name: "q", values: &[2, 3, 4, 6, 8] },
                cot8,
            )
        },
        Identity {
            skip: Some(
                "complex-path reading unresolved; the real-segment principal value is only attempted on request",
            ),
            ..base(
                "I-PV",
                "Note the Cauchy principal value of the integral",
                &[Integral, Constant],
                1e-9,
                ParamDomain::Constant,
                pv,
            )
        },
    ]
}

static CATALOG: OnceLock<Vec<Identity>> = OnceLock::new();

/// Every registered identity, in registration order.
pub fn catalog() -> &'static [Identity] {
    CATALOG.get_or_init(build)
}

pub fn find(id: &str) -> Option<&'static Identity> {
    catalog().iter().find(|i| i.id == id)
}
