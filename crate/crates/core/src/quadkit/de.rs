use core::f64::consts::FRAC_PI_2;

use super::{integrate_pv, QuadOptions, QuadResult};
use crate::numkernel::{CValue, NeumaierSum, EPS};

const H0: f64 = 0.5;
/// exp(−π sinh t) stays a normal binary64 up to here.
const T_MAX: f64 = 6.0;
const MIN_LEVEL: u32 = 3;
const NEGLIGIBLE: f64 = 1e-20;

/// Trapezoid sums of `g(t)` over t = kh with halving h; `g` returns None
/// where the mapped abscissa is unusable (rounds to an endpoint).
fn de_levels<G: Fn(f64) -> Option<CValue>>(g: G, opts: &QuadOptions) -> QuadResult {
    let mut sum = NeumaierSum::new();
    let mut evals = 0usize;
    let mut peak = 0.0f64;
    let mut h = H0;
    let mut prev: Option<CValue> = None;
    let mut level = 0u32;
    loop {
        // level 0 takes every multiple of h, later levels the odd ones
        let (first, stride) = if level == 0 { (0usize, 1usize) } else { (1, 2) };
        let mut edge = 0.0f64;
        let mut blowup = false;
        if level == 0 {
            if let Some(v) = g(0.0) {
                evals += 1;
                peak = peak.max(v.norm());
                sum.add(v);
            }
        }
        for dir in [1.0, -1.0] {
            let mut k = if first == 0 { 1 } else { first };
            let mut last = 0.0;
            loop {
                let t = dir * k as f64 * h;
                if t.abs() > T_MAX {
                    break;
                }
                let Some(v) = g(t) else { break };
                evals += 1;
                if !(v.re.is_finite() && v.im.is_finite()) {
                    blowup = true;
                    break;
                }
                let m = v.norm();
                sum.add(v);
                peak = peak.max(m);
                last = m;
                if t.abs() > 1.0 && m <= NEGLIGIBLE * peak {
                    break;
                }
                k += stride;
            }
            edge = edge.max(last);
        }
        let est = sum.value() * h;
        let scale = est.norm().max(1.0);
        let trunc = if blowup { f64::INFINITY } else { edge * h };
        let round = 8.0 * EPS * sum.abs_sum() * h;
        if let Some(p) = prev {
            let diff = (est - p).norm();
            let err = diff + trunc + round;
            let done = level >= MIN_LEVEL && diff <= opts.tol * scale && trunc <= opts.tol * scale;
            if done || level >= opts.max_level || blowup {
                return QuadResult { value: est, abs_err_est: err, evaluations: evals, converged: done };
            }
        }
        prev = Some(est);
        level += 1;
        h *= 0.5;
    }
}

/// Tanh-sinh node: x = 1/(1+e^{−2u}), 1−x = 1/(1+e^{2u}), u = π/2 · sinh t.
fn tanh_sinh_node(t: f64) -> Option<(f64, f64, f64)> {
    let u = FRAC_PI_2 * libm::sinh(t);
    let (x, xc) = (1.0 / (1.0 + libm::exp(-2.0 * u)), 1.0 / (1.0 + libm::exp(2.0 * u)));
    if x <= 0.0 || xc <= 0.0 {
        return None;
    }
    Some((x, xc, 2.0 * FRAC_PI_2 * libm::cosh(t) * x * xc))
}

/// ∫₀¹ f(x, 1−x) dx by tanh-sinh; the second argument is the complement
/// 1−x computed without cancellation, for integrands singular at x = 1.
pub fn integrate_01_pair<F: Fn(f64, f64) -> CValue>(f: F, opts: &QuadOptions) -> QuadResult {
    de_levels(|t| tanh_sinh_node(t).map(|(x, xc, w)| f(x, xc) * w), opts)
}

/// Like `integrate_01_pair`, but `f` may decline a node (None), which ends
/// that tail just as an abscissa rounding onto an endpoint does.
pub(super) fn integrate_01_partial<F: Fn(f64, f64) -> Option<CValue>>(f: F, opts: &QuadOptions) -> QuadResult {
    de_levels(|t| tanh_sinh_node(t).and_then(|(x, xc, w)| f(x, xc).map(|v| v * w)), opts)
}

/// ∫₀¹ f(x) dx by tanh-sinh; never samples x ∈ {0, 1}. Dispatches to the
/// principal-value rule when `opts.pv_point` is set.
pub fn integrate_01<F: Fn(f64) -> CValue>(f: F, opts: &QuadOptions) -> QuadResult {
    if let Some(c) = opts.pv_point {
        let inner = QuadOptions { pv_point: None, ..*opts };
        return integrate_pv(&f, c, &inner).unwrap_or(QuadResult {
            value: CValue::new(f64::NAN, f64::NAN),
            abs_err_est: f64::INFINITY,
            evaluations: 0,
            converged: false,
        });
    }
    de_levels(
        |t| match tanh_sinh_node(t) {
            Some((x, _, w)) if x < 1.0 => Some(f(x) * w),
            _ => None,
        },
        opts,
    )
}

/// ∫₀^∞ f(x) dx by exp-sinh, x = exp(π/2 · sinh t).
pub fn integrate_0inf<F: Fn(f64) -> CValue>(f: F, opts: &QuadOptions) -> QuadResult {
    de_levels(
        |t| {
            let x = libm::exp(FRAC_PI_2 * libm::sinh(t));
            if x <= 0.0 || !x.is_finite() {
                return None;
            }
            let w = x * FRAC_PI_2 * libm::cosh(t);
            Some(f(x) * w)
        },
        opts,
    )
}
