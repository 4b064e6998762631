use alloc::vec::Vec;

use super::{CValue, EvalOutcome, Flags, NeumaierSum, EPS};

/// Summation strategy for [`sum_series`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Accel {
    /// Plain compensated partial sums with a ratio-based tail estimate.
    Direct,
    /// Repeated averaging of partial sums (van Wijngaarden); for alternating
    /// series.
    EulerTransform,
    /// Levin's u-transform; for logarithmic and unit-circle series.
    LevinU,
}

/// An infinite series Σ_{n≥0} term_at(n).
pub struct SeriesSpec<F> {
    pub term_at: F,
    pub accel: Accel,
    pub tol: f64,
    pub max_terms: usize,
}

impl<F: Fn(usize) -> CValue> SeriesSpec<F> {
    pub fn new(term_at: F, accel: Accel) -> Self {
        SeriesSpec { term_at, accel, tol: 1e-14, max_terms: 100_000 }
    }

    pub fn tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn max_terms(mut self, n: usize) -> Self {
        self.max_terms = n;
        self
    }
}

/// Sum a series with the requested accelerator.
///
/// Running out of terms is not an error: the best estimate is returned
/// without the CONVERGED flag and with MAX_TERMS set.
pub fn sum_series<F: Fn(usize) -> CValue>(spec: &SeriesSpec<F>) -> EvalOutcome {
    debug_assert!(spec.tol > 0.0);
    match spec.accel {
        Accel::Direct => direct(spec),
        Accel::EulerTransform => euler(spec),
        Accel::LevinU => levin_u(spec),
    }
}

fn finite(z: CValue) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

fn nonfinite() -> EvalOutcome {
    EvalOutcome::new(CValue::new(f64::NAN, f64::NAN), f64::INFINITY, Flags::empty())
}

fn direct<F: Fn(usize) -> CValue>(spec: &SeriesSpec<F>) -> EvalOutcome {
    sum_iter((0..spec.max_terms).map(&spec.term_at), spec.tol)
}

/// Direct compensated summation of an iterator of terms; the iterator's
/// length is the term budget. Useful when terms come from a recurrence.
pub fn sum_iter<I: Iterator<Item = CValue>>(terms: I, tol: f64) -> EvalOutcome {
    const W: usize = 4;
    let mut acc = NeumaierSum::new();
    let mut mags: Vec<f64> = Vec::new();
    let mut hits = 0;
    let mut tail = f64::INFINITY;
    let mut n = 0;
    for t in terms {
        if !finite(t) {
            return nonfinite();
        }
        acc.add(t);
        mags.push(t.norm());
        n += 1;
        if n < 2 * W {
            continue;
        }
        let now = mags[n - W..n].iter().cloned().fold(0.0, f64::max);
        let before = mags[n - 2 * W..n - W].iter().cloned().fold(0.0, f64::max);
        let s = acc.value().norm();
        tail = if now == 0.0 {
            0.0
        } else if before > now {
            let r = libm::pow(now / before, 1.0 / W as f64);
            now * r / (1.0 - r)
        } else {
            f64::INFINITY
        };
        if tail <= tol * s.max(1.0) {
            hits += 1;
            if hits >= 2 {
                return finish(acc, tail, n, true);
            }
        } else {
            hits = 0;
        }
    }
    finish(acc, tail, n, false)
}

fn finish(acc: NeumaierSum, tail: f64, n: usize, ok: bool) -> EvalOutcome {
    let v = acc.value();
    let round = 4.0 * EPS * acc.abs_sum() + (n as f64) * EPS * EPS * acc.abs_sum();
    let mut flags = if ok { Flags::CONVERGED } else { Flags::MAX_TERMS };
    if acc.abs_sum() > 1e6 * v.norm() {
        flags |= Flags::CANCELLATION;
    }
    let err = if tail.is_finite() { tail + round } else { f64::INFINITY };
    EvalOutcome::new(v, err, flags)
}

/// van Wijngaarden's estimate from partial sums `s`: average ⌊2(N−1)/3⌋ times.
fn averaged(s: &[CValue]) -> CValue {
    let n = s.len();
    let k = 2 * (n - 1) / 3;
    let mut row: Vec<CValue> = s[n - 1 - k..].to_vec();
    for _ in 0..k {
        for j in 0..row.len() - 1 {
            row[j] = (row[j] + row[j + 1]) * 0.5;
        }
        row.pop();
    }
    row[0]
}

fn euler<F: Fn(usize) -> CValue>(spec: &SeriesSpec<F>) -> EvalOutcome {
    let mut partial: Vec<CValue> = Vec::new();
    let mut acc = NeumaierSum::new();
    let mut n = 16usize.min(spec.max_terms.max(2));
    let mut prev: Option<CValue> = None;
    let mut best = EvalOutcome::new(CValue::new(0.0, 0.0), f64::INFINITY, Flags::MAX_TERMS);
    loop {
        while partial.len() < n {
            let t = (spec.term_at)(partial.len());
            if !finite(t) {
                return nonfinite();
            }
            acc.add(t);
            partial.push(acc.value());
        }
        let est = averaged(&partial);
        let scale = partial.iter().fold(0.0f64, |m, s| m.max(s.norm()));
        if let Some(p) = prev {
            let err = (est - p).norm() + 8.0 * EPS * scale;
            if err < best.abs_err_est {
                best = EvalOutcome::new(est, err, Flags::MAX_TERMS);
            }
            if err <= spec.tol * est.norm().max(1.0) {
                return EvalOutcome::converged(est, err);
            }
        }
        prev = Some(est);
        if n >= spec.max_terms || n >= 4096 {
            return best;
        }
        n = (2 * n).min(spec.max_terms).min(4096);
    }
}

/// Levin u-transform, in the scaled recursive form of Fessler–Ford–Smith.
fn levin_u<F: Fn(usize) -> CValue>(spec: &SeriesSpec<F>) -> EvalOutcome {
    const BETA: f64 = 1.0;
    let cap = spec.max_terms.min(400);
    let mut numer: Vec<CValue> = Vec::with_capacity(cap);
    let mut denom: Vec<CValue> = Vec::with_capacity(cap);
    let mut acc = NeumaierSum::new();
    let mut last = CValue::new(0.0, 0.0);
    let mut last_diff = f64::INFINITY;
    let mut hits = 0;
    let mut best = EvalOutcome::new(CValue::new(0.0, 0.0), f64::INFINITY, Flags::MAX_TERMS);
    let mut last_omega = CValue::new(1.0, 0.0);
    for n in 0..cap {
        let t = (spec.term_at)(n);
        if !finite(t) {
            return nonfinite();
        }
        acc.add(t);
        let sum = acc.value();
        // An exactly vanishing term would make the remainder estimate zero.
        let omega = if t.re == 0.0 && t.im == 0.0 { last_omega } else { t * (BETA + n as f64) };
        last_omega = omega;
        let nf = n as f64;
        let mut term = 1.0 / (BETA + nf);
        denom.push(omega.inv() * term);
        numer.push(sum * denom[n]);
        if n > 0 {
            let ratio = (BETA + nf - 1.0) * term;
            for j in 1..=n {
                let fact = (nf - j as f64 + BETA) * term;
                numer[n - j] = numer[n - j + 1] - numer[n - j] * fact;
                denom[n - j] = denom[n - j + 1] - denom[n - j] * fact;
                term *= ratio;
            }
        }
        let val = if denom[0].norm() < 1e-300 { last } else { numer[0] / denom[0] };
        if !finite(val) {
            break;
        }
        let diff = (val - last).norm();
        last = val;
        if n < 2 {
            continue;
        }
        // Conservative: the larger of the last two corrections.
        let err = diff.max(last_diff) + 8.0 * EPS * (val.norm() + sum.norm());
        last_diff = diff;
        if err < best.abs_err_est {
            best = EvalOutcome::new(val, err, Flags::MAX_TERMS);
        }
        if diff <= spec.tol * val.norm().max(1.0) {
            hits += 1;
            if hits >= 2 {
                return EvalOutcome::converged(val, err);
            }
        } else {
            hits = 0;
        }
    }
    if best.abs_err_est <= spec.tol * best.value.norm().max(1.0) {
        best.flags = Flags::CONVERGED;
    }
    best
}

/// Group `block` consecutive terms into one.
///
/// For Σ zⁿbₙ with z = e^{iθ} near 1, blocks of size ≈ π/θ turn the slowly
/// rotating series into a nearly alternating one, which keeps Levin-u well
/// conditioned.
pub fn condensed<F: Fn(usize) -> CValue>(f: F, block: usize) -> impl Fn(usize) -> CValue {
    let block = block.max(1);
    move |j| {
        let mut s = NeumaierSum::new();
        for p in 0..block {
            s.add(f(j * block + p));
        }
        s.value()
    }
}

/// Block size that rotates a ratio of argument `theta` close to −1.
pub fn block_for_angle(theta: f64) -> usize {
    let t = theta.abs();
    if t >= core::f64::consts::FRAC_PI_2 {
        1
    } else {
        libm::round(core::f64::consts::PI / t) as usize
    }
}

/// Σ_{n≥0} zⁿ f(n) for |z| ≤ 1 (z ≠ 1), with f smooth and slowly varying.
///
/// Direct summation inside |z| ≤ 0.9 or when z hugs the positive axis;
/// condensed Levin-u otherwise (this covers the unit circle).
pub fn sum_power_series<F: Fn(usize) -> CValue>(z: CValue, f: F, tol: f64) -> EvalOutcome {
    let r = z.norm();
    let th = libm::atan2(z.im, z.re);
    let term = |n: usize| if n == 0 { f(0) } else { z.powu(n as u32) * f(n) };
    if r <= 0.9 || (th.abs() < 1e-3 && r < 1.0) {
        let budget = if r <= 0.9 { 20_000 } else { 2_000_000 };
        return sum_series(&SeriesSpec::new(term, Accel::Direct).tol(tol).max_terms(budget));
    }
    let block = block_for_angle(th);
    let g = condensed(term, block);
    sum_series(&SeriesSpec::new(g, Accel::LevinU).tol(tol).max_terms(400))
}
