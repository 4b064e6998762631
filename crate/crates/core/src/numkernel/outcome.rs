use core::ops::{Add, Mul, Neg, Sub};

use super::{CValue, EPS};

bitflags::bitflags! {
    /// Status attached to every [`EvalOutcome`].
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
    pub struct Flags: u8 {
        /// The algorithm met its requested tolerance.
        const CONVERGED = 1;
        /// The term/level budget ran out first.
        const MAX_TERMS = 1 << 1;
        /// The point sits on a boundary of the supported domain.
        const DOMAIN_EDGE = 1 << 2;
        /// Heavy cancellation; the error estimate is roundoff dominated.
        const CANCELLATION = 1 << 3;
    }
}

impl Flags {
    /// Flag names, in declaration order.
    pub fn names(self) -> impl Iterator<Item = &'static str> {
        self.iter_names().map(|(n, _)| n)
    }
}

/// A value with an absolute error estimate and status flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOutcome {
    pub value: CValue,
    pub abs_err_est: f64,
    pub flags: Flags,
}

impl EvalOutcome {
    pub fn new(value: CValue, abs_err_est: f64, flags: Flags) -> Self {
        EvalOutcome { value, abs_err_est, flags }
    }

    /// A value known to roundoff.
    pub fn exact(value: CValue) -> Self {
        let err = 2.0 * EPS * value.norm();
        EvalOutcome { value, abs_err_est: err, flags: Flags::CONVERGED }
    }

    pub fn converged(value: CValue, abs_err_est: f64) -> Self {
        EvalOutcome { value, abs_err_est, flags: Flags::CONVERGED }
    }

    pub fn is_converged(&self) -> bool {
        self.flags.contains(Flags::CONVERGED) && self.value.re.is_finite() && self.value.im.is_finite()
    }

    /// Relative error estimate, scaled by max(1, |value|).
    pub fn rel_err_est(&self) -> f64 {
        self.abs_err_est / self.value.norm().max(1.0)
    }

    /// Multiply by an exactly known factor.
    pub fn scale(self, k: CValue) -> Self {
        let n = k.norm();
        EvalOutcome {
            value: self.value * k,
            abs_err_est: self.abs_err_est * n + EPS * n * self.value.norm(),
            flags: self.flags,
        }
    }

    /// Apply an analytic map whose derivative at the value is `deriv`.
    pub fn map(self, value: CValue, deriv: CValue) -> Self {
        EvalOutcome {
            value,
            abs_err_est: self.abs_err_est * deriv.norm() + 2.0 * EPS * value.norm(),
            flags: self.flags,
        }
    }

    pub fn with_flags(mut self, extra: Flags) -> Self {
        self.flags |= extra;
        self
    }

    pub fn without_convergence(mut self) -> Self {
        self.flags.remove(Flags::CONVERGED);
        self
    }

    pub fn recip(self) -> Self {
        let v = self.value.inv();
        self.map(v, -(v * v))
    }

    /// Errors add, CONVERGED only survives if both operands carry it.
    fn merge_flags(a: Flags, b: Flags) -> Flags {
        let conv = a.contains(Flags::CONVERGED) && b.contains(Flags::CONVERGED);
        let mut f = (a | b) - Flags::CONVERGED;
        if conv {
            f |= Flags::CONVERGED;
        }
        f
    }
}

impl From<CValue> for EvalOutcome {
    fn from(v: CValue) -> Self {
        EvalOutcome::exact(v)
    }
}

impl Add for EvalOutcome {
    type Output = EvalOutcome;
    fn add(self, o: EvalOutcome) -> EvalOutcome {
        let v = self.value + o.value;
        EvalOutcome {
            value: v,
            abs_err_est: self.abs_err_est + o.abs_err_est + EPS * v.norm(),
            flags: Self::merge_flags(self.flags, o.flags),
        }
    }
}

impl Sub for EvalOutcome {
    type Output = EvalOutcome;
    fn sub(self, o: EvalOutcome) -> EvalOutcome {
        self + (-o)
    }
}

impl Neg for EvalOutcome {
    type Output = EvalOutcome;
    fn neg(self) -> EvalOutcome {
        EvalOutcome { value: -self.value, ..self }
    }
}

impl Mul for EvalOutcome {
    type Output = EvalOutcome;
    fn mul(self, o: EvalOutcome) -> EvalOutcome {
        let v = self.value * o.value;
        EvalOutcome {
            value: v,
            abs_err_est: self.abs_err_est * o.value.norm()
                + o.abs_err_est * self.value.norm()
                + self.abs_err_est * o.abs_err_est
                + EPS * v.norm(),
            flags: Self::merge_flags(self.flags, o.flags),
        }
    }
}

impl Mul<CValue> for EvalOutcome {
    type Output = EvalOutcome;
    fn mul(self, k: CValue) -> EvalOutcome {
        self.scale(k)
    }
}
