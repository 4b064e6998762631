use std::collections::BTreeMap;
use std::fmt;

use phiver_core::CValue;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::RegistryError;

const MAX_REJECTIONS: usize = 10_000;

/// One parameter value: complex or integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamValue {
    Complex(CValue),
    Int(i64),
}

impl ParamValue {
    pub fn as_complex(self) -> CValue {
        match self {
            ParamValue::Complex(z) => z,
            ParamValue::Int(n) => CValue::new(n as f64, 0.0),
        }
    }
}

/// A named parameter assignment, reproducible from (identity, seed, index).
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSample {
    pub values: BTreeMap<&'static str, ParamValue>,
    pub seed: u64,
    pub index: usize,
}

impl ParamSample {
    pub fn c(&self, name: &str) -> CValue {
        match self.values.get(name) {
            Some(v) => v.as_complex(),
            None => panic!("sample has no parameter {name}"),
        }
    }

    /// Real part of a real-valued parameter.
    pub fn r(&self, name: &str) -> f64 {
        self.c(name).re
    }

    pub fn int(&self, name: &str) -> i64 {
        match self.values.get(name) {
            Some(ParamValue::Int(n)) => *n,
            other => panic!("parameter {name} is not an integer: {other:?}"),
        }
    }
}

/// Box from which one parameter is drawn.
#[derive(Debug, Clone, Copy)]
pub enum ParamSpec {
    Real(f64, f64),
    /// Rectangle Re ∈ (re.0, re.1), Im ∈ (im.0, im.1).
    Complex {
        re: (f64, f64),
        im: (f64, f64),
    },
    /// Annular sector |z| ∈ (r.0, r.1), arg z ∈ (arg.0, arg.1).
    Polar {
        r: (f64, f64),
        arg: (f64, f64),
    },
    /// Inclusive integer range.
    Int(i64, i64),
}

impl fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ParamSpec::Real(a, b) => write!(f, "real ({a}, {b})"),
            ParamSpec::Complex { re, im } => write!(f, "Re ({}, {}) Im ({}, {})", re.0, re.1, im.0, im.1),
            ParamSpec::Polar { r, arg } => write!(f, "|·| ({}, {}) arg ({:.4}, {:.4})", r.0, r.1, arg.0, arg.1),
            ParamSpec::Int(a, b) => write!(f, "int {a}..={b}"),
        }
    }
}

impl ParamSpec {
    fn draw(&self, rng: &mut ChaCha8Rng) -> ParamValue {
        let mut u = |lo: f64, hi: f64| rng.gen_range(lo..hi);
        match *self {
            ParamSpec::Real(a, b) => ParamValue::Complex(CValue::new(u(a, b), 0.0)),
            ParamSpec::Complex { re, im } => ParamValue::Complex(CValue::new(u(re.0, re.1), u(im.0, im.1))),
            ParamSpec::Polar { r, arg } => ParamValue::Complex(CValue::from_polar(u(r.0, r.1), u(arg.0, arg.1))),
            ParamSpec::Int(a, b) => ParamValue::Int(rng.gen_range(a..=b)),
        }
    }
}

/// A cross-parameter condition the sampler enforces by rejection.
#[derive(Clone, Copy)]
pub struct Constraint {
    pub what: &'static str,
    pub holds: fn(&ParamSample) -> bool,
}

impl fmt::Debug for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.what)
    }
}

/// Where an identity's parameters live.
#[derive(Debug, Clone)]
pub enum ParamDomain {
    /// No parameters: a single empty sample.
    Constant,
    /// Every value of one integer parameter, regardless of the sample count.
    Grid { name: &'static str, values: &'static [i64] },
    /// Independent boxes plus constraints, drawn by rejection.
    Boxes { params: Vec<(&'static str, ParamSpec)>, constraints: Vec<Constraint> },
}

impl ParamDomain {
    pub fn boxes(params: Vec<(&'static str, ParamSpec)>) -> Self {
        ParamDomain::Boxes { params, constraints: Vec::new() }
    }

    pub fn with(mut self, what: &'static str, holds: fn(&ParamSample) -> bool) -> Self {
        if let ParamDomain::Boxes { constraints, .. } = &mut self {
            constraints.push(Constraint { what, holds });
        }
        self
    }

    pub fn describe(&self) -> String {
        match self {
            ParamDomain::Constant => "(no parameters)".into(),
            ParamDomain::Grid { name, values } => format!("{name} ∈ {values:?}"),
            ParamDomain::Boxes { params, constraints } => {
                let mut parts: Vec<String> = params.iter().map(|(n, s)| format!("{n}: {s}")).collect();
                parts.extend(constraints.iter().map(|c| c.what.to_string()));
                parts.join("; ")
            }
        }
    }

    pub fn contains(&self, p: &ParamSample) -> bool {
        match self {
            ParamDomain::Constant => p.values.is_empty(),
            ParamDomain::Grid { name, values } => p.values.get(name).is_some_and(|v| match v {
                ParamValue::Int(n) => values.contains(n),
                _ => false,
            }),
            ParamDomain::Boxes { constraints, .. } => constraints.iter().all(|c| (c.holds)(p)),
        }
    }
}

/// FNV-1a: a fixed, toolchain-independent hash of the identity id.
fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3))
}

fn sample_rng(id: &str, seed: u64, index: usize) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&fnv1a(id).to_le_bytes());
    key[8..16].copy_from_slice(&seed.to_le_bytes());
    key[16..24].copy_from_slice(&(index as u64).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

pub(crate) fn sample(
    id: &'static str,
    domain: &ParamDomain,
    seed: u64,
    count: usize,
) -> Result<Vec<ParamSample>, RegistryError> {
    if count == 0 {
        return Err(RegistryError::Config(format!("{id}: sample count must be ≥ 1")));
    }
    match domain {
        ParamDomain::Constant => Ok(vec![ParamSample { values: BTreeMap::new(), seed, index: 0 }]),
        ParamDomain::Grid { name, values } => Ok(values
            .iter()
            .enumerate()
            .map(|(index, &n)| ParamSample { values: BTreeMap::from([(*name, ParamValue::Int(n))]), seed, index })
            .collect()),
        ParamDomain::Boxes { params, .. } => (0..count)
            .map(|index| {
                let mut rng = sample_rng(id, seed, index);
                for _ in 0..MAX_REJECTIONS {
                    let values = params.iter().map(|(n, spec)| (*n, spec.draw(&mut rng))).collect();
                    let p = ParamSample { values, seed, index };
                    if domain.contains(&p) {
                        return Ok(p);
                    }
                }
                Err(RegistryError::Config(format!("{id}: sampler starved after {MAX_REJECTIONS} rejections")))
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom() -> ParamDomain {
        ParamDomain::boxes(vec![
            ("b", ParamSpec::Complex { re: (-1.0, 0.0), im: (0.0, 1.0) }),
            ("n", ParamSpec::Int(1, 3)),
        ])
        .with("|b| < 0.9", |p| p.c("b").norm() < 0.9)
    }

    #[test]
    fn deterministic_and_in_domain() {
        let a = sample("X", &dom(), 7, 20).unwrap();
        let b = sample("X", &dom(), 7, 20).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|p| p.c("b").norm() < 0.9 && (1..=3).contains(&p.int("n"))));
        let c = sample("Y", &dom(), 7, 20).unwrap();
        assert_ne!(a, c);
        // prefix stability: sample i does not depend on the count
        assert_eq!(sample("X", &dom(), 7, 3).unwrap()[..], a[..3]);
    }

    #[test]
    fn starvation_is_a_config_error() {
        let d = ParamDomain::boxes(vec![("x", ParamSpec::Real(0.0, 1.0))]).with("x > 2", |p| p.r("x") > 2.0);
        assert!(matches!(sample("Z", &d, 1, 1), Err(RegistryError::Config(_))));
        assert!(sample("Z", &dom(), 1, 0).is_err());
    }

    #[test]
    fn grid_ignores_count() {
        let g = ParamDomain::Grid { name: "n", values: &[0, 1, 2] };
        let s = sample("G", &g, 1, 10).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s[2].int("n"), 2);
    }
}
