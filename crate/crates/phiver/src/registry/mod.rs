//! The identity catalog and the engine that checks it.

mod catalog;
mod domain;

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use phiver_core::quadkit::QuadOptions;
use phiver_core::{CValue, EvalOutcome};
use rayon::prelude::*;

pub use catalog::{catalog, find};
pub use domain::{Constraint, ParamDomain, ParamSample, ParamSpec, ParamValue};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegistryError {
    #[error("unknown identity id: {0}")]
    UnknownId(String),
    #[error("unknown tag: {0}")]
    UnknownTag(String),
    #[error("configuration error: {0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Integral,
    Series,
    FunctionalEq,
    Constant,
}

impl Tag {
    pub const ALL: [Tag; 4] = [Tag::Integral, Tag::Series, Tag::FunctionalEq, Tag::Constant];

    pub fn name(self) -> &'static str {
        match self {
            Tag::Integral => "integral",
            Tag::Series => "series",
            Tag::FunctionalEq => "functional_eq",
            Tag::Constant => "constant",
        }
    }

    pub fn parse(s: &str) -> Result<Tag, RegistryError> {
        Tag::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| RegistryError::UnknownTag(s.to_string()))
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Knobs handed to the evaluators of one check.
#[derive(Debug, Clone, Copy)]
pub struct EvalCtx {
    pub quad: QuadOptions,
}

impl EvalCtx {
    /// Quadrature is asked for two digits more than the identity's tolerance.
    pub fn for_tol(tol: f64) -> Self {
        let q = (tol * 1e-2).clamp(1e-13, 1e-6);
        EvalCtx { quad: QuadOptions { tol: q, max_level: 12, pv_point: None } }
    }
}

pub type Sides = phiver_core::Result<(EvalOutcome, EvalOutcome)>;

/// One executable identity LHS = RHS.
pub struct Identity {
    pub id: &'static str,
    pub anchor: &'static str,
    pub tags: &'static [Tag],
    /// Default tolerance on |LHS − RHS| / max(1, |LHS|).
    pub tol: f64,
    pub domain: ParamDomain,
    /// Evaluates both sides at one sample.
    pub sides: fn(&ParamSample, &EvalCtx) -> Sides,
    /// Per-sample tolerance replacing `tol` (still overridden by a tolerance override).
    pub sample_tol: Option<fn(&ParamSample) -> f64>,
    /// Exact check in rational arithmetic; when present, pass requires it.
    pub exact: Option<fn(&ParamSample) -> bool>,
    /// Reason the identity is skipped unless explicitly attempted.
    pub skip: Option<&'static str>,
}

impl Identity {
    pub fn has_tag(&self, t: Tag) -> bool {
        self.tags.contains(&t)
    }
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity").field("id", &self.id).field("tags", &self.tags).field("tol", &self.tol).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SideValue {
    pub value: CValue,
    pub abs_err_est: f64,
    pub flags: Vec<&'static str>,
    pub converged: bool,
}

impl From<&EvalOutcome> for SideValue {
    fn from(o: &EvalOutcome) -> Self {
        SideValue {
            value: o.value,
            abs_err_est: o.abs_err_est,
            flags: o.flags.names().collect(),
            converged: o.is_converged(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleRecord {
    pub index: usize,
    pub params: Vec<(&'static str, ParamValue)>,
    pub lhs: Option<SideValue>,
    pub rhs: Option<SideValue>,
    pub abs_residual: f64,
    /// |LHS − RHS| / max(1, |LHS|): the quantity compared against the tolerance.
    pub rel_residual: f64,
    pub tol: f64,
    pub pass: bool,
    pub skipped: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub id: &'static str,
    pub anchor: &'static str,
    pub status: Status,
    pub reason: Option<String>,
    pub samples: Vec<SampleRecord>,
    pub wall_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub tolerance_policy: String,
    pub generated_at: String,
    pub identities: Vec<IdentityReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Deterministic samples for an identity.
pub fn sample_params(identity: &Identity, seed: u64, count: usize) -> Result<Vec<ParamSample>, RegistryError> {
    let s = domain::sample(identity.id, &identity.domain, seed, count)?;
    for p in &s {
        assert!(identity.domain.contains(p), "{}: sampler emitted an out-of-domain point", identity.id);
    }
    Ok(s)
}

fn check_sample(identity: &Identity, p: &ParamSample, tol_override: Option<f64>) -> SampleRecord {
    let tol = tol_override.unwrap_or_else(|| identity.sample_tol.map_or(identity.tol, |f| f(p)));
    let ctx = EvalCtx::for_tol(tol);
    let params = p.values.iter().map(|(k, v)| (*k, *v)).collect();
    let mut rec = SampleRecord {
        index: p.index,
        params,
        lhs: None,
        rhs: None,
        abs_residual: f64::NAN,
        rel_residual: f64::NAN,
        tol,
        pass: false,
        skipped: false,
        note: None,
    };
    let (l, r) = match (identity.sides)(p, &ctx) {
        Ok(s) => s,
        Err(e) => {
            rec.skipped = true;
            rec.note = Some(e.to_string());
            return rec;
        }
    };
    let abs = (l.value - r.value).norm();
    rec.abs_residual = abs;
    rec.rel_residual = abs / l.value.norm().max(1.0);
    let both = l.is_converged() && r.is_converged();
    rec.pass = both && rec.rel_residual <= tol;
    if let Some(exact) = identity.exact {
        let ok = exact(p);
        rec.pass = rec.pass && ok;
        if !ok {
            rec.note = Some("exact rational check failed".into());
        }
    }
    if !both {
        rec.note = Some("an evaluator did not report CONVERGED".into());
    }
    rec.lhs = Some((&l).into());
    rec.rhs = Some((&r).into());
    rec
}

/// Checks one identity at the given samples.
pub fn verify(
    identity: &Identity,
    samples: &[ParamSample],
    tol_override: Option<f64>,
    attempt_skipped: bool,
) -> IdentityReport {
    let start = Instant::now();
    let mut report = IdentityReport {
        id: identity.id,
        anchor: identity.anchor,
        status: Status::Skipped,
        reason: None,
        samples: Vec::new(),
        wall_ms: 0.0,
    };
    if let (Some(why), false) = (identity.skip, attempt_skipped) {
        report.reason = Some(why.to_string());
        return report;
    }
    report.samples = samples.iter().map(|p| check_sample(identity, p, tol_override)).collect();
    let skipped = report.samples.iter().filter(|s| s.skipped).count();
    report.status = if !report.samples.is_empty() && skipped == report.samples.len() {
        report.reason = report.samples[0].note.clone().map(|n| format!("every sample failed to evaluate: {n}"));
        Status::Skipped
    } else if report.samples.iter().all(|s| s.pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    report.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}

/// Which identities a suite run covers; empty means everything.
#[derive(Debug, Clone, Default)]
pub struct Filter {
    pub ids: Vec<String>,
    pub tags: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub filter: Filter,
    pub seed: u64,
    pub samples: usize,
    pub tol_override: Option<f64>,
    pub attempt_skipped: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { filter: Filter::default(), seed: 42, samples: 10, tol_override: None, attempt_skipped: false }
    }
}

fn select(filter: &Filter) -> Result<Vec<&'static Identity>, RegistryError> {
    let tags: BTreeSet<Tag> = filter.tags.iter().map(|t| Tag::parse(t)).collect::<Result<_, _>>()?;
    let mut chosen: Vec<&'static Identity> = Vec::new();
    for id in &filter.ids {
        chosen.push(find(id).ok_or_else(|| RegistryError::UnknownId(id.clone()))?);
    }
    if filter.ids.is_empty() {
        chosen = catalog().iter().collect();
    }
    chosen.retain(|i| tags.is_empty() || tags.iter().any(|t| i.has_tag(*t)));
    chosen.sort_by_key(|i| i.id);
    chosen.dedup_by_key(|i| i.id);
    Ok(chosen)
}

/// Checks the filtered catalog concurrently; the report is ordered by id.
pub fn verify_suite(opts: &SuiteOptions) -> Result<SuiteReport, RegistryError> {
    let chosen = select(&opts.filter)?;
    let planned: Vec<(&Identity, Vec<ParamSample>)> = chosen
        .into_iter()
        .map(|i| Ok((i, sample_params(i, opts.seed, opts.samples)?)))
        .collect::<Result<_, RegistryError>>()?;
    let mut identities: Vec<IdentityReport> =
        planned.par_iter().map(|(i, s)| verify(i, s, opts.tol_override, opts.attempt_skipped)).collect();
    identities.sort_by_key(|r| r.id);
    let mut summary = Summary { total: identities.len(), ..Summary::default() };
    for r in &identities {
        match r.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    let tolerance_policy = match opts.tol_override {
        Some(t) => format!("override {t:e} on |lhs-rhs|/max(1,|lhs|)"),
        None => "per-identity default on |lhs-rhs|/max(1,|lhs|)".to_string(),
    };
    Ok(SuiteReport {
        suite: "phiver".to_string(),
        seed: opts.seed,
        tolerance_policy,
        generated_at: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true),
        identities,
        summary,
    })
}
