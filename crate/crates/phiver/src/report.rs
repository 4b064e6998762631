//! JSON, CSV and text renderings of a [`SuiteReport`].

use std::collections::BTreeMap;
use std::io::{self, Write};

use phiver_core::CValue;
use serde::{Deserialize, Serialize};

use crate::registry::{IdentityReport, SampleRecord, SideValue, SuiteReport};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<CValue> for JsonComplex {
    fn from(z: CValue) -> Self {
        JsonComplex { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonSide {
    pub re: f64,
    pub im: f64,
    /// `None` when the estimate is not finite.
    pub abs_err_est: Option<f64>,
    pub flags: Vec<String>,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonSample {
    pub index: usize,
    pub params: BTreeMap<String, JsonComplex>,
    pub lhs: Option<JsonSide>,
    pub rhs: Option<JsonSide>,
    pub abs_residual: Option<f64>,
    pub rel_residual: Option<f64>,
    pub tol: f64,
    pub pass: bool,
    pub skipped: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonIdentity {
    pub id: String,
    pub anchor: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub samples: Vec<JsonSample>,
    pub wall_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub suite: String,
    pub seed: u64,
    pub tolerance_policy: String,
    /// RFC 3339 generation time.
    pub generated: String,
    pub identities: Vec<JsonIdentity>,
    pub summary: JsonSummary,
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn side(s: &SideValue) -> JsonSide {
    JsonSide {
        re: s.value.re,
        im: s.value.im,
        abs_err_est: finite(s.abs_err_est),
        flags: s.flags.iter().map(|f| f.to_string()).collect(),
        converged: s.converged,
    }
}

fn params(s: &SampleRecord) -> BTreeMap<String, JsonComplex> {
    s.params.iter().map(|(k, v)| (k.to_string(), v.as_complex().into())).collect()
}

fn sample(s: &SampleRecord) -> JsonSample {
    JsonSample {
        index: s.index,
        params: params(s),
        lhs: s.lhs.as_ref().map(side),
        rhs: s.rhs.as_ref().map(side),
        abs_residual: finite(s.abs_residual),
        rel_residual: finite(s.rel_residual),
        tol: s.tol,
        pass: s.pass,
        skipped: s.skipped,
        note: s.note.clone(),
    }
}

fn identity(r: &IdentityReport) -> JsonIdentity {
    JsonIdentity {
        id: r.id.to_string(),
        anchor: r.anchor.to_string(),
        status: r.status.name().to_string(),
        reason: r.reason.clone(),
        samples: r.samples.iter().map(sample).collect(),
        wall_ms: r.wall_ms,
    }
}

impl From<&SuiteReport> for JsonReport {
    fn from(r: &SuiteReport) -> Self {
        JsonReport {
            suite: r.suite.clone(),
            seed: r.seed,
            tolerance_policy: r.tolerance_policy.clone(),
            generated: r.generated_at.clone(),
            identities: r.identities.iter().map(identity).collect(),
            summary: JsonSummary {
                total: r.summary.total,
                passed: r.summary.passed,
                failed: r.summary.failed,
                skipped: r.summary.skipped,
            },
        }
    }
}

pub fn to_json(r: &SuiteReport) -> String {
    let mut s = serde_json::to_string_pretty(&JsonReport::from(r)).expect("report is serializable");
    s.push('\n');
    s
}

pub const CSV_HEADER: [&str; 10] = [
    "identity",
    "sample_index",
    "param_json",
    "lhs_re",
    "lhs_im",
    "rhs_re",
    "rhs_im",
    "abs_residual",
    "rel_residual",
    "pass",
];

fn num(x: f64) -> String {
    if x.is_finite() {
        x.to_string()
    } else {
        String::new()
    }
}

/// One row per (identity, sample); identities without samples have no rows.
pub fn write_csv<W: Write>(r: &SuiteReport, out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for id in &r.identities {
        for s in &id.samples {
            let pj = serde_json::to_string(&params(s)).expect("params are serializable");
            let (lr, li) =
                s.lhs.as_ref().map_or((String::new(), String::new()), |v| (num(v.value.re), num(v.value.im)));
            let (rr, ri) =
                s.rhs.as_ref().map_or((String::new(), String::new()), |v| (num(v.value.re), num(v.value.im)));
            w.write_record([
                id.id.to_string(),
                s.index.to_string(),
                pj,
                lr,
                li,
                rr,
                ri,
                num(s.abs_residual),
                num(s.rel_residual),
                s.pass.to_string(),
            ])?;
        }
    }
    w.flush()
}

pub fn to_csv(r: &SuiteReport) -> String {
    let mut buf = Vec::new();
    write_csv(r, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("csv output is UTF-8")
}

/// One line per identity, then the summary.
pub fn to_text(r: &SuiteReport) -> String {
    let mut s = String::new();
    for id in &r.identities {
        let n = id.samples.len();
        let passed = id.samples.iter().filter(|x| x.pass).count();
        let worst = id
            .samples
            .iter()
            .map(|x| x.rel_residual)
            .filter(|x| x.is_finite())
            .fold(None, |m: Option<f64>, x| Some(m.map_or(x, |m| m.max(x))));
        let worst = worst.map_or("-".to_string(), |w| format!("{w:.2e}"));
        let mut line = format!(
            "{:<7} {:<20} {passed:>3}/{n:<3} max rel {worst:<9} {:>9.1} ms",
            id.status.name(),
            id.id,
            id.wall_ms
        );
        if let Some(why) = &id.reason {
            line.push_str(&format!("  ({why})"));
        }
        s.push_str(line.trim_end());
        s.push('\n');
    }
    let m = &r.summary;
    s.push_str(&format!(
        "total {}  passed {}  failed {}  skipped {}  (seed {})\n",
        m.total, m.passed, m.failed, m.skipped, r.seed
    ));
    s
}
