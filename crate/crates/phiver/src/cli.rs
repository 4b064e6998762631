//! Command-line surface.
//!
//! Exit codes: 0 success, 1 a FAIL, domain error or unwritable output,
//! 2 usage error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use phiver_core::gammakit::{
    digamma, expint_en, gamma, inc_beta, loggamma, lower_gamma, upper_gamma, upper_gamma_a_deriv,
    upper_gamma_continued, upper_gamma_scaled, GammaBranchSpec,
};
use phiver_core::lerchkit::{
    funeq515_residual, funeq_residual, jonquiere_residual, legendre_chi, lerch_phi, lerch_phi_sderiv, lerch_phi_zderiv,
    polylog, polylog_sderiv, ti_inverse_tangent_integral, LerchPoint,
};
use phiver_core::zetakit::{bernoulli_poly, hurwitz_zeta, hurwitz_zeta_sderiv, stieltjes};
use phiver_core::{CValue, EvalOutcome};

use crate::registry::{catalog, verify_suite, Filter, RegistryError, SuiteOptions};
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "phiver", version, about = "Evaluate Hurwitz–Lerch zeta functions and verify identities between them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an exported function; complex arguments are written re,im.
    Eval {
        /// Function name (see `phiver eval --help` for the list).
        #[arg(value_name = "FN", long_help = function_help())]
        function: String,
        #[arg(value_name = "ARGS", allow_hyphen_values = true, num_args = 0..)]
        args: Vec<String>,
    },
    /// Check catalog identities at seeded sample points.
    Verify {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Print the catalog: id, anchor, tags, parameter domain.
    List,
    /// Run a verification and serialize the full report.
    Report {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Comma-separated identity ids.
    #[arg(long, value_delimiter = ',')]
    pub ids: Vec<String>,
    /// Comma-separated tags: integral, series, functional_eq, constant.
    #[arg(long, value_delimiter = ',')]
    pub tags: Vec<String>,
    /// Tolerance override on |lhs − rhs| / max(1, |lhs|).
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, env = "PHIVER_SEED", default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Also evaluate identities that are skipped by default.
    #[arg(long)]
    pub attempt_skipped: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

type Exported = fn(&[CValue]) -> Result<EvalOutcome, EvalError>;

enum EvalError {
    Usage(String),
    Domain(phiver_core::Error),
}

impl From<phiver_core::Error> for EvalError {
    fn from(e: phiver_core::Error) -> Self {
        EvalError::Domain(e)
    }
}

fn index(z: CValue, what: &str) -> Result<u32, EvalError> {
    if z.im == 0.0 && z.re >= 0.0 && z.re.fract() == 0.0 && z.re <= u32::MAX as f64 {
        Ok(z.re as u32)
    } else {
        Err(EvalError::Usage(format!("{what} must be a nonnegative integer, got {z}")))
    }
}

fn point(a: &[CValue]) -> Result<LerchPoint, EvalError> {
    Ok(LerchPoint::new(a[0], a[1], a[2])?)
}

/// name, parameter names, evaluator
const EXPORTS: &[(&str, &[&str], Exported)] = &[
    ("gamma", &["z"], |a| Ok(gamma(a[0])?)),
    ("loggamma", &["z"], |a| Ok(loggamma(a[0])?)),
    ("digamma", &["z"], |a| Ok(digamma(a[0])?)),
    ("upper_gamma", &["a", "z"], |a| Ok(upper_gamma(a[0], a[1])?)),
    ("upper_gamma_scaled", &["a", "z"], |a| Ok(upper_gamma_scaled(a[0], a[1])?)),
    ("lower_gamma", &["a", "z"], |a| Ok(lower_gamma(a[0], a[1])?)),
    ("upper_gamma_a_deriv", &["a", "z"], |a| Ok(upper_gamma_a_deriv(a[0], a[1])?)),
    ("upper_gamma_continued", &["a", "z", "m"], |a| {
        let m = a[2];
        if m.im != 0.0 || m.re.fract() != 0.0 || m.re.abs() > 1e9 {
            return Err(EvalError::Usage(format!("sheet index m must be an integer, got {m}")));
        }
        Ok(upper_gamma_continued(a[0], a[1], GammaBranchSpec { winding: m.re as i64 })?)
    }),
    ("expint_en", &["n", "z"], |a| Ok(expint_en(index(a[0], "n")?, a[1])?)),
    ("inc_beta", &["z", "a", "b"], |a| Ok(inc_beta(a[0], a[1], a[2])?)),
    ("hurwitz_zeta", &["s", "a"], |a| Ok(hurwitz_zeta(a[0], a[1])?)),
    ("hurwitz_zeta_sderiv", &["j", "s", "a"], |a| Ok(hurwitz_zeta_sderiv(index(a[0], "j")?, a[1], a[2])?)),
    ("stieltjes", &["n", "a"], |a| Ok(stieltjes(index(a[0], "n")?, a[1])?)),
    ("bernoulli_poly", &["n", "x"], |a| Ok(EvalOutcome::exact(bernoulli_poly(index(a[0], "n")? as usize, a[1])?))),
    ("lerch_phi", &["z", "s", "a"], |a| Ok(lerch_phi(point(a)?)?)),
    ("lerch_phi_sderiv", &["j", "z", "s", "a"], |a| Ok(lerch_phi_sderiv(index(a[0], "j")?, point(&a[1..])?)?)),
    ("lerch_phi_zderiv", &["n", "z", "s", "a"], |a| Ok(lerch_phi_zderiv(index(a[0], "n")?, point(&a[1..])?)?)),
    ("polylog", &["s", "z"], |a| Ok(polylog(a[0], a[1])?)),
    ("polylog_sderiv", &["s", "z"], |a| Ok(polylog_sderiv(a[0], a[1])?)),
    ("legendre_chi", &["s", "z"], |a| Ok(legendre_chi(a[0], a[1])?)),
    ("ti_inverse_tangent_integral", &["s", "z"], |a| Ok(ti_inverse_tangent_integral(a[0], a[1])?)),
    ("funeq_residual", &["k", "t", "m"], |a| Ok(funeq_residual(a[0], a[1], a[2])?)),
    ("funeq515_residual", &["x", "s", "a"], |a| Ok(funeq515_residual(a[0], a[1], a[2])?)),
    ("jonquiere_residual", &["k", "m"], |a| Ok(jonquiere_residual(a[0], a[1])?)),
];

fn function_help() -> String {
    let mut s = String::from("Function name. Exported functions:\n");
    for (name, params, _) in EXPORTS {
        s.push_str(&format!("  {name} {}\n", params.join(" ")));
    }
    s
}

/// "re" or "re,im".
pub fn parse_complex(tok: &str) -> Option<CValue> {
    let (re, im) = match tok.split_once(',') {
        Some((r, i)) => (r, i),
        None => (tok, "0"),
    };
    Some(CValue::new(re.trim().parse().ok()?, im.trim().parse().ok()?))
}

fn cmd_eval(function: &str, args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let Some((name, params, f)) = EXPORTS.iter().find(|(n, _, _)| *n == function) else {
        let _ = writeln!(err, "error: unknown function '{function}'\n\n{}", function_help());
        return EXIT_USAGE;
    };
    if args.len() != params.len() {
        let _ = writeln!(
            err,
            "error: {name} takes {} argument(s) ({}), got {}\nusage: phiver eval {name} {}",
            params.len(),
            params.join(", "),
            args.len(),
            params.join(" ")
        );
        return EXIT_USAGE;
    }
    let mut vals = Vec::with_capacity(args.len());
    for (tok, p) in args.iter().zip(params.iter()) {
        match parse_complex(tok) {
            Some(z) => vals.push(z),
            None => {
                let _ = writeln!(err, "error: argument {p} = '{tok}' is not \"re\" or \"re,im\"");
                return EXIT_USAGE;
            }
        }
    }
    match f(&vals) {
        Ok(o) => {
            let flags: Vec<&str> = o.flags.names().collect();
            let _ = writeln!(
                out,
                "value: {} {} {}i",
                o.value.re,
                if o.value.im.is_sign_negative() { '-' } else { '+' },
                o.value.im.abs()
            );
            let _ = writeln!(out, "abs_err_est: {:e}", o.abs_err_est);
            let _ = writeln!(out, "flags: {}", if flags.is_empty() { "(none)".to_string() } else { flags.join("|") });
            EXIT_OK
        }
        Err(EvalError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(EvalError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

fn cmd_list(out: &mut dyn Write) -> i32 {
    let _ = writeln!(out, "id\tanchor\ttags\tdomain");
    for i in catalog() {
        let tags: Vec<&str> = i.tags.iter().map(|t| t.name()).collect();
        let _ = writeln!(out, "{}\t{}\t{}\t{}", i.id, i.anchor, tags.join(","), i.domain.describe());
    }
    EXIT_OK
}

fn cmd_run(run: &RunArgs, format: Format, path: Option<&PathBuf>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Some(t) = run.tol {
        if !(t.is_finite() && t > 0.0) {
            let _ = writeln!(err, "error: --tol must be a positive finite number, got {t}");
            return EXIT_USAGE;
        }
    }
    let opts = SuiteOptions {
        filter: Filter { ids: run.ids.clone(), tags: run.tags.clone() },
        seed: run.seed,
        samples: run.samples as usize,
        tol_override: run.tol,
        attempt_skipped: run.attempt_skipped,
    };
    let suite = match verify_suite(&opts) {
        Ok(s) => s,
        Err(e @ (RegistryError::UnknownId(_) | RegistryError::UnknownTag(_))) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_FAIL;
        }
    };
    let body = match format {
        Format::Text => report::to_text(&suite),
        Format::Json => report::to_json(&suite),
        Format::Csv => report::to_csv(&suite),
    };
    match path {
        Some(p) => {
            if let Err(e) = fs::write(p, &body) {
                let _ = writeln!(err, "error: cannot write {}: {e}", p.display());
                return EXIT_FAIL;
            }
            if format != Format::Text {
                let _ = out.write_all(report::to_text(&suite).as_bytes());
            }
        }
        None => {
            let _ = out.write_all(body.as_bytes());
        }
    }
    if suite.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
                return EXIT_OK;
            }
            let _ = err.write_all(text.as_bytes());
            return EXIT_USAGE;
        }
    };
    match &cli.command {
        Command::Eval { function, args } => cmd_eval(function, args, out, err),
        Command::List => cmd_list(out),
        Command::Verify { run, format, out: path } | Command::Report { run, format, out: path } => {
            cmd_run(run, *format, path.as_ref(), out, err)
        }
    }
}
