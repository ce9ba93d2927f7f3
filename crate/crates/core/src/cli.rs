//! Command implementations behind the `wright-radii` binary.
//!
//! Every command produces flat records written as CSV (header row, LF line
//! endings, reals to 15 significant digits) or, with `--json`, as a JSON
//! array of objects with the same keys in the same order. Data goes to
//! stdout and diagnostics to stderr. Exit codes: 0 success, 1 numeric
//! failure, 2 invalid input.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::Error;
use crate::family::{Form, NormalizedKind};
use crate::kernel::{wright_eval, WrightParams};
use crate::radii::{
    radius_by_certification, radius_half_plane, radius_real_axis, EquationRegistry,
    JanowskiParams, RadiusKind, RadiusQuery, RadiusResult, DEFAULT_RADIUS_TOL,
};
use crate::zeros::{derivative_positive_zeros, positive_zeros, DEFAULT_ZERO_TOL};

/// Environment variable capping sweep parallelism.
pub const THREADS_ENV: &str = "WRIGHT_RADII_THREADS";
/// Cross-method agreement threshold used for `--method both` and `--check` diagnostics.
pub const AGREEMENT_TOL: f64 = 1e-5;

#[derive(Debug, Parser)]
#[command(name = "wright-radii", version, about = "Wright functions, their zeros, and radii of starlikeness and convexity")]
pub struct Cli {
    /// Emit JSON instead of CSV.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate W_{rho,beta}(z).
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        rho: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        /// Real part of z.
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
        /// Imaginary part of z.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        im: f64,
        #[arg(long, default_value_t = 1e-15)]
        tol: f64,
    },
    /// Positive zeros of Γ(β)W(-r²) (sq) or Γ(β)W(-r) (lin), or of a normalized derivative.
    Zeros {
        #[arg(long, allow_hyphen_values = true)]
        rho: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, default_value = "sq")]
        form: String,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_ZERO_TOL)]
        tol: f64,
        /// Zeros of the derivative of the normalized function f, g or h instead.
        #[arg(long)]
        derivative: Option<String>,
    },
    /// One radius of one normalized function.
    Radius {
        #[arg(long, default_value = "g")]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        rho: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        /// lem-star, lem-convex, jan-star or jan-convex.
        #[arg(long)]
        what: String,
        #[arg(short = 'A', allow_hyphen_values = true)]
        a: Option<f64>,
        #[arg(short = 'B', allow_hyphen_values = true)]
        b: Option<f64>,
        /// certifier, real-axis, equation, half-plane or both (certifier and real-axis).
        #[arg(long, default_value = "certifier")]
        method: String,
        #[arg(long, default_value_t = DEFAULT_RADIUS_TOL)]
        tol: f64,
    },
    /// Certified radii over a parameter grid read from a key=value file.
    Sweep {
        grid: PathBuf,
        /// Append the real-axis radius and its difference from the certifier.
        #[arg(long)]
        check: bool,
    },
}

/// A cell of an output record.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Str(String),
    Real(f64),
    Int(i64),
    Bool(bool),
    Empty,
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Str(s.to_string())
    }
}

impl From<Option<f64>> for Value {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Value::Empty, Value::Real)
    }
}

/// One output row: ordered key/value pairs.
pub type Record = Vec<(&'static str, Value)>;

/// Formats like C's `%.15g`.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    const P: i32 = 15;
    let sci = format!("{:.*e}", (P - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= P {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        trim_zeros(&format!("{:.*}", (P - 1 - exp) as usize, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn write_records(out: &mut dyn Write, records: &[Record], json: bool) -> std::io::Result<()> {
    if json {
        let rows: Vec<serde_json::Map<String, serde_json::Value>> = records
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(k, v)| {
                        let jv = match v {
                            Value::Str(s) => serde_json::Value::String(s.clone()),
                            Value::Int(i) => serde_json::Value::from(*i),
                            Value::Bool(b) => serde_json::Value::Bool(*b),
                            Value::Real(x) => format_real(*x)
                                .parse::<f64>()
                                .ok()
                                .and_then(serde_json::Number::from_f64)
                                .map_or(serde_json::Value::Null, serde_json::Value::Number),
                            Value::Empty => serde_json::Value::Null,
                        };
                        (k.to_string(), jv)
                    })
                    .collect()
            })
            .collect();
        serde_json::to_writer_pretty(&mut *out, &rows)?;
        out.write_all(b"\n")
    } else {
        let mut buf = String::new();
        if let Some(first) = records.first() {
            let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
            buf.push_str(&header.join(","));
            buf.push('\n');
        }
        for r in records {
            let cells: Vec<String> = r
                .iter()
                .map(|(_, v)| match v {
                    Value::Str(s) => s.clone(),
                    Value::Int(i) => i.to_string(),
                    Value::Bool(b) => b.to_string(),
                    Value::Real(x) => format_real(*x),
                    Value::Empty => String::new(),
                })
                .collect();
            let _ = writeln!(buf, "{}", cells.join(","));
        }
        out.write_all(buf.as_bytes())
    }
}

/// A command failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::InvalidParameter(_)) { 2 } else { 1 };
        Self { code, message: e.to_string() }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            // help and version are data, parse errors are diagnostics
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let records = match execute(&cli.command, err) {
        Ok(r) => r,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            return f.code;
        }
    };
    match write_records(out, &records, cli.json) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: writing output: {e}");
            1
        }
    }
}

/// Runs a parsed command and returns its records.
pub fn execute(cmd: &Command, err: &mut dyn Write) -> Result<Vec<Record>, Failure> {
    match cmd {
        Command::Eval { rho, beta, z, im, tol } => cmd_eval(*rho, *beta, *z, *im, *tol),
        Command::Zeros { rho, beta, form, count, tol, derivative } => {
            cmd_zeros(*rho, *beta, form, *count, *tol, derivative.as_deref())
        }
        Command::Radius { kind, rho, beta, what, a, b, method, tol } => {
            let q = build_query(kind, *rho, *beta, what, *a, *b)?;
            cmd_radius(&q, method, *tol, err)
        }
        Command::Sweep { grid, check } => {
            let text = std::fs::read_to_string(grid)
                .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", grid.display())))?;
            let spec = GridSpec::parse(&text)?;
            cmd_sweep(&spec, *check, threads_from_env()?, err)
        }
    }
}

pub fn cmd_eval(rho: f64, beta: f64, re: f64, im: f64, tol: f64) -> Result<Vec<Record>, Failure> {
    let p = WrightParams::new(rho, beta)?;
    let r = wright_eval(&p, Complex64::new(re, im), tol)?;
    Ok(vec![vec![
        ("rho", rho.into()),
        ("beta", beta.into()),
        ("re_z", re.into()),
        ("im_z", im.into()),
        ("re", r.value.re.into()),
        ("im", r.value.im.into()),
        ("abs_error_bound", r.abs_error_bound.into()),
        ("terms_used", Value::Int(r.terms_used as i64)),
    ]])
}

pub fn cmd_zeros(
    rho: f64,
    beta: f64,
    form: &str,
    count: usize,
    tol: f64,
    derivative: Option<&str>,
) -> Result<Vec<Record>, Failure> {
    let p = WrightParams::new(rho, beta)?;
    let table = match derivative {
        Some(k) => {
            let kind: NormalizedKind = k.parse()?;
            derivative_positive_zeros(kind, &p, count, tol)?
        }
        None => {
            let form: Form = form.parse()?;
            positive_zeros(&p, form, count, tol)?
        }
    };
    Ok(table
        .zeros
        .iter()
        .zip(&table.residuals)
        .enumerate()
        .map(|(i, (&z, &res))| {
            vec![("index", Value::Int(i as i64 + 1)), ("zero", z.into()), ("residual", res.into())]
        })
        .collect())
}

/// Validates and assembles a radius query from command-line style inputs.
pub fn build_query(
    kind: &str,
    rho: f64,
    beta: f64,
    what: &str,
    a: Option<f64>,
    b: Option<f64>,
) -> Result<RadiusQuery, Failure> {
    let kind: NormalizedKind = kind.parse()?;
    let p = WrightParams::new(rho, beta)?;
    let rk: RadiusKind = what.parse()?;
    let jp = if rk.is_janowski() {
        Some(JanowskiParams::new(a.unwrap_or(1.0), b.unwrap_or(-1.0))?)
    } else {
        if a.is_some() || b.is_some() {
            return Err(Failure::invalid(format!("{rk} does not take -A/-B")));
        }
        None
    };
    Ok(RadiusQuery::new(kind, p, rk, jp)?)
}

fn query_columns(q: &RadiusQuery) -> Record {
    vec![
        ("kind", q.kind.as_str().into()),
        ("rho", q.params.rho().into()),
        ("beta", q.params.beta().into()),
        ("what", q.radius_kind.as_str().into()),
        ("A", q.janowski.map(|j| j.a()).into()),
        ("B", q.janowski.map(|j| j.b()).into()),
    ]
}

fn result_columns(r: &RadiusResult) -> Record {
    vec![
        ("method", r.method.as_str().into()),
        ("radius", r.radius.into()),
        ("clamped", r.clamped.into()),
        ("lo", r.bracket.0.into()),
        ("hi", r.bracket.1.into()),
        ("sup_at_radius", r.sup_at_radius.into()),
        ("argmax_angle", r.argmax_angle.into()),
        ("reached_domain_bound", Value::Bool(r.reached_domain_bound)),
    ]
}

pub fn cmd_radius(
    q: &RadiusQuery,
    method: &str,
    tol: f64,
    err: &mut dyn Write,
) -> Result<Vec<Record>, Failure> {
    let mut row = query_columns(q);
    match method {
        "both" => {
            let c = radius_by_certification(q, tol)?;
            let r = radius_real_axis(q, q.default_real_axis_target(), tol)?;
            let delta = r.radius - c.radius;
            if delta.abs() > AGREEMENT_TOL {
                let _ = writeln!(
                    err,
                    "finding: {q}: certifier {} vs real-axis {} (boundary maximum at theta = {})",
                    format_real(c.radius),
                    format_real(r.radius),
                    format_real(c.argmax_angle)
                );
            }
            row.extend([
                ("certifier", c.radius.into()),
                ("real_axis", r.radius.into()),
                ("delta", delta.into()),
                ("sup_at_radius", c.sup_at_radius.into()),
                ("argmax_angle", c.argmax_angle.into()),
            ]);
        }
        _ => {
            let r = match method {
                "certifier" => radius_by_certification(q, tol)?,
                "real-axis" => radius_real_axis(q, q.default_real_axis_target(), tol)?,
                "equation" => EquationRegistry::builtin().solve(q, tol)?,
                "half-plane" => {
                    if q.janowski.map(|j| (j.a(), j.b())) != Some((1.0, -1.0)) {
                        return Err(Failure::invalid("half-plane method needs jan-* with -A 1 -B -1"));
                    }
                    radius_half_plane(q, tol)?
                }
                other => {
                    return Err(Failure::invalid(format!(
                        "unknown method '{other}' (expected certifier, real-axis, equation, half-plane or both)"
                    )))
                }
            };
            row.extend(result_columns(&r));
        }
    }
    Ok(vec![row])
}

/// Parsed sweep grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub rho: Vec<f64>,
    pub beta: Vec<f64>,
    pub kinds: Vec<NormalizedKind>,
    pub what: Vec<RadiusKind>,
    pub janowski: Vec<JanowskiParams>,
    pub tol: f64,
}

impl GridSpec {
    /// Parses `key = v1, v2, ...` lines. `#` starts a comment.
    ///
    /// Keys: `rho`, `beta` (required); `kind` (default `g`); `what` (default
    /// all four); `janowski` as `A:B` pairs (default `1:-1`); `tol`.
    pub fn parse(text: &str) -> Result<Self, Failure> {
        let mut spec = GridSpec {
            rho: Vec::new(),
            beta: Vec::new(),
            kinds: vec![NormalizedKind::G],
            what: RadiusKind::ALL.to_vec(),
            janowski: vec![JanowskiParams::new(1.0, -1.0)?],
            tol: DEFAULT_RADIUS_TOL,
        };
        let mut seen = false;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            seen = true;
            let (key, vals) = line
                .split_once('=')
                .ok_or_else(|| Failure::invalid(format!("line {}: expected key=value", lineno + 1)))?;
            let items: Vec<&str> = vals.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            if items.is_empty() {
                return Err(Failure::invalid(format!("line {}: empty list for '{}'", lineno + 1, key.trim())));
            }
            let reals = || -> Result<Vec<f64>, Failure> {
                items
                    .iter()
                    .map(|s| {
                        s.parse::<f64>()
                            .map_err(|_| Failure::invalid(format!("line {}: '{s}' is not a number", lineno + 1)))
                    })
                    .collect()
            };
            match key.trim() {
                "rho" => spec.rho = reals()?,
                "beta" => spec.beta = reals()?,
                "kind" => spec.kinds = items.iter().map(|s| s.parse()).collect::<Result<_, Error>>()?,
                "what" => spec.what = items.iter().map(|s| s.parse()).collect::<Result<_, Error>>()?,
                "janowski" => {
                    spec.janowski = items
                        .iter()
                        .map(|s| {
                            let (a, b) = s.split_once(':').ok_or_else(|| {
                                Failure::invalid(format!("line {}: janowski entries are A:B", lineno + 1))
                            })?;
                            let parse = |t: &str| {
                                t.trim().parse::<f64>().map_err(|_| {
                                    Failure::invalid(format!("line {}: '{t}' is not a number", lineno + 1))
                                })
                            };
                            Ok(JanowskiParams::new(parse(a)?, parse(b)?)?)
                        })
                        .collect::<Result<_, Failure>>()?
                }
                "tol" => {
                    let t = reals()?;
                    if t.len() != 1 || !(t[0] > 0.0) {
                        return Err(Failure::invalid(format!("line {}: tol takes one positive value", lineno + 1)));
                    }
                    spec.tol = t[0];
                }
                other => {
                    return Err(Failure::invalid(format!("line {}: unknown key '{other}'", lineno + 1)))
                }
            }
        }
        if !seen {
            return Err(Failure::invalid("grid file is empty"));
        }
        if spec.rho.is_empty() || spec.beta.is_empty() {
            return Err(Failure::invalid("grid file needs both rho and beta"));
        }
        for &rho in &spec.rho {
            for &beta in &spec.beta {
                WrightParams::new(rho, beta)?;
            }
        }
        Ok(spec)
    }

    /// Queries in output order: kind, rho, beta, radius kind, Janowski pair.
    pub fn queries(&self) -> Vec<RadiusQuery> {
        let mut out = Vec::new();
        for &kind in &self.kinds {
            for &rho in &self.rho {
                for &beta in &self.beta {
                    let p = WrightParams::new(rho, beta).expect("validated in parse");
                    for &rk in &self.what {
                        if rk.is_janowski() {
                            for &jp in &self.janowski {
                                out.push(RadiusQuery { kind, params: p, radius_kind: rk, janowski: Some(jp), scale: 1.0 });
                            }
                        } else {
                            out.push(RadiusQuery { kind, params: p, radius_kind: rk, janowski: None, scale: 1.0 });
                        }
                    }
                }
            }
        }
        out
    }
}

fn threads_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Failure::invalid(format!("{THREADS_ENV} must be a positive integer, got '{s}'"))),
        },
    }
}

pub fn cmd_sweep(
    spec: &GridSpec,
    check: bool,
    threads: Option<usize>,
    err: &mut dyn Write,
) -> Result<Vec<Record>, Failure> {
    let queries = spec.queries();
    let tol = spec.tol;
    let work = || -> Vec<Result<Record, Failure>> {
        queries
            .par_iter()
            .map(|q| {
                let c = radius_by_certification(q, tol)?;
                let mut row = query_columns(q);
                row.extend(result_columns(&c));
                if check {
                    match radius_real_axis(q, q.default_real_axis_target(), tol) {
                        Ok(r) => row.extend([("real_axis", r.radius.into()), ("delta", (r.radius - c.radius).into())]),
                        Err(_) => row.extend([("real_axis", Value::Empty), ("delta", Value::Empty)]),
                    }
                }
                Ok(row)
            })
            .collect()
    };
    let results = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Failure { code: 1, message: format!("thread pool: {e}") })?
            .install(work),
        None => work(),
    };
    let mut rows = Vec::with_capacity(results.len());
    for (q, r) in queries.iter().zip(results) {
        let row = r.map_err(|f| Failure { message: format!("{q}: {}", f.message), ..f })?;
        if check {
            if let Some((_, Value::Real(d))) = row.iter().find(|(k, _)| *k == "delta") {
                if d.abs() > AGREEMENT_TOL {
                    let _ = writeln!(err, "finding: {q}: real-axis minus certifier = {}", format_real(*d));
                }
            } else {
                let _ = writeln!(err, "finding: {q}: real-axis method failed");
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn percent_g_formatting() {
        assert_eq!(format_real(1.0), "1");
        assert_eq!(format_real(0.22389077914123567), "0.223890779141236");
        assert_eq!(format_real(1.5e-7), "1.5e-07");
        assert_eq!(format_real(-2.5e20), "-2.5e+20");
        assert_eq!(format_real(123456789012345.0), "123456789012345");
        assert_eq!(format_real(1234567890123456.0), "1.23456789012346e+15");
        assert_eq!(format_real(0.0001), "0.0001");
        assert_eq!(format_real(f64::NAN), "nan");
    }

    #[test]
    fn grid_parsing() {
        let g = GridSpec::parse("rho=0.5,1,2\nbeta = 0.5, 1,1.5,2 # comment\nkind=g\n").unwrap();
        assert_eq!(g.queries().len(), 48);
        let g = GridSpec::parse("rho=1\nbeta=1\nwhat=jan-star\njanowski=1:-1,1:0,0.5:-0.5").unwrap();
        assert_eq!(g.queries().len(), 3);
        assert_eq!(GridSpec::parse("").unwrap_err().code, 2);
        assert_eq!(GridSpec::parse("# only a comment\n").unwrap_err().code, 2);
        assert_eq!(GridSpec::parse("rho=1\n").unwrap_err().code, 2);
        assert_eq!(GridSpec::parse("rho=1\nbeta=1\ncolor=red").unwrap_err().code, 2);
        assert_eq!(GridSpec::parse("rho=-1\nbeta=1").unwrap_err().code, 2);
        assert_eq!(GridSpec::parse("rho=1\nbeta=1\njanowski=0:1").unwrap_err().code, 2);
    }
}
