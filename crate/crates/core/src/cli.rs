//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches a subcommand and returns the exit
//! code with the rendered document, so the binary stays a thin shell and
//! the whole interface is testable in-process.

use std::f64::consts::PI;
use std::fs;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Number, Value};

use crate::causal::{classify, lambda3, point_b};
use crate::connection::sectional_curvature_numeric;
use crate::error::Error;
use crate::geodesics::{domain_bounds, Geodesic};
use crate::group::GroupPoint;
use crate::isometry::{embed_flat, half_plane_margin, killing_basis, killing_residual};
use crate::plot::{render, Layer};
use crate::problem::{make_problem, CurvatureSign, Preset, Problem};
use crate::synthesis::{distance, exp_inverse, sphere, LorentzDistance};
use crate::verify::run_checks;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "aff-lorentz",
    version,
    about = "Lorentzian geometry of left-invariant structures on the affine group of the line"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Model structure: P1 (K = -1), P2 (K = +1) or P3 (K = 0).
    #[arg(long, conflicts_with = "matrix")]
    preset: Option<Preset>,
    /// Matrix rows a,b,c,d with ad - bc > 0.
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the document to this file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Curvature and derived constants, with the connection-based check.
    Curvature {
        #[command(flatten)]
        common: Common,
    },
    /// Causal stratum of a point relative to the identity.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Point x,y.
        #[arg(long, alias = "to", allow_hyphen_values = true)]
        point: String,
    },
    /// Lorentzian distance between two points.
    Distance {
        #[command(flatten)]
        common: Common,
        /// Start point x,y (default: the identity 0,1).
        #[arg(long, allow_hyphen_values = true)]
        from: Option<String>,
        /// End point x,y.
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Sample a timelike geodesic from the identity.
    Geodesic {
        #[command(flatten)]
        common: Common,
        /// Follow the maximizing geodesic to this interior point x,y.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "psi0")]
        to: Option<String>,
        /// Initial angle of the geodesic.
        #[arg(long, allow_hyphen_values = true, requires = "tmax")]
        psi0: Option<f64>,
        /// Final time; clamped to 0.999 of the domain end.
        #[arg(long, allow_hyphen_values = true)]
        tmax: Option<f64>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Sample the sphere of a given radius around the identity.
    Sphere {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        radius: f64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Killing fields at a point with their numerical residuals.
    Killing {
        #[command(flatten)]
        common: Common,
        /// Point x,y.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Image of a point under the Minkowski embedding (flat structures).
    Embed {
        #[command(flatten)]
        common: Common,
        /// Point x,y.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Run the oracle suite and print a pass/fail table.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Larger samples and brute-force checks.
        #[arg(long)]
        full: bool,
    },
}

/// Exit code plus rendered output of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    /// Document for stdout (empty when written to `--out`).
    pub stdout: String,
    /// Diagnostics for stderr, without trailing newline.
    pub stderr: String,
}

impl Outcome {
    fn ok(doc: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout: doc,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type CmdResult = std::result::Result<(String, i32), Failure>;

/// Formats a number with 17 significant digits, trailing zeros trimmed.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    let sign = if negative { "-" } else { "" };
    if (-6..17).contains(&exp) {
        let point = exp + 1;
        let body = if point <= 0 {
            format!("0.{}{}", "0".repeat((-point) as usize), digits)
        } else if point as usize >= digits.len() {
            format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
        } else {
            format!("{}.{}", &digits[..point as usize], &digits[point as usize..])
        };
        format!("{sign}{body}")
    } else {
        let rest = &digits[1..];
        if rest.is_empty() {
            format!("{sign}{}e{exp}", &digits[..1])
        } else {
            format!("{sign}{}.{}e{exp}", &digits[..1], rest)
        }
    }
}

/// JSON value of a real number; non-finite values become strings.
pub fn num(v: f64) -> Value {
    if v.is_nan() {
        Value::String("nan".into())
    } else if v == f64::INFINITY {
        Value::String("inf".into())
    } else if v == f64::NEG_INFINITY {
        Value::String("-inf".into())
    } else {
        Value::Number(Number::from_str(&format_number(v)).expect("valid JSON number"))
    }
}

fn dist_value(d: &LorentzDistance) -> Value {
    num(d.value())
}

fn csv_cell(v: f64) -> String {
    if v.is_finite() {
        format_number(v)
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// Parses `x,y`: two decimal literals, finite, with `y > 0`.
pub fn parse_point(s: &str) -> std::result::Result<GroupPoint, String> {
    let v = parse_reals(s, 2)?;
    GroupPoint::new(v[0], v[1]).map_err(|e| format!("invalid point '{s}': {e}"))
}

fn parse_reals(s: &str, n: usize) -> std::result::Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != n {
        return Err(format!("expected {n} comma-separated numbers, got '{s}'"));
    }
    parts
        .iter()
        .map(|p| {
            let decimal = !p.is_empty()
                && p.chars().all(|c| c.is_ascii_digit() || matches!(c, '+' | '-' | '.' | 'e' | 'E'));
            match p.parse::<f64>() {
                Ok(v) if decimal && v.is_finite() => Ok(v),
                _ => Err(format!("'{p}' is not a finite decimal number")),
            }
        })
        .collect()
}

fn problem_of(common: &Common) -> std::result::Result<Problem, Failure> {
    match (&common.preset, &common.matrix) {
        (Some(p), _) => Ok(p.problem()),
        (None, Some(m)) => {
            let v = parse_reals(m, 4).map_err(|e| Failure::Usage(format!("--matrix: {e}")))?;
            Ok(make_problem(v[0], v[1], v[2], v[3])?)
        }
        (None, None) => Err(Failure::Usage("one of --preset or --matrix is required".into())),
    }
}

fn point_arg(flag: &str, s: &str) -> std::result::Result<GroupPoint, Failure> {
    parse_point(s).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn json_doc(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn csv_doc(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// Renders a flat JSON object as a one-row CSV table.
fn object_csv(obj: &Map<String, Value>) -> String {
    let header: Vec<&str> = obj.keys().map(String::as_str).collect();
    let row: Vec<String> = obj
        .values()
        .map(|v| match v {
            Value::String(s) => s.clone(),
            Value::Null => String::new(),
            other => other.to_string(),
        })
        .collect();
    csv_doc(&header, &[row])
}

fn scalar_doc(format: Option<Format>, v: Value) -> std::result::Result<String, Failure> {
    match format.unwrap_or(Format::Json) {
        Format::Json => Ok(json_doc(v)),
        Format::Csv => match &v {
            Value::Object(o) => Ok(object_csv(&flatten(o))),
            _ => Ok(json_doc(v)),
        },
        Format::Svg => Err(Failure::Usage("--format svg is only available for geodesic and sphere".into())),
    }
}

/// Nested objects and arrays become `key.sub` / `key.0` columns.
fn flatten(o: &Map<String, Value>) -> Map<String, Value> {
    fn go(prefix: &str, v: &Value, out: &mut Map<String, Value>) {
        match v {
            Value::Object(o) => {
                for (k, v) in o {
                    go(&format!("{prefix}{k}."), v, out);
                }
            }
            Value::Array(a) => {
                for (i, v) in a.iter().enumerate() {
                    go(&format!("{prefix}{i}."), v, out);
                }
            }
            other => {
                out.insert(prefix.trim_end_matches('.').to_string(), other.clone());
            }
        }
    }
    let mut out = Map::new();
    go("", &Value::Object(o.clone()), &mut out);
    out
}

fn problem_header(spec: &Problem) -> Value {
    let m = spec.matrix();
    json!({
        "matrix": [num(m.a), num(m.b), num(m.c), num(m.d)],
        "timeReversed": spec.time_reversed(),
    })
}

fn cmd_curvature(spec: &Problem, format: Option<Format>) -> CmdResult {
    let numeric = sectional_curvature_numeric(spec);
    let mut constants = Map::new();
    for (k, v) in [("alpha", spec.alpha), ("beta", spec.beta), ("gamma", spec.gamma), ("delta", spec.delta)] {
        constants.insert(k.into(), num(v));
    }
    match spec.sign {
        CurvatureSign::Zero => {
            constants.insert("s1".into(), num(spec.s1));
            constants.insert("f".into(), num(spec.f));
            constants.insert("g".into(), num(spec.g));
        }
        sign => {
            constants.insert("Delta".into(), num(spec.cap_delta));
            constants.insert("theta".into(), num(spec.theta));
            constants.insert("lambda".into(), num(spec.lambda));
            constants.insert("nu".into(), num(spec.nu));
            if sign == CurvatureSign::Pos {
                constants.insert("s1".into(), num(spec.s1));
            }
        }
    }
    let v = json!({
        "K": num(spec.curvature),
        "sign": spec.sign.name(),
        "numericK": num(numeric),
        "residual": num((numeric - spec.curvature).abs()),
        "problem": problem_header(spec),
        "constants": constants,
    });
    Ok((scalar_doc(format, v)?, EXIT_OK))
}

fn cmd_classify(spec: &Problem, q: &GroupPoint, format: Option<Format>) -> CmdResult {
    let class = classify(spec, q);
    let mut o = Map::new();
    o.insert("point".into(), json!([num(q.x()), num(q.y())]));
    o.insert("stratum".into(), Value::String(class.name().into()));
    o.insert(
        "branch".into(),
        class.branch().map_or(Value::Null, |b| Value::String(format!("{b:?}"))),
    );
    o.insert("lambda1".into(), num(spec.lambda1(q)));
    o.insert("lambda2".into(), num(spec.lambda2(q)));
    if spec.sign == CurvatureSign::Neg {
        o.insert("lambda3".into(), num(lambda3(spec, q)?));
    }
    if let Ok((bx, by)) = point_b(spec) {
        o.insert("B".into(), json!([num(bx), num(by)]));
    }
    Ok((scalar_doc(format, Value::Object(o))?, EXIT_OK))
}

fn cmd_distance(spec: &Problem, q0: &GroupPoint, q1: &GroupPoint, format: Option<Format>) -> CmdResult {
    let r = distance(spec, q0, q1);
    let (psi0, t1) = match r.preimage {
        Some((p, t)) => (num(p), num(t)),
        None => (Value::Null, Value::Null),
    };
    let v = json!({
        "distance": dist_value(&r.distance),
        "stratum": r.class.name(),
        "maximizerExists": r.maximizer_exists,
        "psi0": psi0,
        "t1": t1,
    });
    Ok((scalar_doc(format, v)?, EXIT_OK))
}

fn sample_times(t_end: f64, n: usize) -> Vec<f64> {
    let n = n.max(2);
    (0..n).map(|k| t_end * k as f64 / (n - 1) as f64).collect()
}

fn cmd_geodesic(
    spec: &Problem,
    to: Option<GroupPoint>,
    psi0: Option<f64>,
    tmax: Option<f64>,
    samples: usize,
    format: Option<Format>,
) -> CmdResult {
    let (psi0, t_end) = match (to, psi0) {
        (Some(q), _) => exp_inverse(spec, &q)?,
        (None, Some(p)) => {
            if !p.is_finite() {
                return Err(Failure::Usage("--psi0 must be finite".into()));
            }
            let t = tmax.ok_or_else(|| Failure::Usage("--psi0 needs --tmax".into()))?;
            if t.is_nan() || t <= 0.0 {
                return Err(Failure::Usage("--tmax must be positive".into()));
            }
            let (_, hi) = domain_bounds(spec, p);
            (p, t.min(0.999 * hi))
        }
        (None, None) => return Err(Failure::Usage("geodesic needs --to or --psi0/--tmax".into())),
    };
    let geo = Geodesic::timelike(spec, psi0);
    let mut rows = Vec::new();
    let mut points = Vec::new();
    for t in sample_times(t_end, samples) {
        let (q, psi) = if t == 0.0 {
            (GroupPoint::IDENTITY, geo.psi(0.0)?)
        } else {
            geo.state(t)?
        };
        rows.push((t, q, psi.unwrap_or(f64::NAN)));
        points.push(q);
    }
    let doc = match format.unwrap_or(Format::Csv) {
        Format::Csv => csv_doc(
            &["t", "x", "y", "psi"],
            &rows
                .iter()
                .map(|(t, q, p)| vec![csv_cell(*t), csv_cell(q.x()), csv_cell(q.y()), csv_cell(*p)])
                .collect::<Vec<_>>(),
        ),
        Format::Json => json_doc(json!({
            "psi0": num(psi0),
            "tMin": num(geo.t_min()),
            "tMax": num(geo.t_max()),
            "samples": rows.iter().map(|(t, q, p)| json!({
                "t": num(*t), "x": num(q.x()), "y": num(q.y()), "psi": num(*p)
            })).collect::<Vec<_>>(),
        })),
        Format::Svg => render(
            spec,
            &format!("geodesic psi0 = {}", format_number(psi0)),
            &[Layer::Polyline {
                points: &points,
                color: "#d2691e",
            }],
        ),
    };
    Ok((doc, EXIT_OK))
}

fn cmd_sphere(spec: &Problem, radius: f64, samples: usize, format: Option<Format>) -> CmdResult {
    if samples == 0 {
        return Err(Failure::Usage("--samples must be positive".into()));
    }
    let arc = sphere(spec, radius, samples)?;
    let doc = match format.unwrap_or(Format::Csv) {
        Format::Csv => csv_doc(
            &["param", "x", "y"],
            &arc.params
                .iter()
                .zip(&arc.points)
                .map(|(p, q)| vec![csv_cell(*p), csv_cell(q.x()), csv_cell(q.y())])
                .collect::<Vec<_>>(),
        ),
        Format::Json => json_doc(json!({
            "radius": num(radius),
            "shape": arc.shape.name(),
            "maxResidual": num(arc.max_residual(spec)),
            "samples": arc.params.iter().zip(&arc.points).map(|(p, q)| json!({
                "param": num(*p), "x": num(q.x()), "y": num(q.y())
            })).collect::<Vec<_>>(),
        })),
        Format::Svg => render(
            spec,
            &format!("sphere R = {}", format_number(radius)),
            &[Layer::Polyline {
                points: &arc.points,
                color: "#2e8b57",
            }],
        ),
    };
    Ok((doc, EXIT_OK))
}

fn cmd_killing(spec: &Problem, q: &GroupPoint, format: Option<Format>) -> CmdResult {
    let fields: Vec<Value> = killing_basis(spec)
        .iter()
        .map(|f| {
            let (u, v) = f.at(q);
            json!({
                "kind": f.kind.name(),
                "value": [num(u), num(v)],
                "residual": num(killing_residual(spec, f, q)),
                "complete": f.is_complete(),
            })
        })
        .collect();
    let v = json!({ "point": [num(q.x()), num(q.y())], "fields": fields });
    Ok((scalar_doc(format, v)?, EXIT_OK))
}

fn cmd_embed(spec: &Problem, q: &GroupPoint, format: Option<Format>) -> CmdResult {
    let e = embed_flat(spec, q)?;
    let v = json!({
        "point": [num(q.x()), num(q.y())],
        "image": [num(e.xt), num(e.yt)],
        "margin": num(half_plane_margin(spec, &e)),
    });
    Ok((scalar_doc(format, v)?, EXIT_OK))
}

fn cmd_verify(spec: &Problem, full: bool, format: Option<Format>) -> CmdResult {
    let checks = run_checks(spec, full);
    let code = if checks.iter().all(|c| c.passed) { EXIT_OK } else { EXIT_VERIFY };
    let doc = match format {
        None => {
            let mut s = format!("{:<42} {:>7} {:>12} {:>10}  result\n", "check", "samples", "residual", "tolerance");
            for c in &checks {
                s.push_str(&format!(
                    "{:<42} {:>7} {:>12.3e} {:>10.0e}  {}\n",
                    c.name,
                    c.samples,
                    c.residual,
                    c.tolerance,
                    if c.passed { "PASS" } else { "FAIL" }
                ));
            }
            s
        }
        Some(Format::Json) => json_doc(json!({
            "passed": code == EXIT_OK,
            "checks": checks.iter().map(|c| json!({
                "name": c.name, "samples": c.samples, "residual": num(c.residual),
                "tolerance": num(c.tolerance), "passed": c.passed
            })).collect::<Vec<_>>(),
        })),
        Some(Format::Csv) => csv_doc(
            &["check", "samples", "residual", "tolerance", "passed"],
            &checks
                .iter()
                .map(|c| {
                    vec![
                        c.name.to_string(),
                        c.samples.to_string(),
                        csv_cell(c.residual),
                        csv_cell(c.tolerance),
                        c.passed.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        Some(Format::Svg) => return Err(Failure::Usage("--format svg is only available for geodesic and sphere".into())),
    };
    Ok((doc, code))
}

fn dispatch(cmd: Command) -> (Option<std::path::PathBuf>, std::result::Result<(String, i32), Failure>) {
    macro_rules! with_problem {
        ($common:expr, |$spec:ident| $body:expr) => {{
            let out = $common.out.clone();
            let r = (|| -> CmdResult {
                let $spec = problem_of(&$common)?;
                $body
            })();
            (out, r)
        }};
    }
    match cmd {
        Command::Curvature { common } => with_problem!(common, |spec| cmd_curvature(&spec, common.format)),
        Command::Classify { common, point } => with_problem!(common, |spec| {
            let q = point_arg("point", &point)?;
            cmd_classify(&spec, &q, common.format)
        }),
        Command::Distance { common, from, to } => with_problem!(common, |spec| {
            let q0 = match &from {
                Some(s) => point_arg("from", s)?,
                None => GroupPoint::IDENTITY,
            };
            let q1 = point_arg("to", &to)?;
            cmd_distance(&spec, &q0, &q1, common.format)
        }),
        Command::Geodesic { common, to, psi0, tmax, samples } => with_problem!(common, |spec| {
            let to = match &to {
                Some(s) => Some(point_arg("to", s)?),
                None => None,
            };
            cmd_geodesic(&spec, to, psi0, tmax, samples, common.format)
        }),
        Command::Sphere { common, radius, samples } => {
            with_problem!(common, |spec| cmd_sphere(&spec, radius, samples, common.format))
        }
        Command::Killing { common, at } => with_problem!(common, |spec| {
            let q = point_arg("at", &at)?;
            cmd_killing(&spec, &q, common.format)
        }),
        Command::Embed { common, point } => with_problem!(common, |spec| {
            let q = point_arg("point", &point)?;
            cmd_embed(&spec, &q, common.format)
        }),
        Command::Verify { common, full } => with_problem!(common, |spec| cmd_verify(&spec, full, common.format)),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, text.trim_end().to_string())
            };
        }
    };
    let (out, result) = dispatch(cli.command);
    match result {
        Ok((doc, code)) => {
            if let Some(path) = out {
                if let Err(e) = fs::write(&path, &doc) {
                    return Outcome::fail(EXIT_USAGE, format!("error: cannot write {}: {e}", path.display()));
                }
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: doc,
                    stderr: String::new(),
                }
            }
        }
        Err(Failure::Usage(msg)) => Outcome::fail(EXIT_USAGE, format!("error: {msg}")),
        Err(Failure::Domain(e)) => Outcome::fail(EXIT_DOMAIN, format!("error: {}: {e}", e.name())),
    }
}

/// Whether diagnostics may be colored: stderr is a terminal and `NO_COLOR`
/// is unset or empty.
pub fn color_enabled(no_color: Option<&str>, is_terminal: bool) -> bool {
    is_terminal && no_color.is_none_or(str::is_empty)
}

/// Wraps the leading `error:` of a diagnostic in red.
pub fn paint(msg: &str, color: bool) -> String {
    match (color, msg.strip_prefix("error:")) {
        (true, Some(rest)) => format!("\x1b[31merror:\x1b[0m{rest}"),
        _ => msg.to_string(),
    }
}

/// Largest radius with a nonempty sphere; `+∞` unless the curvature is negative.
pub fn sphere_radius_limit(spec: &Problem) -> f64 {
    if spec.sign == CurvatureSign::Neg {
        PI / spec.cap_delta
    } else {
        f64::INFINITY
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(-1.0), "-1");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(PI / 4.0), "0.78539816339744828");
        assert_eq!(format_number(0.5), "0.5");
        assert_eq!(format_number(1234.5), "1234.5");
        assert_eq!(format_number(1e-9), "1.0000000000000001e-9");
        assert_eq!(format_number(1e-10), "1e-10");
        assert_eq!(format_number(2.5e20), "2.5e20");
        assert_eq!(format_number(-0.001), "-0.001");
        for v in [PI, -1e-7, 123456.789, 1e300, 2f64.sqrt()] {
            assert_eq!(format_number(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn point_parsing() {
        assert_eq!(parse_point("1,2").unwrap(), GroupPoint::from_coords(1.0, 2.0));
        assert_eq!(parse_point(" -3.5 , 1e-2 ").unwrap(), GroupPoint::from_coords(-3.5, 0.01));
        for bad in ["1", "1,2,3", "inf,1", "1,nan", "1,-2", "pi,1", "1,0", "0x1,2", ""] {
            assert!(parse_point(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn non_finite_json() {
        assert_eq!(num(f64::INFINITY), Value::String("inf".into()));
        assert_eq!(num(0.0).to_string(), "0");
    }

    #[test]
    fn color_policy() {
        assert!(color_enabled(None, true));
        assert!(color_enabled(Some(""), true));
        assert!(!color_enabled(Some("1"), true));
        assert!(!color_enabled(None, false));
        assert_eq!(paint("error: x", false), "error: x");
        assert!(paint("error: x", true).contains("\x1b[31m"));
    }
}
