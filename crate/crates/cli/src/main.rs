mod doc;
mod problem;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use logdiv::chow::{complete_symmetric, log_chern_class, twisted_top_chern};
use logdiv::milnor::{certify_curve_points, certify_points, curve_milnor_total, milnor_orlik_oracle, milnor_total};
use logdiv::poly::{fmt_rat, parse_rat, rat, to_integer};
use logdiv::theorems::{
    corollary_pn_report, euler_complement, verify_gauss_bonnet, verify_nsa, verify_poincare_hopf, CURVE_KEY,
};
use logdiv::{ErrorKind, ProblemSpec, Rat};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed problem file: {0}")]
    Format(String),
    #[error(transparent)]
    Core(#[from] logdiv::Error),
}

impl CliError {
    fn kind(&self) -> ErrorKind {
        match self {
            CliError::Io { .. } | CliError::Format(_) => ErrorKind::Input,
            CliError::Core(e) => e.kind(),
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Format(_) => "problem-file",
            CliError::Core(e) => e.code(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind() {
            ErrorKind::Input => "input",
            ErrorKind::Precondition => "precondition",
            ErrorKind::Internal => "internal",
        }
    }

    fn exit_code(&self) -> u8 {
        match self.kind() {
            ErrorKind::Input => 2,
            ErrorKind::Precondition => 3,
            ErrorKind::Internal => 4,
        }
    }
}

/// Exact Euler characteristics, Milnor numbers and index totals for
/// divisor complements in P^n.
#[derive(Debug, Parser)]
#[command(name = "logdiv", version)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Coordinate chart x_k = 1 for the global Milnor routes.
    #[arg(long, global = true, value_name = "K")]
    chart: Option<usize>,
    /// Add sign-convention probe lines to reports.
    #[arg(long, global = true)]
    probes: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Milnor total of a divisor (or of the curve `C`), with certified points.
    Milnor { file: PathBuf, divisor: String },
    /// Logarithmic Chern class of P^n along divisors of the given degrees.
    Chow {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
    },
    /// Euler characteristic of the complement by two routes.
    Euler { file: PathBuf },
    /// Check an identity and report every sign variant.
    Verify { file: PathBuf, formula: Formula },
    /// Closed-form reference values.
    #[command(subcommand)]
    Oracle(Oracle),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Formula {
    GaussBonnet,
    PoincareHopf,
    Nsa,
    CorollaryPn,
}

#[derive(Debug, Subcommand)]
enum Oracle {
    /// prod (d/w_i - 1) for a weighted homogeneous singularity.
    MilnorOrlik {
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        weights: Vec<String>,
        #[arg(long)]
        degree: String,
    },
    /// Complete homogeneous symmetric polynomial h_k(args).
    Sigma {
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Top Chern class of T P^n twisted by O(-d).
    TwistedTop {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
}

/// A document plus whether the command's check passed.
struct Outcome {
    doc: Value,
    pass: bool,
}

impl From<Value> for Outcome {
    fn from(doc: Value) -> Self {
        Outcome { doc, pass: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            emit(&out.doc, cli.json);
            ExitCode::from(if out.pass { 0 } else { 4 })
        }
        Err(e) => {
            if cli.json {
                emit(&doc::error(&e), true);
            } else {
                eprintln!("error[{}]: {e}", e.code());
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(v: &Value, json: bool) {
    let text = if json {
        serde_json::to_string_pretty(v).expect("documents serialize") + "\n"
    } else {
        doc::render_text(v)
    };
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let load = |file: &PathBuf| problem::load_spec(file, cli.chart, cli.probes);
    match &cli.command {
        Command::Milnor { file, divisor } => cmd_milnor(&load(file)?, divisor).map(Into::into),
        Command::Chow { n, degrees } => cmd_chow(*n, degrees).map(Into::into),
        Command::Euler { file } => {
            let (r, ing) = euler_complement(&load(file)?)?;
            Ok(doc::euler(&r, &ing).into())
        }
        Command::Verify { file, formula } => cmd_verify(&load(file)?, *formula),
        Command::Oracle(o) => cmd_oracle(o).map(Into::into),
    }
}

fn cmd_milnor(spec: &ProblemSpec, name: &str) -> Result<Value, CliError> {
    let requested = spec.options.requested_chart();
    let points = spec.singular_points.get(name);
    let (equation, degree, total, chart, report) = if name == CURVE_KEY {
        let dec = spec
            .decomposition()?
            .ok_or_else(|| logdiv::Error::MissingData("decomposition".into()))?;
        let (f1, f2) = (dec.d1.equation(), dec.d2.equation());
        let equation = format!("{} = {} = 0", f1.poly(), f2.poly());
        let degree = format!("({}, {})", dec.d1.degree(), dec.d2.degree());
        match points {
            Some(p) => {
                let r = certify_curve_points(f1, f2, p, requested.as_ref())?;
                (equation, degree, r.total, r.chart.clone(), Some(r))
            }
            None => {
                let (t, c) = curve_milnor_total(f1, f2, requested.as_ref())?;
                (equation, degree, t, c, None)
            }
        }
    } else {
        let d = spec.divisor(name)?;
        let f = d.equation();
        let equation = f.poly().to_string();
        let degree = d.degree().to_string();
        match points {
            Some(p) => {
                let r = certify_points(f, p, requested.as_ref())?;
                (equation, degree, r.total, r.chart.clone(), Some(r))
            }
            None => {
                let (t, c) = milnor_total(f, requested.as_ref())?;
                (equation, degree, t, c, None)
            }
        }
    };
    let label = format!("{} = 1", chart.label(&spec.vars));
    let mut out = json!({
        "command": "milnor",
        "divisor": name,
        "equation": equation,
        "degree": degree,
        "total": doc::int(total),
        "route": if name == CURVE_KEY { "global Lê-Greuel length" } else { "generalized kernel of f on Q[x]/J(f)" },
        "chart": label,
    });
    let obj = out.as_object_mut().expect("object");
    match &report {
        Some(r) => {
            obj.insert("certified_complete".into(), Value::Bool(r.certified_complete));
            obj.insert("per_point_total".into(), doc::int(r.per_point_total()));
            let pts: Vec<Value> = r
                .per_point
                .iter()
                .map(|c| {
                    json!({
                        "point": doc::point(&c.point),
                        "local_milnor": doc::int(c.local_milnor),
                        "chart": format!("{} = 1", spec.vars.names()[c.chart]),
                    })
                })
                .collect();
            obj.insert("per_point".into(), Value::Array(pts));
        }
        None => {
            obj.insert("certified_complete".into(), Value::Null);
        }
    }
    Ok(out)
}

fn big(r: &Rat) -> Result<Value, CliError> {
    Ok(doc::int(to_integer(r, "coefficient")?))
}

fn cmd_chow(n: usize, degrees: &[u32]) -> Result<Value, CliError> {
    let class = log_chern_class(n, degrees)?;
    let coeffs = class.integer_coeffs("c(Omega^1(log D))")?;
    let top = class.integrate();
    let mut out = json!({
        "command": "chow",
        "n": doc::int(n),
        "degrees": degrees.iter().map(doc::int).collect::<Vec<_>>(),
        "log_chern_class": coeffs.iter().map(doc::int).collect::<Vec<_>>(),
        "top_coefficient": big(&top)?,
    });
    let obj = out.as_object_mut().expect("object");
    let mut notes = Vec::new();
    let sign = if n.is_multiple_of(2) { rat(1) } else { rat(-1) };
    match degrees {
        [d] => {
            let tt = twisted_top_chern(n, i64::from(*d))?;
            obj.insert("twisted_top".into(), big(&tt)?);
            obj.insert("signed_twisted_top".into(), big(&(&sign * &tt))?);
            if tt != top {
                notes.push(format!(
                    "top coefficient {} equals (-1)^n * sum (1-d)^i; the unsigned sum is {}",
                    fmt_rat(&top),
                    fmt_rat(&tt)
                ));
            }
        }
        [d1, d2] => {
            let args = [rat(i64::from(*d1) - 1), rat(i64::from(*d2) - 1)];
            let sigma_n = complete_symmetric(n, &args);
            let printed: Rat = (0..=n).map(|i| complete_symmetric(n - i, &args)).sum::<Rat>() * &sign;
            obj.insert("sigma_n".into(), big(&sigma_n)?);
            obj.insert("printed_sigma_sum".into(), big(&printed)?);
            obj.insert("printed_sigma_sum_matches".into(), Value::Bool(printed == top));
            if printed != top {
                notes.push(format!(
                    "(-1)^n sum_i sigma_(n-i)(d1-1, d2-1) = {} differs from the top coefficient {}",
                    fmt_rat(&printed),
                    fmt_rat(&top)
                ));
            }
        }
        _ => unreachable!("log_chern_class accepts one or two degrees"),
    }
    obj.insert("notes".into(), json!(notes));
    Ok(out)
}

fn cmd_verify(spec: &ProblemSpec, formula: Formula) -> Result<Outcome, CliError> {
    let report = match formula {
        Formula::GaussBonnet => verify_gauss_bonnet(spec)?,
        Formula::PoincareHopf => verify_poincare_hopf(spec)?,
        Formula::CorollaryPn => corollary_pn_report(spec)?,
        Formula::Nsa => verify_nsa(spec)?,
    };
    Ok(Outcome {
        pass: report.passes(),
        doc: doc::verification(&report),
    })
}

fn rationals(items: &[String]) -> Result<Vec<Rat>, CliError> {
    Ok(items.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>, _>>()?)
}

fn cmd_oracle(o: &Oracle) -> Result<Value, CliError> {
    Ok(match o {
        Oracle::MilnorOrlik { weights, degree } => {
            let w = rationals(weights)?;
            let d = parse_rat(degree)?;
            json!({
                "command": "oracle",
                "oracle": "milnor-orlik",
                "weights": w.iter().map(doc::rat).collect::<Vec<_>>(),
                "degree": doc::rat(&d),
                "value": doc::rat(&milnor_orlik_oracle(&w, &d)?),
            })
        }
        Oracle::Sigma { k, args } => {
            let a = rationals(args)?;
            json!({
                "command": "oracle",
                "oracle": "sigma",
                "k": doc::int(k),
                "args": a.iter().map(doc::rat).collect::<Vec<_>>(),
                "value": doc::rat(&complete_symmetric(*k, &a)),
            })
        }
        Oracle::TwistedTop { n, d } => json!({
            "command": "oracle",
            "oracle": "twisted-top",
            "n": doc::int(n),
            "d": doc::int(d),
            "value": doc::rat(&twisted_top_chern(*n, *d)?),
        }),
    })
}
