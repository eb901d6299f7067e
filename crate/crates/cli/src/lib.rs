//! Batch front end for the `umbral` library.
//!
//! Every subcommand reads an optional JSON equation spec (see [`schema`]),
//! computes a table or report, and renders it as CSV or JSON. Data output is
//! deterministic except for `bench`, whose timings are report-only.

pub mod schema;
pub mod table;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Map, Value};
use thiserror::Error;
use umbral::corpus::{run_all_to, CaseReport};
use umbral::galois::{FundamentalReport, Generator, PairPart, Sequence, FLOAT_RESIDUAL_TOL};
use umbral::rational::to_f64;
use umbral::star::float::star_power_f64;
use umbral::{
    format_rational, fourier_step, lin_residuals, lin_step, linear_recurrence_row, nonlin_residuals,
    nonlin_step, nonlinear_recurrence_row, parse_rational, taylor_to_lattice, verify_fundamental,
    LatticeSeq, LinearOde, NonlinearOde, Rational, Root, StarPath, TaylorCoeffs, WronskianValue,
};

pub use schema::{parse_spec, serialize_spec, Equation, SchemaError};
pub use table::{fmt_f64, Table};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Exact rationals printed as "p/q".
    #[default]
    Exact,
    /// Floats printed with 17 significant digits.
    Float,
}

#[derive(Debug, Parser)]
#[command(name = "umbral", version, about = "Exact lattice discretization of polynomial ODEs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = Mode::Exact, global = true)]
    pub mode: Mode,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the explicit lattice recurrence, one coefficient per row.
    Discretize {
        #[arg(long)]
        input: PathBuf,
        /// Last row index.
        #[arg(long, default_value_t = 5)]
        length: usize,
    },
    /// Evaluate lattice residuals of a candidate solution.
    Residual {
        #[arg(long)]
        input: PathBuf,
        /// Last lattice index L.
        #[arg(long, default_value_t = 20)]
        length: usize,
        /// Taylor coefficients b_0,b_1,... (zero-padded to L+1).
        #[arg(long, conflicts_with = "lattice", required_unless_present = "lattice")]
        taylor: Option<String>,
        /// Lattice values z_0,z_1,... used as given.
        #[arg(long)]
        lattice: Option<String>,
    },
    /// Step the lattice equation forward from initial values.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 10)]
        length: usize,
        /// z_0,...,z_{N-1}.
        #[arg(long)]
        init: String,
    },
    /// Run the coefficient dynamics of a constant-coefficient nonlinear equation.
    Fourier {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 10)]
        length: usize,
        /// ζ_0,...,ζ_{m-1}.
        #[arg(long)]
        init: String,
    },
    /// Roots, mapped fundamental system and modified Wronskian.
    Galois {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 20)]
        length: usize,
        /// Accept numerically computed roots in exact mode.
        #[arg(long)]
        allow_float_roots: bool,
    },
    /// Verify every built-in example equation.
    Corpus {
        /// Largest residual index checked.
        #[arg(long, default_value_t = umbral::corpus::DEFAULT_RANGE)]
        length: usize,
    },
    /// Time the two float star-power paths.
    Bench {
        #[arg(long, default_value_t = 512)]
        length: usize,
        #[arg(long, default_value_t = 3)]
        power: usize,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid --{flag}: {message}")]
    Usage { flag: &'static str, message: String },
    #[error(transparent)]
    Core(#[from] umbral::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

/// Rendered output and whether everything it checked held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub verified: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.verified {
            0
        } else {
            1
        }
    }
}

fn usage(flag: &'static str, message: impl Into<String>) -> CliError {
    CliError::Usage {
        flag,
        message: message.into(),
    }
}

fn read_spec(path: &Path) -> Result<Equation, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_spec(&text)?)
}

fn parse_list(flag: &'static str, s: &str) -> Result<Vec<Rational>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| parse_rational(t).map_err(|e| usage(flag, e.to_string())))
        .collect()
}

fn cell(mode: Mode, r: &Rational) -> String {
    match mode {
        Mode::Exact => format_rational(r),
        Mode::Float => fmt_f64(to_f64(r)),
    }
}

fn render_table(t: &Table, format: Format) -> String {
    match format {
        Format::Csv => t.to_csv(),
        Format::Json => pretty(&t.to_json()),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Linear view of an equation, when it has one.
fn as_linear(eq: &Equation) -> Option<LinearOde> {
    match eq {
        Equation::Linear(e) => Some(e.clone()),
        Equation::ConstLinear(e) => Some(e.to_linear_ode()),
        _ => None,
    }
}

fn as_nonlinear(eq: &Equation) -> Option<NonlinearOde> {
    match eq {
        Equation::Nonlinear(e) => Some(e.clone()),
        Equation::ConstNonlinear(e) => Some(e.to_nonlinear()),
        _ => None,
    }
}

fn seq_table(name: &str, values: &[Rational], mode: Mode) -> Table {
    let mut t = Table::new(["n", name]);
    for (n, v) in values.iter().enumerate() {
        t.push([n.to_string(), cell(mode, v)]);
    }
    t
}

/// Runs one parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let (mode, format) = (cli.mode, cli.format);
    match &cli.command {
        Command::Discretize { input, length } => {
            let eq = read_spec(input)?;
            let mut t = Table::new(["n", "term", "coefficient"]);
            if let Some(lin) = as_linear(&eq) {
                for n in 0..=*length {
                    let row = linear_recurrence_row(&lin, n);
                    for (j, w) in row.weights.iter().enumerate() {
                        if !w.is_zero() {
                            t.push([n.to_string(), format!("z_{j}"), cell(mode, w)]);
                        }
                    }
                    if !row.constant.is_zero() {
                        t.push([n.to_string(), "1".into(), cell(mode, &row.constant)]);
                    }
                }
            } else if let Some(nl) = as_nonlinear(&eq) {
                for n in 0..=*length {
                    let row = nonlinear_recurrence_row(&nl, n);
                    for (key, c) in &row.terms {
                        let term = if key.is_empty() {
                            "1".to_string()
                        } else {
                            key.iter().map(|k| format!("z_{k}")).collect::<Vec<_>>().join("*")
                        };
                        t.push([n.to_string(), term, cell(mode, c)]);
                    }
                }
            }
            Ok(Outcome {
                text: render_table(&t, format),
                verified: true,
            })
        }
        Command::Residual {
            input,
            length,
            taylor,
            lattice,
        } => {
            let eq = read_spec(input)?;
            let z = match (taylor, lattice) {
                (Some(b), _) => {
                    let b = TaylorCoeffs::new(parse_list("taylor", b)?);
                    let len = (*length + 1).max(b.len());
                    taylor_to_lattice(&b.zero_padded(len), *length)?
                }
                (None, Some(z)) => LatticeSeq::new(parse_list("lattice", z)?),
                (None, None) => return Err(usage("taylor", "give --taylor or --lattice")),
            };
            let residuals = if let Some(lin) = as_linear(&eq) {
                lin_residuals(&lin, &z)?
            } else {
                let nl = as_nonlinear(&eq).expect("every equation is linear or nonlinear");
                nonlin_residuals(&nl, &z)?
            };
            let verified = residuals.iter().all(Zero::is_zero);
            Ok(Outcome {
                text: render_table(&seq_table("residual", &residuals, mode), format),
                verified,
            })
        }
        Command::Solve { input, length, init } => {
            let eq = read_spec(input)?;
            let init = parse_list("init", init)?;
            let z = if let Some(lin) = as_linear(&eq) {
                lin_step(&lin, &init, *length)?
            } else {
                let nl = as_nonlinear(&eq).expect("every equation is linear or nonlinear");
                nonlin_step(&nl, &init, *length)?
            };
            Ok(Outcome {
                text: render_table(&seq_table("z_n", z.as_slice(), mode), format),
                verified: true,
            })
        }
        Command::Fourier { input, length, init } => {
            let eq = match read_spec(input)? {
                Equation::ConstNonlinear(e) => e,
                Equation::Nonlinear(e) => constant_nonlinear(&e)
                    .ok_or_else(|| usage("input", "coefficient dynamics need constant coefficients"))?,
                _ => return Err(usage("input", "expected a nonlinear equation")),
            };
            let zeta = fourier_step(&eq, &parse_list("init", init)?, *length)?;
            Ok(Outcome {
                text: render_table(&seq_table("zeta_n", zeta.as_slice(), mode), format),
                verified: true,
            })
        }
        Command::Galois {
            input,
            length,
            allow_float_roots,
        } => {
            let Equation::ConstLinear(eq) = read_spec(input)? else {
                return Err(usage("input", "expected a const_linear equation"));
            };
            let report = verify_fundamental(&eq, *length)?;
            if mode == Mode::Exact && !report.is_exact() && !allow_float_roots {
                return Err(usage(
                    "mode",
                    "characteristic polynomial needs numerical roots; pass --allow-float-roots or --mode float",
                ));
            }
            Ok(Outcome {
                text: render_galois(&report, *length, mode, format),
                verified: report.passed(),
            })
        }
        Command::Corpus { length } => {
            let reports = run_all_to(*length)?;
            Ok(Outcome {
                verified: reports.iter().all(CaseReport::passed),
                text: render_corpus(&reports, mode, format),
            })
        }
        Command::Bench {
            length,
            power,
            repeats,
        } => {
            if *power == 0 {
                return Err(usage("power", "must be ≥ 1"));
            }
            let z: Vec<f64> = (0..=*length).map(|n| 1.0 / (n as f64 + 1.0)).collect();
            let mut t = Table::new(["path", "power", "length", "seconds"]);
            for (name, path) in [("convolution", StarPath::Convolution), ("kernel", StarPath::Kernel)] {
                let mut times: Vec<f64> = (0..(*repeats).max(1))
                    .map(|_| {
                        let start = Instant::now();
                        std::hint::black_box(star_power_f64(&z, *power, path));
                        start.elapsed().as_secs_f64()
                    })
                    .collect();
                times.sort_by(f64::total_cmp);
                t.push([name.to_string(), power.to_string(), length.to_string(), fmt_f64(times[times.len() / 2])]);
            }
            Ok(Outcome {
                text: render_table(&t, format),
                verified: true,
            })
        }
    }
}

fn constant_nonlinear(e: &NonlinearOde) -> Option<umbral::ConstNonlinearOde> {
    if !e.coeffs().iter().all(|c| c.is_constant()) {
        return None;
    }
    let b0 = e.coeffs()[0].constant_term();
    let a = e.coeffs()[1..].iter().map(|c| c.constant_term()).collect();
    umbral::ConstNonlinearOde::new(e.deriv_order(), a, b0).ok()
}

fn root_row(root: &Root) -> (&'static str, String) {
    match root {
        Root::Rational(r) => ("rational", format_rational(r)),
        Root::Quadratic { center, disc } => (
            "quadratic",
            format!("{} ± sqrt({})", format_rational(center), format_rational(disc)),
        ),
        Root::Float { value, .. } => ("float", format!("{}{:+}i", fmt_f64(value.re), fmt_f64(value.im))),
    }
}

fn generator_label(g: &Generator) -> String {
    let part = |p: &PairPart| match p {
        PairPart::Surd => "surd",
        PairPart::Rational => "rational",
    };
    match g {
        Generator::Rational { lambda, j } => format!("(n)_{j}*(1+{})^(n-{j})", format_rational(lambda)),
        Generator::Quadratic { center, disc, j, part: p } => format!(
            "{}[(n)_{j}*(1+{}+sqrt({}))^(n-{j})]",
            part(p),
            format_rational(center),
            format_rational(disc)
        ),
        Generator::Float { lambda, j, part: p } => format!(
            "{}[(n)_{j}*(1+{}{:+}i)^(n-{j})]",
            part(p),
            fmt_f64(lambda.re),
            fmt_f64(lambda.im)
        ),
    }
}

fn generator_cells(g: &Generator, last: usize, mode: Mode) -> Vec<String> {
    match (g.sequence(last), mode) {
        (Sequence::Exact(z), Mode::Exact) => z.iter().map(format_rational).collect(),
        _ => g.float_sequence(last).into_iter().map(fmt_f64).collect(),
    }
}

fn wronskian_cell(w: &Option<WronskianValue>, mode: Mode) -> String {
    match w {
        None => "0".into(),
        Some(WronskianValue::Exact(r)) => cell(mode, r),
        Some(WronskianValue::Float(v)) => fmt_f64(*v),
    }
}

fn render_galois(r: &FundamentalReport, last: usize, mode: Mode, format: Format) -> String {
    let gens = r.system.generators();
    let columns: Vec<Vec<String>> = gens.iter().map(|g| generator_cells(g, last, mode)).collect();
    match format {
        Format::Json => {
            let roots: Vec<Value> = r
                .roots
                .iter()
                .map(|d| {
                    let (kind, value) = root_row(&d.root);
                    let mut o = json!({ "kind": kind, "value": value, "multiplicity": d.multiplicity });
                    if let Root::Float { residual, .. } = d.root {
                        o["residual"] = json!(fmt_f64(residual));
                    }
                    o
                })
                .collect();
            let solutions: Vec<Value> = gens
                .iter()
                .zip(&columns)
                .map(|(g, c)| json!({ "generator": generator_label(g), "values": c }))
                .collect();
            pretty(&json!({
                "order": r.order,
                "dimension": r.dimension(),
                "exact": r.is_exact(),
                "roots": roots,
                "solutions": solutions,
                "exact_residuals_zero": r.exact_residuals_zero,
                "max_float_residual": fmt_f64(r.max_float_residual),
                "float_residual_tolerance": fmt_f64(FLOAT_RESIDUAL_TOL),
                "wronskian": wronskian_cell(&r.wronskian, mode),
                "passed": r.passed(),
            }))
        }
        Format::Csv => {
            let mut roots = Table::new(["kind", "root", "multiplicity"]);
            for d in &r.roots {
                let (kind, value) = root_row(&d.root);
                roots.push([kind.to_string(), value, d.multiplicity.to_string()]);
            }
            let mut sols = Table::new(
                std::iter::once("n".to_string()).chain(gens.iter().map(generator_label)),
            );
            for n in 0..=last {
                sols.push(std::iter::once(n.to_string()).chain(columns.iter().map(|c| c[n].clone())));
            }
            let mut summary = Table::new(["dimension", "wronskian", "passed"]);
            summary.push([
                r.dimension().to_string(),
                wronskian_cell(&r.wronskian, mode),
                r.passed().to_string(),
            ]);
            let mut out = String::new();
            for (i, t) in [roots, sols, summary].iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let _ = write!(out, "{}", t.to_csv());
            }
            out
        }
    }
}

fn render_corpus(reports: &[CaseReport], mode: Mode, format: Format) -> String {
    match format {
        Format::Json => {
            let cases: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let params: Map<String, Value> = r
                        .parameters
                        .iter()
                        .map(|(k, v)| (k.clone(), json!(cell(mode, v))))
                        .collect();
                    let solutions: Vec<Value> = r
                        .solutions
                        .iter()
                        .map(|s| {
                            json!({
                                "label": s.label,
                                "passed": s.passed(),
                                "stepping_matches": s.stepping_matches,
                                "residuals": s.residuals.iter().map(|v| cell(mode, v)).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    let mut o = json!({
                        "name": r.name,
                        "parameters": params,
                        "n_max": r.n_max,
                        "passed": r.passed(),
                        "stencil_matches": r.stencil_matches,
                        "solutions": solutions,
                    });
                    if let Some(p) = &r.printed {
                        o["printed_formula"] = json!({
                            "agrees": p.agrees,
                            "residual_vanishes": p.residual_vanishes,
                            "values": p.printed.iter().map(|v| cell(mode, v)).collect::<Vec<_>>(),
                        });
                    }
                    o
                })
                .collect();
            pretty(&json!({
                "all_passed": reports.iter().all(CaseReport::passed),
                "cases": cases,
            }))
        }
        Format::Csv => {
            let mut t = Table::new(["case", "parameters", "solution", "n_max", "residuals_zero", "stepping", "passed"]);
            for r in reports {
                let params = r
                    .parameters
                    .iter()
                    .map(|(k, v)| format!("{k}={}", cell(mode, v)))
                    .collect::<Vec<_>>()
                    .join(";");
                for s in &r.solutions {
                    let stepping = match s.stepping_matches {
                        Some(true) => "match",
                        Some(false) => "mismatch",
                        None => "n/a",
                    };
                    t.push([
                        r.name.clone(),
                        params.clone(),
                        s.label.clone(),
                        r.n_max.to_string(),
                        s.residuals_vanish().to_string(),
                        stepping.to_string(),
                        r.passed().to_string(),
                    ]);
                }
            }
            t.to_csv()
        }
    }
}
