//! Command-line surface: argument definitions and deterministic reports.
//!
//! The binary only parses arguments and prints what [`run`] returns, so every
//! command can be driven from tests without spawning a process.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cohomology::{betti_numbers, coboundary, Cochain, HomologyBasis};
use crate::complex::{
    load_complex, CanonicalComplex, Chain, ComplexFormat, ComplexSummary, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::forms::{derham_map, FormFile, PolyForm};
use crate::linalg::{format_rational, parse_rational_list, Rational};
use crate::sample;
use crate::theorems;

#[derive(Debug, Parser)]
#[command(
    name = "derham",
    version,
    about = "Exact periods, primitives and products of forms on simplicial complexes"
)]
pub struct Cli {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Render a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Complex file (maximal simplices).
    #[arg(long, global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,

    /// Format of the complex file; inferred from the extension when omitted.
    #[arg(long, global = true, value_name = "json|text")]
    pub format: Option<String>,

    /// Built-in complex instead of a file, e.g. `torus` or `circle:7`.
    #[arg(long, global = true, value_name = "NAME", conflicts_with = "input")]
    pub builtin: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Betti numbers, Euler characteristic and manifold flags.
    Betti,
    /// Check Φ(dω) = δΦ(ω) on seeded random forms of every degree.
    StokesCheck {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Periods of a closed form.
    Periods {
        #[arg(long, value_name = "PATH")]
        form: PathBuf,
        #[arg(long, value_name = "P")]
        dim: Option<usize>,
    },
    /// Primitive of a closed Whitney form with vanishing periods.
    Primitive {
        #[arg(long, value_name = "PATH")]
        form: PathBuf,
        #[arg(long, value_name = "P")]
        dim: Option<usize>,
        /// Also write the primitive to this file.
        #[arg(long, value_name = "PATH")]
        out_form: Option<PathBuf>,
    },
    /// Closed form with prescribed periods.
    Realize {
        #[arg(long, value_name = "P")]
        dim: usize,
        /// Comma separated rationals, e.g. `3,-2,1/2`.
        #[arg(long, value_name = "CSV", allow_hyphen_values = true)]
        periods: String,
        /// Also write the form to this file.
        #[arg(long, value_name = "PATH")]
        out_form: Option<PathBuf>,
    },
    /// Compare the wedge product with the cup product of two closed forms.
    RingCheck {
        /// Exactly two form files.
        #[arg(long, value_name = "PATH", num_args = 1, required = true)]
        form: Vec<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Betti => "betti",
            Command::StokesCheck { .. } => "stokes-check",
            Command::Periods { .. } => "periods",
            Command::Primitive { .. } => "primitive",
            Command::Realize { .. } => "realize",
            Command::RingCheck { .. } => "ring-check",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExitStatus {
    Ok,
    Violation,
    Error,
}

impl ExitStatus {
    /// 0 ok, 1 violation found, 2 input error.
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Ok => 0,
            ExitStatus::Violation => 1,
            ExitStatus::Error => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub complex_summary: Option<ComplexSummary>,
    pub payload: Value,
    pub exit_status: ExitStatus,
}

impl Report {
    fn new(
        command: &str,
        k: Option<&SimplicialComplex>,
        payload: Value,
        exit_status: ExitStatus,
    ) -> Self {
        Self {
            command: command.to_string(),
            complex_summary: k.map(SimplicialComplex::summary),
            payload,
            exit_status,
        }
    }

    fn error(command: &str, k: Option<&SimplicialComplex>, err: &Error) -> Self {
        Self::new(
            command,
            k,
            json!({ "error": err.to_string() }),
            ExitStatus::Error,
        )
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "command: {}\nstatus:  {:?}\n",
            self.command, self.exit_status
        )
        .to_lowercase();
        if let Some(summary) = &self.complex_summary {
            out += &format!(
                "complex: dimension {}, simplices {:?}, euler {}, closed manifold {}, oriented {}\n",
                summary.dimension,
                summary.simplex_counts,
                summary.euler_characteristic,
                summary.is_closed_manifold,
                summary.is_oriented
            );
        }
        if let Some(betti) = self.payload.get("betti").and_then(Value::as_array) {
            out += "  p  betti\n";
            for (p, b) in betti.iter().enumerate() {
                out += &format!("{p:>3}  {b:>5}\n");
            }
        }
        if let Value::Object(map) = &self.payload {
            for (key, value) in map {
                if key == "betti" {
                    continue;
                }
                out += &format!("{key}: {value}\n");
            }
        }
        out
    }

    pub fn render(&self, text: bool) -> String {
        if text {
            self.render_text()
        } else {
            self.to_json()
        }
    }
}

pub fn rational_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

pub fn chain_json(c: &Chain) -> Value {
    Value::Array(
        c.terms()
            .map(|(s, q)| json!({ "simplex": s.vertices(), "coefficient": format_rational(q) }))
            .collect(),
    )
}

pub fn cochain_json(f: &Cochain) -> Value {
    vector_json(f.values())
}

fn basis_json(b: &HomologyBasis) -> Value {
    Value::Array(b.cycles.iter().map(chain_json).collect())
}

fn form_json(form: &PolyForm) -> Value {
    serde_json::to_value(form.to_file()).expect("form serializes")
}

/// Loads the complex named by `--input`/`--builtin`.
pub fn load_source(source: &SourceArgs) -> Result<SimplicialComplex> {
    if let Some(name) = &source.builtin {
        return name.parse::<CanonicalComplex>()?.build();
    }
    let path = source
        .input
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter("one of --input or --builtin is required".into()))?;
    let format = match &source.format {
        Some(f) => f.parse()?,
        None => match path.extension().and_then(|e| e.to_str()) {
            Some("json") => ComplexFormat::Json,
            _ => ComplexFormat::Text,
        },
    };
    let file = fs::File::open(path)
        .map_err(|e| Error::Invalid(format!("cannot open {}: {e}", path.display())))?;
    load_complex(file, format)
}

pub fn read_form(k: &SimplicialComplex, path: &PathBuf) -> Result<PolyForm> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let file: FormFile = serde_json::from_str(&text)?;
    PolyForm::from_file(k, &file)
}

fn write_form(path: &PathBuf, form: &PolyForm) -> Result<()> {
    let mut text = serde_json::to_string_pretty(&form.to_file())?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn check_dim(expected: Option<usize>, form: &PolyForm) -> Result<()> {
    match expected {
        Some(p) if p != form.degree() => Err(Error::DegreeMismatch {
            expected: p,
            found: form.degree(),
        }),
        _ => Ok(()),
    }
}

pub fn cmd_betti(k: &SimplicialComplex) -> Report {
    let betti = betti_numbers(k);
    let alternating: i64 = betti
        .iter()
        .enumerate()
        .map(|(p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    let chi = k.euler_characteristic();
    let status = if alternating == chi {
        ExitStatus::Ok
    } else {
        ExitStatus::Violation
    };
    Report::new(
        "betti",
        Some(k),
        json!({
            "betti": betti,
            "euler_characteristic": chi,
            "betti_alternating_sum": alternating,
            "is_closed_manifold": k.is_closed_manifold(),
            "is_oriented": k.is_oriented(),
        }),
        status,
    )
}

pub fn cmd_stokes_check(k: &SimplicialComplex, trials: usize, seed: u64) -> Report {
    let mut rng = sample::seeded(seed);
    let degrees: Vec<usize> = (0..=k.dimension()).collect();
    let mut checked = 0usize;
    for &p in &degrees {
        for trial in 0..trials {
            let omega = sample::random_form(k, p, &mut rng);
            let lhs = derham_map(k, &omega.d());
            let rhs = derham_map(k, &omega).map(|f| coboundary(k, &f));
            match (lhs, rhs) {
                (Ok(lhs), Ok(rhs)) if lhs == rhs => checked += 1,
                (Ok(lhs), Ok(rhs)) => {
                    return Report::new(
                        "stokes-check",
                        Some(k),
                        json!({
                            "seed": seed,
                            "trials": trials,
                            "checked": checked,
                            "result": "counterexample",
                            "counterexample": {
                                "degree": p,
                                "trial": trial,
                                "form": form_json(&omega),
                                "integral_of_derivative": cochain_json(&lhs),
                                "coboundary_of_integral": cochain_json(&rhs),
                            },
                        }),
                        ExitStatus::Violation,
                    );
                }
                (Err(e), _) | (_, Err(e)) => return Report::error("stokes-check", Some(k), &e),
            }
        }
    }
    let mut payload = json!({
        "seed": seed,
        "trials": trials,
        "degrees": degrees,
        "checked": checked,
        "result": "all passed",
    });
    if trials == 0 {
        payload["note"] = json!("vacuous pass: zero trials requested");
    }
    Report::new("stokes-check", Some(k), payload, ExitStatus::Ok)
}

fn violation_or_error(command: &str, k: &SimplicialComplex, err: Error) -> Report {
    match err {
        Error::NotClosed { degree, derivative } => Report::new(
            command,
            Some(k),
            json!({
                "violation": format!("form of degree {degree} is not closed"),
                "derivative": form_json(&derivative),
            }),
            ExitStatus::Violation,
        ),
        other => Report::error(command, Some(k), &other),
    }
}

pub fn cmd_periods(k: &SimplicialComplex, omega: &PolyForm) -> Report {
    match theorems::periods(k, omega) {
        Ok(report) => Report::new(
            "periods",
            Some(k),
            json!({
                "degree": report.dim,
                "homology_basis": basis_json(&report.homology_basis),
                "periods": vector_json(&report.periods),
            }),
            ExitStatus::Ok,
        ),
        Err(e) => violation_or_error("periods", k, e),
    }
}

/// Returns the report and, when one exists, the primitive.
pub fn cmd_primitive(k: &SimplicialComplex, omega: &PolyForm) -> (Report, Option<PolyForm>) {
    let outcome = theorems::periods(k, omega)
        .and_then(|report| theorems::find_primitive(k, omega).map(|prim| (report, prim)));
    match outcome {
        Ok((report, primitive)) => {
            let verified = primitive.as_ref().map(|b| b.d() == *omega);
            let all_zero = report.periods.iter().all(num_traits::Zero::is_zero);
            // exactly one of: primitive found, some period nonzero
            let consistent = primitive.is_some() == all_zero && verified != Some(false);
            let payload = json!({
                "degree": report.dim,
                "homology_basis": basis_json(&report.homology_basis),
                "periods": vector_json(&report.periods),
                "exact": primitive.is_some(),
                "primitive": primitive.as_ref().map(form_json),
                "derivative_matches_input": verified,
            });
            let status = if consistent {
                ExitStatus::Ok
            } else {
                ExitStatus::Violation
            };
            (
                Report::new("primitive", Some(k), payload, status),
                primitive,
            )
        }
        Err(e) => (violation_or_error("primitive", k, e), None),
    }
}

/// Returns the report and the realized form.
pub fn cmd_realize(
    k: &SimplicialComplex,
    p: usize,
    phi: &[Rational],
) -> (Report, Option<PolyForm>) {
    let outcome = theorems::realize_periods(k, p, phi)
        .and_then(|form| theorems::periods(k, &form).map(|report| (form, report)));
    match outcome {
        Ok((form, report)) => {
            let verified = report.periods == phi;
            let payload = json!({
                "degree": p,
                "requested_periods": vector_json(phi),
                "homology_basis": basis_json(&report.homology_basis),
                "form": form_json(&form),
                "periods": vector_json(&report.periods),
                "verified": verified,
            });
            let status = if verified {
                ExitStatus::Ok
            } else {
                ExitStatus::Violation
            };
            (Report::new("realize", Some(k), payload, status), Some(form))
        }
        Err(e) => (Report::error("realize", Some(k), &e), None),
    }
}

pub fn cmd_ring_check(k: &SimplicialComplex, alpha: &PolyForm, beta: &PolyForm) -> Report {
    match theorems::ring_check(k, alpha, beta) {
        Ok(v) => {
            let top = v.top_pairing.as_ref().map(|t| {
                json!({
                    "wedge": rational_json(&t.wedge),
                    "cup": rational_json(&t.cup),
                    "agree": t.agree(),
                })
            });
            let ok = v.cohomologous && v.top_pairing.as_ref().is_none_or(|t| t.agree());
            let payload = json!({
                "degrees": [v.degrees.0, v.degrees.1],
                "cohomologous": v.cohomologous,
                "difference": v.difference.as_ref().map(cochain_json),
                "witness": v.witness.as_ref().map(cochain_json),
                "top_pairing": top,
            });
            let status = if ok {
                ExitStatus::Ok
            } else {
                ExitStatus::Violation
            };
            Report::new("ring-check", Some(k), payload, status)
        }
        Err(e) => violation_or_error("ring-check", k, e),
    }
}

/// Executes one invocation. Input problems become error reports, never panics.
pub fn run(cli: &Cli) -> Report {
    let name = cli.command.name();
    let k = match load_source(&cli.source) {
        Ok(k) => k,
        Err(e) => return Report::error(name, None, &e),
    };
    match execute(&k, &cli.command) {
        Ok(report) => report,
        Err(e) => Report::error(name, Some(&k), &e),
    }
}

fn execute(k: &SimplicialComplex, command: &Command) -> Result<Report> {
    Ok(match command {
        Command::Betti => cmd_betti(k),
        Command::StokesCheck { trials, seed } => cmd_stokes_check(k, *trials, *seed),
        Command::Periods { form, dim } => {
            let omega = read_form(k, form)?;
            check_dim(*dim, &omega)?;
            cmd_periods(k, &omega)
        }
        Command::Primitive {
            form,
            dim,
            out_form,
        } => {
            let omega = read_form(k, form)?;
            check_dim(*dim, &omega)?;
            let (report, primitive) = cmd_primitive(k, &omega);
            if let (Some(path), Some(beta)) = (out_form, &primitive) {
                write_form(path, beta)?;
            }
            report
        }
        Command::Realize {
            dim,
            periods,
            out_form,
        } => {
            let phi = parse_rational_list(periods)?;
            let (report, form) = cmd_realize(k, *dim, &phi);
            if let (Some(path), Some(form)) = (out_form, &form) {
                write_form(path, form)?;
            }
            report
        }
        Command::RingCheck { form } => {
            if form.len() != 2 {
                return Err(Error::InvalidParameter(format!(
                    "ring-check needs exactly two --form files, got {}",
                    form.len()
                )));
            }
            let alpha = read_form(k, &form[0])?;
            let beta = read_form(k, &form[1])?;
            cmd_ring_check(k, &alpha, &beta)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn torus() -> SimplicialComplex {
        CanonicalComplex::Torus.build().unwrap()
    }

    #[test]
    fn betti_report_for_torus() {
        let r = cmd_betti(&torus());
        assert_eq!(r.exit_status, ExitStatus::Ok);
        assert_eq!(r.payload["betti"], json!([1, 2, 1]));
        assert_eq!(r.payload["euler_characteristic"], json!(0));
    }

    #[test]
    fn stokes_zero_trials_is_vacuous() {
        let r = cmd_stokes_check(&torus(), 0, 5);
        assert_eq!(r.exit_status, ExitStatus::Ok);
        assert!(r.payload["note"].as_str().unwrap().contains("vacuous"));
    }

    #[test]
    fn non_closed_form_is_a_violation() {
        let k = torus();
        let omega = PolyForm::global_term(&k, int(1), &[(0, 1)], &[1]);
        let r = cmd_periods(&k, &omega);
        assert_eq!(r.exit_status, ExitStatus::Violation);
        assert!(r.payload.get("derivative").is_some());
    }

    #[test]
    fn realize_report_verifies_itself() {
        let (r, form) = cmd_realize(&torus(), 1, &[int(3), int(-2)]);
        assert_eq!(r.exit_status, ExitStatus::Ok);
        assert_eq!(r.payload["periods"], json!(["3/1", "-2/1"]));
        assert!(form.is_some());
        let (bad, _) = cmd_realize(&torus(), 1, &[int(3)]);
        assert_eq!(bad.exit_status, ExitStatus::Error);
    }

    #[test]
    fn text_rendering_has_table() {
        let text = cmd_betti(&torus()).render_text();
        assert!(text.contains("p  betti"));
        assert!(text.contains("status:  ok"));
    }
}
