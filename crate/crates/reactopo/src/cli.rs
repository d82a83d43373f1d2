//! Command-line front end.
//!
//! Every command produces a report with a `schema` tag, the command echo, a
//! `result` object, `warnings`, and an `error` (`null` on success). Text mode
//! prints the same fields as indented `key: value` lines.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use reactopo_core::handle::{parse_presentation, HandleError};
use reactopo_core::numbers::{gmn_check, LawVector};
use reactopo_core::observables::{
    apparent_time, classify_interaction, confinement, spin_classify, spin_of, ConfinementClass,
};
use reactopo_core::particle::{hypercharge_closed_form, Particle};
use reactopo_core::propagator::PropagatorPresentation;
use reactopo_core::rational::{format_rational, Rational};
use reactopo_core::reaction::{
    check, crossing_closure, parse, render, susy_reaction, ConservationReport, CrossingError,
    ParseError, Reaction,
};
use reactopo_core::registry::Registry;
use serde_json::{json, Map, Value};

use crate::error::LoadError;
use crate::observable_files::{parse_descriptor, parse_spectrum};
use crate::propagator_file::{bundled_propagators, parse_propagators, PropagatorEntry};
use crate::registry_file::{bundled_registry, parse_registry};

/// Version tag carried by every JSON report.
pub const REPORT_SCHEMA: &str = "reactopo.report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "reactopo",
    version,
    about = "Conservation, crossing, handle and observable calculus for particle reactions"
)]
pub struct Cli {
    /// Registry file (JSON Lines); defaults to the bundled registry.
    #[arg(long, global = true)]
    registry: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check one reaction, or every line of a reaction file.
    Validate { input: String },
    /// Reactions reachable by crossing, conjugation and reversal.
    Cross {
        reaction: String,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Superpartner reaction.
    Susy { reaction: String },
    /// Gell-Mann-Nishijima residuals.
    Gmn {
        particle: Option<String>,
        #[arg(long, conflicts_with = "particle")]
        all: bool,
    },
    /// Print and validate a propagator presentation from the corpus.
    Decompose {
        name: String,
        /// Propagator corpus (JSON); defaults to the bundled corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Thermodynamic functions of a spectrum file.
    Thermo {
        spectrum: PathBuf,
        #[arg(
            long,
            allow_negative_numbers = true,
            required_unless_present = "theta",
            conflicts_with = "theta"
        )]
        beta: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        theta: Option<f64>,
        #[arg(long = "kB", default_value_t = 1.0)]
        k_b: f64,
    },
    /// Apparent time for an energy scale and the interaction it suggests.
    Time {
        #[arg(long = "deltaE", allow_negative_numbers = true)]
        delta_e: f64,
    },
    /// Classify a spin-squared spectrum.
    Spin {
        #[arg(long, value_delimiter = ',', num_args = 1.., allow_negative_numbers = true, required = true)]
        values: Vec<f64>,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
    },
    /// Confinement class of a spectral descriptor file.
    Confine { descriptor: PathBuf },
    /// Euler characteristic of a handle presentation literal.
    Chi { presentation: String },
}

/// A failure reported with its error name and exit status 1.
#[derive(Debug, Clone, PartialEq)]
pub struct AppError {
    pub name: &'static str,
    pub message: String,
}

impl AppError {
    fn new(name: &'static str, message: impl std::fmt::Display) -> Self {
        AppError {
            name,
            message: message.to_string(),
        }
    }
}

impl From<LoadError> for AppError {
    fn from(e: LoadError) -> Self {
        AppError::new("LoadError", e)
    }
}

fn parse_error_name(e: &ParseError) -> &'static str {
    match e {
        ParseError::Syntax { .. } => "SyntaxError",
        ParseError::UnknownParticle { .. } => "UnknownParticle",
        ParseError::NoPartner { .. } => "NoPartner",
    }
}

impl From<ParseError> for AppError {
    fn from(e: ParseError) -> Self {
        AppError::new(parse_error_name(&e), e)
    }
}

impl From<CrossingError> for AppError {
    fn from(e: CrossingError) -> Self {
        let name = match e {
            CrossingError::NotPresent { .. } => "NotPresent",
            CrossingError::EmptySide { .. } => "EmptySide",
            CrossingError::NoPartner(_) => "NoPartner",
        };
        AppError::new(name, e)
    }
}

impl From<HandleError> for AppError {
    fn from(e: HandleError) -> Self {
        let name = match e {
            HandleError::IndexOutOfRange { .. } => "IndexOutOfRange",
            HandleError::NoBoundary(_) => "NoBoundary",
            HandleError::DimensionMismatch { .. } => "DimensionMismatch",
            HandleError::UndeterminedDimension => "UndeterminedDimension",
            HandleError::EmptyPiece => "EmptyPiece",
            HandleError::Syntax { .. } => "SyntaxError",
        };
        AppError::new(name, e)
    }
}

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    result: Value,
    warnings: Vec<String>,
    /// Set when the result itself signals failure, e.g. a corpus mismatch.
    failure: Option<AppError>,
}

impl Report {
    fn ok(result: Value) -> Self {
        Report {
            result,
            warnings: Vec::new(),
            failure: None,
        }
    }
}

fn rational(r: Rational) -> Value {
    Value::String(format_rational(&r))
}

fn law_map(v: &LawVector) -> Value {
    Value::Object(
        v.iter()
            .map(|(l, r)| (l.symbol().to_owned(), rational(r)))
            .collect(),
    )
}

fn load_registry(path: Option<&Path>) -> Result<Registry, AppError> {
    match path {
        None => Ok(bundled_registry()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| AppError::new("LoadError", format!("{}: {e}", p.display())))?;
            Ok(parse_registry(&text, &p.display().to_string())?)
        }
    }
}

fn read(path: &Path) -> Result<String, AppError> {
    std::fs::read_to_string(path)
        .map_err(|e| AppError::new("LoadError", format!("{}: {e}", path.display())))
}

fn report_json(r: &Reaction, report: &ConservationReport) -> Value {
    let verdicts: Map<String, Value> = report
        .verdicts
        .iter()
        .map(|(l, v)| (l.symbol().to_owned(), json!(v.as_str())))
        .collect();
    json!({
        "reaction": render(r),
        "classification": report.classification.as_str(),
        "lost_charge": rational(report.lost_charge),
        "deltas": law_map(&report.deltas),
        "verdicts": verdicts,
        "mass_note": report.mass_note.map(|m| m.as_str()),
        "energy": report.energy.map(|e| json!({
            "annotated_mev": e.annotated_mev,
            "mass_defect_mev": e.mass_defect_mev,
            "consistent": e.consistent,
        })),
    })
}

fn reaction_warnings(report: &ConservationReport) -> Vec<String> {
    let mut w = Vec::new();
    if let Some(e) = report.energy.filter(|e| !e.consistent) {
        w.push(format!(
            "annotated energy {} MeV differs from mass defect {:.3} MeV",
            e.annotated_mev, e.mass_defect_mev
        ));
    }
    w
}

fn cmd_validate(registry: &Registry, input: &str) -> Result<Report, AppError> {
    let path = Path::new(input);
    if !input.contains("->") && path.is_file() {
        return validate_file(registry, path);
    }
    let r = parse(input, registry)?;
    let report = check(&r);
    Ok(Report {
        warnings: reaction_warnings(&report),
        result: report_json(&r, &report),
        failure: None,
    })
}

fn validate_file(registry: &Registry, path: &Path) -> Result<Report, AppError> {
    let text = read(path)?;
    let mut entries = Vec::new();
    let mut failures = 0;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let mut cols = line.split('\t');
        let reaction_text = cols.next().unwrap_or("");
        let expected = cols.next().map(str::trim);
        let entry = match parse(reaction_text, registry) {
            Ok(r) => {
                let report = check(&r);
                let mut v = report_json(&r, &report);
                if let Some(exp) = expected {
                    let matches = exp == report.classification.as_str();
                    failures += usize::from(!matches);
                    v["expected"] = json!(exp);
                    v["matches"] = json!(matches);
                }
                v
            }
            Err(e) => {
                failures += 1;
                json!({ "error": { "name": parse_error_name(&e), "message": e.to_string() } })
            }
        };
        let mut entry = entry;
        entry["line"] = json!(i + 1);
        entries.push(entry);
    }
    let total = entries.len();
    Ok(Report {
        result: json!({ "file": path.display().to_string(), "checked": total, "failures": failures, "entries": entries }),
        warnings: Vec::new(),
        failure: (failures > 0).then(|| {
            AppError::new(
                "CorpusMismatch",
                format!("{failures} of {total} lines failed"),
            )
        }),
    })
}

fn cmd_cross(registry: &Registry, text: &str, depth: usize) -> Result<Report, AppError> {
    let r = parse(text, registry)?;
    let members: Vec<Value> = crossing_closure(&r, registry, depth)
        .iter()
        .map(|m| {
            let rep = check(m);
            json!({ "reaction": render(m), "classification": rep.classification.as_str(), "lost_charge": rational(rep.lost_charge) })
        })
        .collect();
    Ok(Report::ok(
        json!({ "reaction": render(&r), "depth": depth, "count": members.len(), "members": members }),
    ))
}

fn cmd_susy(registry: &Registry, text: &str) -> Result<Report, AppError> {
    let r = parse(text, registry)?;
    let partner = susy_reaction(&r, registry)?;
    let report = check(&partner);
    Ok(Report::ok(json!({
        "reaction": render(&r),
        "partner": report_json(&partner, &report),
        "deltas_preserved": check(&r).deltas == report.deltas,
    })))
}

fn gmn_entry(p: &Particle) -> Value {
    let n = &p.numbers;
    json!({
        "id": p.id,
        "Q": rational(n.charge),
        "I3": rational(n.flavor.isospin3),
        "Y": rational(n.hypercharge),
        "Y_from_flavor": rational(n.hypercharge_from_flavor()),
        "Y_from_quarks": p.quarks.as_ref().map(|q| rational(hypercharge_closed_form(q))),
        "residual": rational(gmn_check(n)),
    })
}

fn cmd_gmn(registry: &Registry, particle: Option<&str>, all: bool) -> Result<Report, AppError> {
    if all || particle.is_none() {
        let entries: Vec<Value> = registry.iter().map(gmn_entry).collect();
        let failing = registry
            .iter()
            .filter(|p| gmn_check(&p.numbers) != Rational::from_integer(0))
            .count();
        return Ok(Report::ok(
            json!({ "count": entries.len(), "nonzero": failing, "particles": entries }),
        ));
    }
    let name = particle.unwrap_or_default();
    let p = registry
        .resolve(name)
        .map_err(|e| AppError::new("UnknownParticle", e))?;
    Ok(Report::ok(gmn_entry(&p)))
}

fn decompose_json(entry: &PropagatorEntry) -> (Value, Option<AppError>) {
    let p: &PropagatorPresentation = &entry.presentation;
    let violations: Vec<String> = p.validate().iter().map(ToString::to_string).collect();
    let class: Vec<Value> = p
        .exchangion_class_check()
        .iter()
        .map(|v| json!({ "datum": v.datum, "law": v.law.symbol(), "expected": rational(v.expected), "found": rational(v.found) }))
        .collect();
    let pairing: Map<String, Value> = p
        .pairing_report()
        .into_iter()
        .map(|(l, r)| (l.symbol().to_owned(), rational(r)))
        .collect();
    let steps: Vec<Value> = p
        .steps
        .iter()
        .map(|s| json!({ "label": s.label, "from": s.source, "to": s.target, "kind": s.kind.to_string() }))
        .collect();
    let goldstone = p.goldstone_crossing();
    let reaction_report = check(&entry.reaction);
    let mut failure = None;
    let goldstone_value = match &goldstone {
        Ok(g) => json!({ "crosses_mass": g.crosses_mass, "crosses_charge": g.crosses_charge }),
        Err(e) => {
            failure = Some(AppError::new(e.name(), e));
            json!({ "error": e.name() })
        }
    };
    if failure.is_none() && !(violations.is_empty() && class.is_empty()) {
        failure = Some(AppError::new(
            "InvalidPresentation",
            format!("{} violations", violations.len() + class.len()),
        ));
    }
    let value = json!({
        "name": p.name,
        "reaction": entry.reaction_text,
        "classification": reaction_report.classification.as_str(),
        "steps": steps,
        "step_count": p.steps.len(),
        "valid": violations.is_empty(),
        "violations": violations,
        "exchangion_violations": class,
        "pairing_residuals": pairing,
        "lost_charge": rational(p.lost_charge()),
        "q_exotic": p.is_q_exotic(),
        "goldstone": goldstone_value,
        "elementary": p.is_elementary(),
        "shape": p.shape(),
        "singular": p.is_singular(),
        "euler_characteristic": p.handle_presentation().map(|h| h.euler_characteristic()),
    });
    (value, failure)
}

fn cmd_decompose(
    registry: &Registry,
    name: &str,
    corpus: Option<&Path>,
) -> Result<Report, AppError> {
    let entries = match corpus {
        None => bundled_propagators(registry),
        Some(path) => parse_propagators(&read(path)?, registry, &path.display().to_string())?,
    };
    let entry = entries
        .iter()
        .find(|e| e.presentation.name == name)
        .ok_or_else(|| {
            let names: Vec<&str> = entries
                .iter()
                .map(|e| e.presentation.name.as_str())
                .collect();
            AppError::new(
                "UnknownPropagator",
                format!("no propagator {name:?}; known: {}", names.join(", ")),
            )
        })?;
    let (result, failure) = decompose_json(entry);
    Ok(Report {
        result,
        warnings: Vec::new(),
        failure,
    })
}

fn cmd_thermo(
    path: &Path,
    beta: Option<f64>,
    theta: Option<f64>,
    k_b: f64,
) -> Result<Report, AppError> {
    let spectrum = parse_spectrum(&read(path)?, &path.display().to_string())?;
    if k_b.is_nan() || k_b <= 0.0 {
        return Err(AppError::new(
            "NonPositiveTemperature",
            "kB must be positive",
        ));
    }
    let beta = match (beta, theta) {
        (Some(b), _) => b,
        (None, Some(t)) if t > 0.0 => 1.0 / (k_b * t),
        _ => {
            return Err(AppError::new(
                "NonPositiveTemperature",
                "theta must be positive",
            ))
        }
    };
    let r = spectrum.report(beta, k_b);
    let mut warnings = Vec::new();
    if r.partition.is_none() {
        warnings.push(format!("Z overflows; ln Z = {}", r.ln_partition));
    }
    if r.theta.is_none() {
        warnings.push(
            "beta <= 0: heat capacity and free energy need a positive temperature".to_owned(),
        );
    }
    Ok(Report {
        result: json!({
            "levels": spectrum.levels().len(),
            "beta": r.beta,
            "theta": r.theta,
            "kB": r.k_b,
            "ln_Z": r.ln_partition,
            "Z": r.partition,
            "avg_energy": r.avg_energy,
            "fluctuation": r.fluctuation,
            "entropy": r.entropy,
            "heat_capacity": r.heat_capacity,
            "free_energy": r.free_energy,
        }),
        warnings,
        failure: None,
    })
}

fn cmd_time(delta_e: f64) -> Result<Report, AppError> {
    let t = apparent_time(delta_e).map_err(|e| AppError::new(e.name(), e))?;
    let class = classify_interaction(t).map_err(|e| AppError::new(e.name(), e))?;
    Ok(Report::ok(
        json!({ "deltaE_GeV": delta_e, "time_s": t, "class": class.as_str() }),
    ))
}

fn cmd_spin(values: &[f64], hbar: f64) -> Result<Report, AppError> {
    use reactopo_core::observables::SpinError;
    let class = spin_classify(values, hbar).map_err(|e| {
        let name = match e {
            SpinError::NegativeValue(_) => "NegativeValue",
            SpinError::Empty => "Empty",
            SpinError::NonPositiveHbar => "NonPositiveHbar",
        };
        AppError::new(name, e)
    })?;
    let spins: Vec<f64> = values.iter().map(|&v| spin_of(v, hbar)).collect();
    Ok(Report::ok(
        json!({ "values": values, "hbar": hbar, "spins": spins, "class": class.as_str() }),
    ))
}

fn cmd_confine(path: &Path) -> Result<Report, AppError> {
    let d = parse_descriptor(&read(path)?, &path.display().to_string())?;
    let class = confinement(&d);
    let open = match &class {
        ConfinementClass::PartiallyConfined(labels) => labels.clone(),
        _ => Vec::new(),
    };
    Ok(Report::ok(
        json!({ "points": d.points().len(), "class": class.as_str(), "deconfined_points": open }),
    ))
}

fn cmd_chi(literal: &str) -> Result<Report, AppError> {
    let pres = parse_presentation(literal)?;
    Ok(Report::ok(json!({
        "presentation": pres.to_string(),
        "total_dim": pres.total_dim().to_string(),
        "handles": pres.handles().count(),
        "chi": pres.euler_characteristic(),
    })))
}

fn dispatch(cli: &Cli) -> Result<Report, AppError> {
    let registry = || load_registry(cli.registry.as_deref());
    match &cli.command {
        Command::Validate { input } => cmd_validate(&registry()?, input),
        Command::Cross { reaction, depth } => cmd_cross(&registry()?, reaction, *depth),
        Command::Susy { reaction } => cmd_susy(&registry()?, reaction),
        Command::Gmn { particle, all } => cmd_gmn(&registry()?, particle.as_deref(), *all),
        Command::Decompose { name, corpus } => cmd_decompose(&registry()?, name, corpus.as_deref()),
        Command::Thermo {
            spectrum,
            beta,
            theta,
            k_b,
        } => cmd_thermo(spectrum, *beta, *theta, *k_b),
        Command::Time { delta_e } => cmd_time(*delta_e),
        Command::Spin { values, hbar } => cmd_spin(values, *hbar),
        Command::Confine { descriptor } => cmd_confine(descriptor),
        Command::Chi { presentation } => cmd_chi(presentation),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Cross { .. } => "cross",
        Command::Susy { .. } => "susy",
        Command::Gmn { .. } => "gmn",
        Command::Decompose { .. } => "decompose",
        Command::Thermo { .. } => "thermo",
        Command::Time { .. } => "time",
        Command::Spin { .. } => "spin",
        Command::Confine { .. } => "confine",
        Command::Chi { .. } => "chi",
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_owned(),
        other => other.to_string(),
    }
}

fn write_text(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(m) if !m.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_text(out, val, indent + 1);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_text(out, val, indent + 1);
                    }
                    Value::Array(items) => {
                        let parts: Vec<String> = items.iter().map(scalar_text).collect();
                        out.push_str(&format!("{pad}{k}: {}\n", parts.join(", ")));
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar_text(val))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                out.push_str(&format!("{pad}-\n"));
                write_text(out, item, indent + 1);
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other))),
    }
}

fn render_outcome(cli: &Cli, argv: &[String], outcome: Result<Report, AppError>) -> Outcome {
    let (result, warnings, error) = match outcome {
        Ok(r) => (r.result, r.warnings, r.failure),
        Err(e) => (Value::Null, Vec::new(), Some(e)),
    };
    let code = i32::from(error.is_some());
    let report = json!({
        "schema": REPORT_SCHEMA,
        "command": command_name(&cli.command),
        "argv": argv,
        "result": result,
        "warnings": warnings,
        "error": error.as_ref().map(|e| json!({ "name": e.name, "message": e.message })),
    });
    match cli.format {
        Format::Json => Outcome {
            code,
            stdout: serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
            stderr: String::new(),
        },
        Format::Text => {
            let mut stdout = String::new();
            if !report["result"].is_null() {
                write_text(&mut stdout, &report["result"], 0);
            }
            let mut stderr = String::new();
            for w in &warnings {
                stderr.push_str(&format!("warning: {w}\n"));
            }
            if let Some(e) = &error {
                stderr.push_str(&format!("error[{}]: {}\n", e.name, e.message));
            }
            Outcome {
                code,
                stdout,
                stderr,
            }
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let argv: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let outcome = dispatch(&cli);
    render_outcome(&cli, &argv, outcome)
}
