//! Command dispatch. Every report is a JSON object whose first field echoes
//! the resolved configuration.

use std::fs;

use serde_json::{json, Map, Value};

use gpoisson::document::{self, derivation_to_value, structure_to_value};
use gpoisson::{catalog, cohomology, report, solver};
use gpoisson::{CatalogEntry, Derivation, Error, PoissonStructure, Poly};

use crate::{table, Cli, Command, Format};

/// A run that stops before producing its report.
#[derive(Debug)]
enum Stop {
    /// Bad flags, unreadable or malformed input: exit code 2.
    Input(String),
    /// The input was read but fails a required property: exit code 1, with
    /// whatever report could still be assembled.
    Verification(Map<String, Value>, String),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Input(e.to_string())
    }
}

/// Errors that mean "the structure or derivation lacks a property", as
/// opposed to malformed input.
fn is_verification_error(e: &Error) -> bool {
    matches!(
        e,
        Error::NotPoisson(..)
            | Error::NotGraded { .. }
            | Error::NotSemiPoisson
            | Error::NotUnimodular
    )
}

struct Source {
    structure: PoissonStructure,
    potential: Option<Poly>,
    entry: Option<CatalogEntry>,
    input: Value,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify => "verify",
        Command::Modular => "modular",
        Command::Unimodularize => "unimodularize",
        Command::Twist => "twist",
        Command::Rgt => "rgt",
        Command::Derivations => "derivations",
        Command::Center => "center",
        Command::Cohomology => "cohomology",
        Command::Report => "report",
        Command::Catalog { .. } => "catalog",
    }
}

pub fn main(cli: &Cli) -> u8 {
    let (body, code) = match execute(cli) {
        Ok((report, failed)) => (report, u8::from(failed)),
        Err(Stop::Input(message)) => {
            eprintln!("error: {message}");
            return 2;
        }
        Err(Stop::Verification(mut report, message)) => {
            eprintln!("error: {message}");
            report.insert("error".into(), json!(message));
            (report, 1)
        }
    };
    let text = match cli.format {
        Format::Json => {
            let mut t = serde_json::to_string_pretty(&Value::Object(body)).expect("serializable");
            t.push('\n');
            t
        }
        Format::Table => table::render(&Value::Object(body)),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    code
}

fn execute(cli: &Cli) -> Result<(Map<String, Value>, bool), Stop> {
    if cli.max_degree < 0 {
        return Err(Stop::Input(format!(
            "--max-degree must be non-negative, got {}",
            cli.max_degree
        )));
    }
    if cli.max_degree > cli.degree_cap {
        return Err(Stop::Input(format!(
            "--max-degree {} exceeds the cap {} (raise it with --degree-cap)",
            cli.max_degree, cli.degree_cap
        )));
    }
    if let Command::Catalog { name } = &cli.command {
        return catalog_command(cli, name.as_deref().or(cli.catalog.as_deref()));
    }
    let source = load(cli)?;
    let central = resolve_central(cli, &source)?;
    let mut out = Map::new();
    out.insert("config".into(), config_value(cli, &source, &central));
    let s = &source.structure;
    let n = cli.max_degree;

    if cli.command == Command::Verify {
        let v = report::verify_report(s);
        let failed = v["graded"] != true || v["jacobi"] != true;
        out.insert("verify".into(), v);
        return Ok((out, failed));
    }
    if cli.command == Command::Report {
        let failed = full_report(cli, &source, &central, &mut out);
        return Ok((out, failed));
    }

    if let Err(e) = s.require_graded().and_then(|_| s.require_poisson()) {
        out.insert("verify".into(), report::verify_report(s));
        return Err(Stop::Verification(out, e.to_string()));
    }
    let result = match &cli.command {
        Command::Modular => report::modular_report(s),
        Command::Unimodularize => report::unimodularize_report(s),
        Command::Twist => {
            let delta = load_derivation(cli, &source)?;
            report::twist_report(s, &delta)
        }
        Command::Rgt => report::rgt_report(s),
        Command::Derivations => solver::verdicts(s, n, &central).map(|v| report::solver_report(&v)),
        Command::Center => center_report(s, n),
        Command::Cohomology => {
            cohomology::cohomology_window(s, n).map(|w| report::cohomology_report(&w))
        }
        Command::Verify | Command::Report | Command::Catalog { .. } => unreachable!(),
    };
    match result {
        Ok(v) => {
            out.insert(command_name(&cli.command).into(), v);
            Ok((out, false))
        }
        Err(e) if is_verification_error(&e) => Err(Stop::Verification(out, e.to_string())),
        Err(e) => Err(Stop::Input(e.to_string())),
    }
}

fn load(cli: &Cli) -> Result<Source, Stop> {
    match (&cli.input, &cli.catalog) {
        (Some(path), None) => {
            if !cli.params.is_empty() {
                return Err(Stop::Input("--param applies only to --catalog".into()));
            }
            let text = fs::read_to_string(path)
                .map_err(|e| Stop::Input(format!("cannot read {}: {e}", path.display())))?;
            let doc = document::parse_structure(&text)?;
            Ok(Source {
                structure: doc.structure,
                potential: doc.potential,
                entry: None,
                input: json!({ "path": path.display().to_string() }),
            })
        }
        (None, Some(name)) => {
            let entry = catalog::get(name, &cli.params)?;
            Ok(Source {
                structure: entry.structure.clone(),
                potential: entry.potential.clone(),
                input: json!({ "catalog": name, "params": entry.params }),
                entry: Some(entry),
            })
        }
        (None, None) => Err(Stop::Input(
            "one of --input or --catalog is required".into(),
        )),
        (Some(_), Some(_)) => Err(Stop::Input("--input and --catalog are exclusive".into())),
    }
}

fn resolve_central(cli: &Cli, source: &Source) -> Result<Vec<Poly>, Stop> {
    if !cli.central.is_empty() {
        return cli
            .central
            .iter()
            .map(|t| Poly::parse(t, source.structure.arity()).map_err(Stop::from))
            .collect();
    }
    Ok(source
        .potential
        .iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect())
}

fn config_value(cli: &Cli, source: &Source, central: &[Poly]) -> Value {
    let derivation = match (&cli.derivation, &cli.derivation_name) {
        (Some(p), _) => json!({ "path": p.display().to_string() }),
        (None, Some(name)) => json!({ "name": name }),
        (None, None) => Value::Null,
    };
    json!({
        "command": command_name(&cli.command),
        "input": source.input,
        "max_degree": cli.max_degree,
        "degree_cap": cli.degree_cap,
        "central": central.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "derivation": derivation,
        "format": match cli.format { Format::Json => "json", Format::Table => "table" },
        "out": cli.out.as_ref().map(|p| p.display().to_string()),
    })
}

fn load_derivation(cli: &Cli, source: &Source) -> Result<Derivation, Stop> {
    match (&cli.derivation, &cli.derivation_name) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Stop::Input(format!("cannot read {}: {e}", path.display())))?;
            Ok(document::parse_derivation(
                &text,
                source.structure.grading(),
            )?)
        }
        (None, Some(name)) => source
            .entry
            .as_ref()
            .and_then(|e| e.derivation(name))
            .cloned()
            .ok_or_else(|| Stop::Input(format!("no derivation named `{name}` on this input"))),
        (None, None) => Err(Stop::Input(
            "twist needs --derivation or --derivation-name".into(),
        )),
    }
}

fn center_report(s: &PoissonStructure, n: i64) -> gpoisson::Result<Value> {
    let mut out = Map::new();
    for d in 0..=n {
        let basis = solver::center_basis(s, d)?;
        out.insert(
            d.to_string(),
            json!({
                "dim": basis.len(),
                "basis": basis.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            }),
        );
    }
    Ok(Value::Object(out))
}

fn section(r: gpoisson::Result<Value>) -> Value {
    r.unwrap_or_else(|e| json!({ "error": e.to_string() }))
}

/// Runs every applicable computation; returns whether anything failed.
fn full_report(cli: &Cli, source: &Source, central: &[Poly], out: &mut Map<String, Value>) -> bool {
    let s = &source.structure;
    let n = cli.max_degree;
    let verify = report::verify_report(s);
    let sound = verify["graded"] == true && verify["jacobi"] == true;
    out.insert(
        "structure".into(),
        structure_to_value(s, source.potential.as_ref()),
    );
    out.insert("verify".into(), verify);
    if !sound {
        return true;
    }
    out.insert("modular".into(), section(report::modular_report(s)));
    let positive = s.grading().is_positive();
    if !positive {
        let skipped = json!({ "skipped": "weights are not all positive" });
        for key in [
            "unimodularize",
            "rgt",
            "derivations",
            "center",
            "cohomology",
        ] {
            out.insert(key.into(), skipped.clone());
        }
    } else {
        out.insert(
            "unimodularize".into(),
            section(report::unimodularize_report(s)),
        );
        out.insert("rgt".into(), section(report::rgt_report(s)));
        out.insert(
            "derivations".into(),
            section(solver::verdicts(s, n, central).map(|v| report::solver_report(&v))),
        );
        out.insert("center".into(), section(center_report(s, n)));
        out.insert(
            "cohomology".into(),
            section(cohomology::cohomology_window(s, n).map(|w| report::cohomology_report(&w))),
        );
    }
    if cli.derivation.is_some() || cli.derivation_name.is_some() {
        let twist = match load_derivation(cli, source) {
            Ok(delta) => section(report::twist_report(s, &delta)),
            Err(Stop::Input(m)) | Err(Stop::Verification(_, m)) => json!({ "error": m }),
        };
        out.insert("twist".into(), twist);
    }
    match &source.entry {
        Some(entry) => {
            let (value, ok) = expectations(entry, out);
            out.insert("expected".into(), value);
            !ok
        }
        None => false,
    }
}

/// Compares the computed report with the entry's recorded expectations.
fn expectations(entry: &CatalogEntry, out: &Map<String, Value>) -> (Value, bool) {
    let mut checks = Map::new();
    let mut ok = true;
    let mut compare = |key: &str, expected: Value, computed: &Value| {
        let matches = &expected == computed;
        ok &= matches;
        checks.insert(
            key.into(),
            json!({ "expected": expected, "computed": computed, "match": matches }),
        );
    };
    if let Some(r) = entry.expected.rgt {
        compare("rgt", json!(r), &out["rgt"]["rgt"]);
    }
    if let Some(u) = entry.expected.unimodular {
        compare("unimodular", json!(u), &out["modular"]["unimodular"]);
    }
    if let Some(m) = &entry.expected.modular {
        compare(
            "modular",
            derivation_to_value(m),
            &out["modular"]["modular"],
        );
    }
    (Value::Object(checks), ok)
}

fn catalog_command(cli: &Cli, name: Option<&str>) -> Result<(Map<String, Value>, bool), Stop> {
    let mut out = Map::new();
    let input = match name {
        Some(n) => json!({ "catalog": n, "params": Value::Object(
            cli.params.iter().map(|(k, v)| (k.clone(), json!(v))).collect()) }),
        None => Value::Null,
    };
    out.insert(
        "config".into(),
        json!({
            "command": "catalog",
            "input": input,
            "format": match cli.format { Format::Json => "json", Format::Table => "table" },
            "out": cli.out.as_ref().map(|p| p.display().to_string()),
        }),
    );
    match name {
        None => {
            let list: Map<String, Value> = catalog::ENTRIES
                .iter()
                .map(|(n, d)| (n.to_string(), json!(d)))
                .collect();
            out.insert("catalog".into(), Value::Object(list));
        }
        Some(n) => {
            let e = catalog::get(n, &cli.params)?;
            out.insert("catalog".into(), entry_value(&e));
        }
    }
    Ok((out, false))
}

fn entry_value(e: &CatalogEntry) -> Value {
    let derivations: Map<String, Value> = e
        .derivations
        .iter()
        .map(|(n, d)| (n.clone(), derivation_to_value(d)))
        .collect();
    json!({
        "name": e.name,
        "label": e.label(),
        "params": e.params,
        "structure": structure_to_value(&e.structure, e.potential.as_ref()),
        "derivations": derivations,
        "expected": {
            "rgt": e.expected.rgt,
            "unimodular": e.expected.unimodular,
            "modular": e.expected.modular.as_ref().map(derivation_to_value),
        },
        "flags": e.flags,
        "provenance": e.provenance,
    })
}
