//! Command implementations behind the `scissors` binary.
//!
//! Every command takes file contents and returns a [`Report`] carrying the
//! exit code: 0 on success, 1 when a verification fails, 2 for unreadable or
//! malformed input and 3 when a sign could not be decided at the precision
//! cap.

mod render;
mod scenario;

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::covercat::{k0, CatError, FinCatFam, K0Class, DEFAULT_CLOSURE_BOUND};
use crate::exactnum::{ExactError, ExactReal};
use crate::geometry::{verify_cover, CoverError, GeometryError, Isometry};
use crate::measures::{universal_check, verify_measure, Measure, MeasureError};
use crate::trace::{chain_to_json, trace_automorphism, trace_terms, TraceError, WordElement};

pub use render::{count_pieces, piece_colour, render_svg};
pub use scenario::{Scenario, SCENARIO_VERSION};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Parse(String),
    Verification(String),
    Undecidable(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Undecidable(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Verification(_) => "verification",
            CliError::Parse(_) => "parse",
            CliError::Undecidable(_) => "undecidable-sign",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Verification(m) | CliError::Undecidable(m) => m,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} error: {}", self.kind(), self.message())
    }
}

impl std::error::Error for CliError {}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        match e {
            ExactError::UndecidableSign { .. } => CliError::Undecidable(e.to_string()),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Exact(x) => x.into(),
            _ => CliError::Parse(e.to_string()),
        }
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::Exact(x) => x.into(),
            CoverError::Geometry(g) => g.into(),
            CoverError::Overlap(i, j) => CliError::Verification(format!("Overlap({i},{j}): {e}")),
            _ => CliError::Verification(e.to_string()),
        }
    }
}

impl From<MeasureError> for CliError {
    fn from(e: MeasureError) -> Self {
        match e {
            MeasureError::Geometry(g) => g.into(),
            MeasureError::Unknown(_) | MeasureError::GeometryMismatch { .. } => CliError::Parse(e.to_string()),
            MeasureError::NotEquivariant { .. } => CliError::Verification(e.to_string()),
        }
    }
}

impl From<CatError> for CliError {
    fn from(e: CatError) -> Self {
        match e {
            CatError::Cover(c) => c.into(),
            CatError::Parse(_) | CatError::Invalid(_) => CliError::Parse(e.to_string()),
            _ => CliError::Verification(e.to_string()),
        }
    }
}

impl From<TraceError> for CliError {
    fn from(e: TraceError) -> Self {
        match e {
            TraceError::Cover(c) => c.into(),
            TraceError::Measure(m) => m.into(),
            TraceError::Category(c) => c.into(),
            _ => CliError::Verification(e.to_string()),
        }
    }
}

/// Flags shared by all commands.
#[derive(Clone, Debug)]
pub struct Options {
    pub json: bool,
    pub precision_bits: Option<u32>,
    pub seed: u64,
    pub bound: usize,
    pub measure: Option<String>,
}

impl Default for Options {
    fn default() -> Self {
        Self { json: false, precision_bits: None, seed: 1, bound: DEFAULT_CLOSURE_BOUND, measure: None }
    }
}

/// Human-readable text, a JSON document and an exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Self { code: 0, text, json }
    }

    pub fn from_error(e: &CliError) -> Self {
        Self {
            code: e.exit_code(),
            text: e.to_string(),
            json: json!({ "status": "error", "kind": e.kind(), "message": e.message() }),
        }
    }

    pub fn output(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.json).expect("serializable") + "\n"
        } else if self.text.ends_with('\n') {
            self.text.clone()
        } else {
            format!("{}\n", self.text)
        }
    }
}

fn finish(r: Result<Report, CliError>) -> Report {
    r.unwrap_or_else(|e| Report::from_error(&e))
}

fn measure_for(s: &Scenario, opts: &Options) -> Result<Measure, CliError> {
    let name = opts.measure.as_deref().unwrap_or(&s.measure);
    if name == "universal" {
        return Err(CliError::Parse("the universal measure is evaluated on category files by check-measure".into()));
    }
    Ok(Measure::from_str(name)?)
}

fn header(s: &Scenario) -> String {
    format!("scenario {}: {} on {}, {} pieces", s.name, s.kind, s.kind.geometry(), s.pieces.len())
}

/// Both placements are checked even when the first fails; the first failure
/// sets the exit code.
pub fn verify(text: &str, opts: &Options) -> Report {
    finish((|| {
        let s = Scenario::parse_with(text, opts.precision_bits)?;
        let mut lines = vec![header(&s)];
        let mut placements = serde_json::Map::new();
        let mut first_error: Option<CliError> = None;
        for (label, side) in [("base", false), ("move", true)] {
            match verify_cover(&s.placements(side), &s.target, &s.table) {
                Ok(cert) => {
                    lines.push(format!(
                        "{label} placement: verified (contained, disjoint, balanced), measure {}",
                        cert.target().measure()
                    ));
                    placements.insert(
                        label.into(),
                        json!({ "status": "verified", "measure": cert.target().measure().to_expr() }),
                    );
                }
                Err(e) => {
                    let e = CliError::from(e);
                    lines.push(format!("{label} placement: {e}"));
                    placements.insert(label.into(), json!({ "status": "failed", "kind": e.kind(), "message": e.message() }));
                    first_error.get_or_insert(e);
                }
            }
        }
        let code = first_error.as_ref().map_or(0, CliError::exit_code);
        let status = first_error.as_ref().map_or("verified", |e| e.kind());
        Ok(Report {
            code,
            text: lines.join("\n"),
            json: json!({
                "scenario": s.name,
                "group": s.kind.name(),
                "geometry": s.kind.geometry().to_string(),
                "pieces": s.pieces.len(),
                "placements": placements,
                "status": status,
            }),
        })
    })())
}

fn value_display(v: &ExactReal) -> String {
    if v.len() > 1 {
        format!("({v})")
    } else {
        v.to_string()
    }
}

fn terms_display(terms: &[(Vec<Isometry>, ExactReal)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = terms
        .iter()
        .map(|(w, v)| {
            let word: Vec<String> = w.iter().map(ToString::to_string).collect();
            format!("[{}]⊗{}", word.join("|"), value_display(v))
        })
        .collect();
    parts.join(" + ")
}

fn terms_json(terms: &[(Vec<Isometry>, ExactReal)]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|(w, v)| json!({ "word": w.iter().map(WordElement::to_json).collect::<Vec<_>>(), "value": v.to_expr() }))
            .collect(),
    )
}

/// Traces the move and base simplices piece by piece, then reduces their
/// difference to a class in `H₁`.
pub fn trace(text: &str, opts: &Options) -> Report {
    finish((|| {
        let s = Scenario::parse_with(text, opts.precision_bits)?;
        let mu = measure_for(&s, opts)?;
        let auto = s.automorphism()?;
        let cat = auto.category();
        let moved = trace_terms(&cat, &auto.move_simplex()?, &mu)?;
        let base = trace_terms(&cat, &auto.base_simplex()?, &mu)?;
        let (chain, class) = trace_automorphism(&auto, &mu)?;
        let chain_display = format!("({}) − ({})", terms_display(&moved), terms_display(&base));
        let text = [
            header(&s),
            format!("measure: {mu}"),
            format!("T(move) = {}", terms_display(&moved)),
            format!("T(base) = {}", terms_display(&base)),
            format!("chain   = {chain_display}"),
            format!("reduced = {chain}"),
            format!("class   = {class}"),
            format!("nonzero = {}", !class.is_zero()),
        ]
        .join("\n");
        Ok(Report::ok(
            text,
            json!({
                "scenario": s.name,
                "group": s.kind.name(),
                "measure": mu.name(),
                "move_terms": terms_json(&moved),
                "base_terms": terms_json(&base),
                "chain_display": chain_display,
                "chain": chain_to_json(&chain),
                "class": class.to_json(),
                "class_display": class.to_string(),
                "nonzero": !class.is_zero(),
            }),
        ))
    })())
}

fn category(text: &str) -> Result<FinCatFam, CliError> {
    Ok(FinCatFam::from_json(text)?)
}

fn class_table(c: &FinCatFam) -> Vec<(String, K0Class)> {
    let p = k0(c);
    p.generators.iter().zip(&p.names).map(|(&g, n)| (n.clone(), p.class_of(g).expect("generator"))).collect()
}

/// `K₀` of a finite category file: invariant factors and the class of every
/// object. Categories failing the bounded validation are rejected with
/// exit code 1.
pub fn k0_command(text: &str, opts: &Options) -> Report {
    finish((|| {
        let c = category(text)?;
        let report = c.validate(opts.bound);
        if !report.is_valid() {
            let problems: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
            return Err(CliError::Verification(format!("invalid category: {}", problems.join("; "))));
        }
        let p = k0(&c);
        let classes = class_table(&c);
        let mut lines = vec![
            format!("category {}: {} objects, {} families", c.name(), c.object_count(), c.families().len()),
            format!("K0 = {}", p.group_string()),
            format!("invariant factors: {}", p.smith.diagonal.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")),
        ];
        lines.extend(classes.iter().map(|(n, k)| format!("[{n}] = {k}")));
        Ok(Report::ok(
            lines.join("\n"),
            json!({
                "category": c.name(),
                "group": p.group_string(),
                "invariant_factors": p.smith.diagonal.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "moduli": p.moduli().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "classes": classes.iter().map(|(n, k)| (n.clone(), json!(k.to_string()))).collect::<serde_json::Map<_, _>>(),
            }),
        ))
    })())
}

fn check_category_measure(text: &str, raw: &Value) -> Result<Report, CliError> {
    let c = category(text)?;
    let p = k0(&c);
    let classes = class_table(&c);
    let class = |obj: usize| classes[p.generators.iter().position(|&g| g == obj).expect("generator")].1.clone();
    let mut additive = 0;
    let mut failures = Vec::new();
    for (i, fam) in c.families().iter().enumerate() {
        if fam.target == c.basepoint() {
            continue;
        }
        let sum = fam
            .maps
            .iter()
            .map(|&m| c.source_of(m))
            .filter(|&s| s != c.basepoint())
            .fold(p.zero_class(), |acc, s| acc.add(&class(s)));
        if sum == class(fam.target) {
            additive += 1;
        } else {
            failures.push(i);
        }
    }
    let mut lines = vec![
        format!("category {}: K0 = {}", c.name(), p.group_string()),
        format!("universal measure: additive on {additive} of {} families", additive + failures.len()),
    ];
    let mut out = json!({
        "category": c.name(),
        "group": p.group_string(),
        "universal": { "additive_families": additive, "failures": failures },
    });
    let mut code = if failures.is_empty() { 0 } else { 1 };
    if let Some(values) = raw.get("measure").and_then(Value::as_object) {
        let mut mu = Vec::new();
        for g in c.proper_objects() {
            let name = c.object_name(g);
            let v = values.get(name).and_then(Value::as_str).ok_or_else(|| CliError::Parse(format!("no measure value for {name:?}")))?;
            mu.push(ExactReal::parse(v)?);
        }
        match universal_check(&c, |i| mu[c.proper_objects().position(|g| g == i).expect("proper")].clone(), &ExactReal::zero()) {
            Ok(f) => {
                let images: Vec<String> = f.images.iter().map(ToString::to_string).collect();
                lines.push(format!("measure factors through K0; images of the canonical generators: [{}]", images.join(", ")));
                out["factorization"] = json!({
                    "moduli": f.moduli.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "images": f.images.iter().map(ExactReal::to_expr).collect::<Vec<_>>(),
                });
            }
            Err(e) => {
                lines.push(format!("measure does not factor: {e}"));
                out["factorization"] = json!({ "error": e.to_string() });
                code = 1;
            }
        }
    }
    out["status"] = json!(if code == 0 { "ok" } else { "failed" });
    Ok(Report { code, text: lines.join("\n"), json: out })
}

fn check_scenario_measure(text: &str, opts: &Options) -> Result<Report, CliError> {
    let s = Scenario::parse_with(text, opts.precision_bits)?;
    let mu = measure_for(&s, opts)?;
    let equivariant = mu.invariant_under().contains(&s.kind);
    let mut lines = vec![header(&s), format!("measure {mu}: declared {}-invariant: {equivariant}", s.kind)];
    let mut out = json!({ "scenario": s.name, "measure": mu.name(), "equivariant": equivariant });
    let mut code = 0;
    for (label, side) in [("base", false), ("move", true)] {
        let cert = verify_cover(&s.placements(side), &s.target, &s.table)?;
        let r = verify_measure(&mu, &cert)?;
        let invariant = cert
            .pieces()
            .iter()
            .zip(cert.moved())
            .map(|((_, p), q)| Ok(mu.eval(p)? == mu.eval(q)?))
            .collect::<Result<Vec<bool>, MeasureError>>()?
            .into_iter()
            .all(|b| b);
        lines.push(format!(
            "{label}: μ(target) = {}, Σ μ(pieces) = {}, additive: {}, invariant on placed pieces: {invariant}",
            r.target,
            &r.target - &r.defect,
            r.holds()
        ));
        if !r.holds() || (equivariant && !invariant) {
            code = 1;
        }
        out[label] = json!({
            "target": r.target.to_expr(),
            "pieces": r.pieces.iter().map(ExactReal::to_expr).collect::<Vec<_>>(),
            "defect": r.defect.to_expr(),
            "additive": r.holds(),
            "invariant": invariant,
        });
    }
    out["status"] = json!(if code == 0 { "ok" } else { "failed" });
    Ok(Report { code, text: lines.join("\n"), json: out })
}

/// Category files get the universal measure (and the factorization of a
/// measure given under `"measure"`); scenarios get additivity of the
/// selected measure on both placements.
pub fn check_measure(text: &str, opts: &Options) -> Report {
    finish((|| {
        let raw: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if raw.get("objects").is_some() {
            check_category_measure(text, &raw)
        } else {
            check_scenario_measure(text, opts)
        }
    })())
}

/// The SVG and a short report.
pub fn render(text: &str, opts: &Options) -> Result<(Report, String), Report> {
    let s = Scenario::parse_with(text, opts.precision_bits).map_err(|e| Report::from_error(&e))?;
    let svg = render_svg(&s);
    let pieces = count_pieces(&svg);
    Ok((
        Report::ok(
            format!("{}\nrendered 3 panels, {pieces} pieces", header(&s)),
            json!({ "scenario": s.name, "panels": 3, "pieces": pieces }),
        ),
        svg,
    ))
}

/// Runs every acceptance criterion.
pub fn selftest(opts: &Options) -> Report {
    let results = crate::acceptance::run_all(opts.seed);
    let passed = results.iter().all(|r| r.passed);
    let text = results.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
    Report {
        code: if passed { 0 } else { 1 },
        text: format!("{text}\n{} of {} criteria passed", results.iter().filter(|r| r.passed).count(), results.len()),
        json: json!({
            "seed": opts.seed,
            "passed": passed,
            "criteria": results.iter().map(|r| json!({
                "id": r.id, "title": r.title, "passed": r.passed, "detail": r.detail, "seconds": r.seconds,
            })).collect::<Vec<_>>(),
        }),
    }
}
