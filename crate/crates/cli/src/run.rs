//! Command dispatch: every command produces its output as bytes, so the
//! binary and the tests share one deterministic code path.
//!
//! JSON output is an envelope carrying the tool version, the resolved run
//! configuration, and the sha256 digest of every input file — everything
//! needed to reproduce the run, and nothing volatile, so identical
//! configurations yield byte-identical output. Text output renders the
//! result alone.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use epicalc_core::axioms::{
    self, AxiomId, AxiomTable, AxiomVerdict, IdempotentMinReport, NoGoReport, Status,
};
use epicalc_core::calculus::{fuse_all, CalcRef};
use epicalc_core::error::Error;
use epicalc_core::hypotheses::{
    transport, EnrichmentReport, HypothesisGraph, TransportOptions,
};
use epicalc_core::instances::InstanceId;
use epicalc_core::maps::{self, CalculusMap, MapClassification, MapLawVerdict};
use epicalc_core::tolerance::{Region, Tolerance};
use epicalc_core::updating::{self, UpdateResult};
use epicalc_core::value::CalcValue;
use serde::Serialize;

use crate::args::{Cli, Command, FormatArg, RegionArg, RunConfig};
use crate::io::{canonical_json, load_graph, parse_value_arg, GraphDoc, ValueRepr};

/// Exit code 2: malformed input — arguments, files, value syntax.
pub const EXIT_PARSE: i32 = 2;
/// Exit code 3: structurally valid input that fails a precondition.
pub const EXIT_PRECONDITION: i32 = 3;
/// Exit code 4: internal failure.
pub const EXIT_INTERNAL: i32 = 4;

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError { code: EXIT_PARSE, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        CliError { code: EXIT_PRECONDITION, message: message.into() }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INTERNAL, message: message.into() }
    }

    /// Treat any library error as an input problem (used while loading).
    pub fn from_parse(e: Error) -> Self {
        CliError::parse(e.to_string())
    }

    /// Classify a library error by kind.
    pub fn from_core(e: Error) -> Self {
        let code = match &e {
            Error::InvalidValue { .. }
            | Error::InvalidGraph { .. }
            | Error::UnknownCalculus { .. }
            | Error::UnknownAxiom { .. }
            | Error::UnknownMap { .. }
            | Error::UnknownObject { .. }
            | Error::EmptyInput => EXIT_PARSE,
            Error::NotClosed { .. }
            | Error::NotConservative { .. }
            | Error::NotComplete { .. }
            | Error::PreconditionUnmet { .. }
            | Error::MismatchedCalculi { .. }
            | Error::CalculusMismatch { .. }
            | Error::HomUnavailable { .. }
            | Error::BoundaryValue { .. }
            | Error::NonPositiveInput { .. } => EXIT_PRECONDITION,
            Error::NoWitness { .. } => EXIT_INTERNAL,
        };
        CliError { code, message: e.to_string() }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

fn tolerance(run: &RunConfig) -> Tolerance {
    Tolerance {
        eps: run.eps,
        grid_resolution: run.grid,
        sample_count: run.samples,
        seed: run.seed,
    }
}

fn region_override(run: &RunConfig) -> Option<Region> {
    run.region.map(|r| match r {
        RegionArg::Interior => Region::Interior,
        RegionArg::Full => Region::Full,
    })
}

#[derive(Serialize)]
struct ConfigEcho {
    eps: f64,
    grid: u32,
    samples: u32,
    seed: u64,
    region: String,
    format: String,
}

impl ConfigEcho {
    fn new(run: &RunConfig) -> Self {
        ConfigEcho {
            eps: run.eps,
            grid: run.grid,
            samples: run.samples,
            seed: run.seed,
            region: match run.region {
                None => String::from("auto"),
                Some(RegionArg::Interior) => String::from("interior"),
                Some(RegionArg::Full) => String::from("full"),
            },
            format: match run.format {
                FormatArg::Json => String::from("json"),
                FormatArg::Text => String::from("text"),
            },
        }
    }
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    command: &'static str,
    version: &'static str,
    config: ConfigEcho,
    /// Input file path → sha256 of its bytes.
    inputs: BTreeMap<String, String>,
    result: T,
}

fn reprs(values: &[CalcValue]) -> Vec<ValueRepr> {
    values.iter().map(ValueRepr::from_value).collect()
}

#[derive(Serialize)]
struct VerdictJson {
    status: &'static str,
    region: String,
    counterexample: Option<Vec<ValueRepr>>,
    notes: String,
}

impl VerdictJson {
    fn new(v: &AxiomVerdict) -> Self {
        VerdictJson {
            status: v.status.name(),
            region: v.region.to_string(),
            counterexample: v.counterexample.as_deref().map(reprs),
            notes: v.witness_notes.clone(),
        }
    }
}

fn table_json(table: &AxiomTable) -> BTreeMap<String, BTreeMap<&'static str, VerdictJson>> {
    table
        .rows
        .iter()
        .map(|(calculus, row)| {
            let row = row.iter().map(|(a, v)| (a.name(), VerdictJson::new(v))).collect();
            (calculus.clone(), row)
        })
        .collect()
}

#[derive(Serialize)]
struct LawJson {
    holds: bool,
    counterexample: Option<Vec<ValueRepr>>,
}

impl LawJson {
    fn new(v: &MapLawVerdict) -> Self {
        LawJson { holds: v.holds, counterexample: v.counterexample.as_deref().map(reprs) }
    }
}

#[derive(Serialize)]
struct ClassificationJson {
    map: String,
    source: String,
    target: String,
    summary: &'static str,
    monotone: LawJson,
    lax: LawJson,
    oplax: LawJson,
    lax_unit: LawJson,
    oplax_unit: LawJson,
}

impl ClassificationJson {
    fn new(f: &CalculusMap, c: &MapClassification) -> Self {
        ClassificationJson {
            map: c.map.clone(),
            source: String::from(f.source().id()),
            target: String::from(f.target().id()),
            summary: c.summary.name(),
            monotone: LawJson::new(&c.monotone),
            lax: LawJson::new(&c.lax),
            oplax: LawJson::new(&c.oplax),
            lax_unit: LawJson::new(&c.lax_unit),
            oplax_unit: LawJson::new(&c.oplax_unit),
        }
    }
}

#[derive(Serialize)]
struct IdentityViolationJson {
    object: String,
    found: ValueRepr,
    unit: ValueRepr,
}

#[derive(Serialize)]
struct CompositionViolationJson {
    from: String,
    via: String,
    to: String,
    fused: ValueRepr,
    declared: ValueRepr,
}

#[derive(Serialize)]
struct ValidationJson {
    mode: &'static str,
    valid: bool,
    identity_violations: Vec<IdentityViolationJson>,
    composition_violations: Vec<CompositionViolationJson>,
}

impl ValidationJson {
    fn new(report: &EnrichmentReport) -> Self {
        ValidationJson {
            mode: report.mode.name(),
            valid: report.is_valid(),
            identity_violations: report
                .identity_violations
                .iter()
                .map(|v| IdentityViolationJson {
                    object: v.object.clone(),
                    found: ValueRepr::from_value(&v.found),
                    unit: ValueRepr::from_value(&v.unit),
                })
                .collect(),
            composition_violations: report
                .composition_violations
                .iter()
                .map(|v| CompositionViolationJson {
                    from: v.from.clone(),
                    via: v.via.clone(),
                    to: v.to.clone(),
                    fused: ValueRepr::from_value(&v.fused),
                    declared: ValueRepr::from_value(&v.declared),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct ProvenanceJson {
    from: String,
    to: String,
    prior: ValueRepr,
    to_evidence: ValueRepr,
    from_evidence: ValueRepr,
    updated: ValueRepr,
}

#[derive(Serialize)]
struct NoGoJson {
    calculus: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e4: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e5: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e7: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e8: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    no_go_consistent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closure_iff_fallibility: Option<bool>,
    violations: Vec<String>,
}

impl NoGoJson {
    fn checked(r: &NoGoReport) -> Self {
        NoGoJson {
            calculus: r.calculus.clone(),
            skipped: None,
            e4: Some(r.e4.name()),
            e5: Some(r.e5.name()),
            e7: Some(r.e7.name()),
            e8: Some(r.e8.name()),
            no_go_consistent: Some(r.no_go_consistent),
            closure_iff_fallibility: Some(r.closure_iff_fallibility),
            violations: r.violations.clone(),
        }
    }

    fn skipped(calculus: &str, reason: String) -> Self {
        NoGoJson {
            calculus: String::from(calculus),
            skipped: Some(reason),
            e4: None,
            e5: None,
            e7: None,
            e8: None,
            no_go_consistent: None,
            closure_iff_fallibility: None,
            violations: Vec::new(),
        }
    }
}

#[derive(Serialize)]
struct IdempotentMinJson {
    calculus: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    unmet_hypothesis: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<Vec<ValueRepr>>,
}

impl IdempotentMinJson {
    fn checked(r: &IdempotentMinReport) -> Self {
        IdempotentMinJson {
            calculus: r.calculus.clone(),
            unmet_hypothesis: None,
            detail: None,
            holds: Some(r.holds()),
            samples: Some(r.samples),
            counterexample: r.counterexample.as_deref().map(reprs),
        }
    }

    fn unmet(calculus: &str, hypothesis: String, detail: String) -> Self {
        IdempotentMinJson {
            calculus: String::from(calculus),
            unmet_hypothesis: Some(hypothesis),
            detail: Some(detail),
            holds: None,
            samples: None,
            counterexample: None,
        }
    }
}

fn parse_calculi(names: &[String], eps: f64) -> Result<Vec<(InstanceId, CalcRef)>, CliError> {
    if names.is_empty() {
        return Ok(epicalc_core::instances::all_instances(eps));
    }
    let mut out: Vec<(InstanceId, CalcRef)> = Vec::new();
    for name in names {
        let id: InstanceId = name.parse().map_err(CliError::from_parse)?;
        if !out.iter().any(|(seen, _)| *seen == id) {
            out.push((id, id.build(eps)));
        }
    }
    Ok(out)
}

fn build_table(
    calculi: &[(InstanceId, CalcRef)],
    t: &Tolerance,
    region: Option<Region>,
) -> AxiomTable {
    let mut rows = BTreeMap::new();
    for (_, c) in calculi {
        let mut row = BTreeMap::new();
        for axiom in AxiomId::ALL {
            let at = region.unwrap_or_else(|| axioms::default_region(c.as_ref(), axiom));
            row.insert(axiom, axioms::check_axiom(c.as_ref(), axiom, t, at));
        }
        rows.insert(String::from(c.id()), row);
    }
    AxiomTable { rows }
}

fn render_table_text(table: &AxiomTable) -> String {
    let mut out = String::new();
    let mut any_interior = false;
    let _ = write!(out, "{:<10}", "calculus");
    for axiom in AxiomId::ALL {
        let _ = write!(out, "{:>6}", axiom.name());
    }
    out.push('\n');
    for (calculus, row) in &table.rows {
        let _ = write!(out, "{calculus:<10}");
        for axiom in AxiomId::ALL {
            let v = &row[&axiom];
            let mut mark = String::from(match v.status {
                Status::HoldsSampled | Status::HoldsStructural => "+",
                Status::Fails => "-",
                Status::NotApplicable => ".",
            });
            if v.region == Region::Interior {
                mark.push('*');
                any_interior = true;
            }
            let _ = write!(out, "{mark:>6}");
        }
        out.push('\n');
    }
    if any_interior {
        out.push_str("\n* verified on the interior of the carrier; boundary poles excluded\n");
    }
    let mut failures: Vec<String> = Vec::new();
    for (calculus, row) in &table.rows {
        for axiom in AxiomId::ALL {
            let v = &row[&axiom];
            if v.status == Status::Fails {
                if let Some(cx) = &v.counterexample {
                    let parts: Vec<String> = cx.iter().map(|x| x.to_string()).collect();
                    failures.push(format!("{calculus} {}: [{}]", axiom.name(), parts.join(", ")));
                }
            }
        }
    }
    if !failures.is_empty() {
        out.push_str("\ncounterexamples:\n");
        for line in failures {
            let _ = writeln!(out, "  {line}");
        }
    }
    out
}

fn render_classification_text(json: &ClassificationJson) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "map {} ({} -> {}): {}",
        json.map, json.source, json.target, json.summary
    );
    for (law, v) in [
        ("monotone", &json.monotone),
        ("lax", &json.lax),
        ("oplax", &json.oplax),
        ("lax_unit", &json.lax_unit),
        ("oplax_unit", &json.oplax_unit),
    ] {
        let verdict = if v.holds { "holds" } else { "fails" };
        let _ = write!(out, "  {law:<12}{verdict}");
        if let Some(cx) = &v.counterexample {
            let parts: Vec<String> = cx
                .iter()
                .map(|r| match r.to_value() {
                    Ok(v) => v.to_string(),
                    Err(_) => String::from("?"),
                })
                .collect();
            let _ = write!(out, "  counterexample: [{}]", parts.join(", "));
        }
        out.push('\n');
    }
    out
}

fn render_validation_text(graph: &HypothesisGraph, report: &EnrichmentReport) -> String {
    let mut out = String::new();
    let verdict = if report.is_valid() { "VALID" } else { "INVALID" };
    let _ = writeln!(
        out,
        "{} graph, {} mode, {} objects: {verdict}",
        graph.calculus().id(),
        report.mode.name(),
        graph.object_count()
    );
    for v in &report.identity_violations {
        let _ = writeln!(
            out,
            "  identity at {}: found {}, unit is {}",
            v.object, v.found, v.unit
        );
    }
    for v in &report.composition_violations {
        let _ = writeln!(
            out,
            "  composition ({}, {}, {}): fused {} vs declared {}",
            v.from, v.via, v.to, v.fused, v.declared
        );
    }
    out
}

fn render_graph_text(g: &HypothesisGraph) -> String {
    let mut out = String::new();
    for (from, to, v) in g.entries() {
        let _ = writeln!(out, "  {from} -> {to}: {v}");
    }
    out
}

struct Output {
    json: serde_json::Value,
    text: String,
}

fn envelope<T: Serialize>(
    command: &'static str,
    run: &RunConfig,
    inputs: BTreeMap<String, String>,
    result: T,
) -> Result<serde_json::Value, CliError> {
    let env = Envelope {
        command,
        version: env!("CARGO_PKG_VERSION"),
        config: ConfigEcho::new(run),
        inputs,
        result,
    };
    serde_json::to_value(&env).map_err(|e| CliError::internal(format!("serialization failed: {e}")))
}

fn run_command(cli: &Cli) -> Result<Output, CliError> {
    let t = tolerance(&cli.run);
    let no_inputs = BTreeMap::new();
    match &cli.command {
        Command::Axioms { calculi } => {
            let calculi = parse_calculi(calculi, cli.run.eps)?;
            let table = build_table(&calculi, &t, region_override(&cli.run));
            Ok(Output {
                json: envelope("axioms", &cli.run, no_inputs, table_json(&table))?,
                text: render_table_text(&table),
            })
        }

        Command::Fuse { calculus, values } => {
            let id: InstanceId = calculus.parse().map_err(CliError::from_parse)?;
            let c = id.build(cli.run.eps);
            let mut parsed = Vec::with_capacity(values.len());
            for raw in values {
                parsed.push(parse_value_arg(raw)?);
            }
            let fused = fuse_all(c.as_ref(), &parsed).map_err(CliError::from_core)?;
            #[derive(Serialize)]
            struct FuseJson {
                calculus: String,
                values: Vec<ValueRepr>,
                fused: ValueRepr,
            }
            let result = FuseJson {
                calculus: String::from(c.id()),
                values: reprs(&parsed),
                fused: ValueRepr::from_value(&fused),
            };
            Ok(Output {
                json: envelope("fuse", &cli.run, no_inputs, result)?,
                text: format!("{fused}\n"),
            })
        }

        Command::Classify { map } => {
            let f = maps::builtin(map, cli.run.eps).map_err(CliError::from_core)?;
            let classification = maps::classify(&f, &t);
            let result = ClassificationJson::new(&f, &classification);
            let text = render_classification_text(&result);
            Ok(Output { json: envelope("classify", &cli.run, no_inputs, result)?, text })
        }

        Command::Transport { map, graph, override_liberal_transport } => {
            let f = maps::builtin(map, cli.run.eps).map_err(CliError::from_core)?;
            let (g, digest) = load_graph(graph, cli.run.eps)?;
            let options = TransportOptions { allow_liberal: *override_liberal_transport };
            let moved = transport(&g, &f, &t, options).map_err(CliError::from_core)?;
            #[derive(Serialize)]
            struct TransportJson {
                classification: ClassificationJson,
                graph: GraphDoc,
                validation: ValidationJson,
            }
            let result = TransportJson {
                classification: ClassificationJson::new(&f, &moved.classification),
                graph: GraphDoc::from_graph(&moved.graph),
                validation: ValidationJson::new(&moved.validation),
            };
            let mut inputs = BTreeMap::new();
            inputs.insert(graph.display().to_string(), digest);
            let mut text = format!(
                "transported along {} ({}) into {}:\n",
                f.name(),
                moved.classification.summary,
                moved.graph.calculus().id()
            );
            text.push_str(&render_graph_text(&moved.graph));
            text.push_str(&render_validation_text(&moved.graph, &moved.validation));
            Ok(Output { json: envelope("transport", &cli.run, inputs, result)?, text })
        }

        Command::Update { graph, evidence } => {
            let (g, digest) = load_graph(graph, cli.run.eps)?;
            let updated: UpdateResult =
                updating::v_update(&g, evidence).map_err(CliError::from_core)?;
            #[derive(Serialize)]
            struct UpdateJson {
                evidence: String,
                graph: GraphDoc,
                provenance: Vec<ProvenanceJson>,
                validation: ValidationJson,
            }
            let result = UpdateJson {
                evidence: updated.evidence.clone(),
                graph: GraphDoc::from_graph(&updated.graph),
                provenance: updated
                    .provenance
                    .iter()
                    .map(|p| ProvenanceJson {
                        from: p.from.clone(),
                        to: p.to.clone(),
                        prior: ValueRepr::from_value(&p.prior),
                        to_evidence: ValueRepr::from_value(&p.to_evidence),
                        from_evidence: ValueRepr::from_value(&p.from_evidence),
                        updated: ValueRepr::from_value(&p.updated),
                    })
                    .collect(),
                validation: ValidationJson::new(&updated.validation),
            };
            let mut inputs = BTreeMap::new();
            inputs.insert(graph.display().to_string(), digest);
            let mut text = format!("updated against {}:\n", updated.evidence);
            text.push_str(&render_graph_text(&updated.graph));
            text.push_str(&render_validation_text(&updated.graph, &updated.validation));
            Ok(Output { json: envelope("update", &cli.run, inputs, result)?, text })
        }

        Command::Validate { graph } => {
            let (g, digest) = load_graph(graph, cli.run.eps)?;
            let report = g.validate_enrichment();
            #[derive(Serialize)]
            struct ValidateJson {
                calculus: String,
                objects: usize,
                validation: ValidationJson,
            }
            let result = ValidateJson {
                calculus: String::from(g.calculus().id()),
                objects: g.object_count(),
                validation: ValidationJson::new(&report),
            };
            let mut inputs = BTreeMap::new();
            inputs.insert(graph.display().to_string(), digest);
            let text = render_validation_text(&g, &report);
            Ok(Output { json: envelope("validate", &cli.run, inputs, result)?, text })
        }

        Command::Report { calculi } => {
            let calculi = parse_calculi(calculi, cli.run.eps)?;
            let table = build_table(&calculi, &t, region_override(&cli.run));

            let mut no_go = Vec::new();
            let mut idempotent = Vec::new();
            for (_, c) in &calculi {
                match axioms::check_no_go(c, &t) {
                    Ok(r) => no_go.push(NoGoJson::checked(&r)),
                    Err(Error::PreconditionUnmet { detail, .. }) => {
                        no_go.push(NoGoJson::skipped(c.id(), detail));
                    }
                    Err(e) => return Err(CliError::from_core(e)),
                }
                match axioms::check_idempotent_min(c, &t) {
                    Ok(r) => idempotent.push(IdempotentMinJson::checked(&r)),
                    Err(Error::PreconditionUnmet { hypothesis, detail }) => {
                        idempotent.push(IdempotentMinJson::unmet(c.id(), hypothesis, detail));
                    }
                    Err(e) => return Err(CliError::from_core(e)),
                }
            }

            let mut map_reports = Vec::new();
            for name in maps::BUILTIN_MAPS {
                let f = maps::builtin(name, cli.run.eps).map_err(CliError::from_core)?;
                let classification = maps::classify(&f, &t);
                map_reports.push(ClassificationJson::new(&f, &classification));
            }

            let mut text = render_table_text(&table);
            text.push('\n');
            for entry in &no_go {
                match &entry.skipped {
                    Some(reason) => {
                        let _ = writeln!(text, "no-go {}: skipped ({reason})", entry.calculus);
                    }
                    None => {
                        let _ = writeln!(
                            text,
                            "no-go {}: consistent={} closure-iff-fallibility={}",
                            entry.calculus,
                            entry.no_go_consistent.unwrap_or(false),
                            entry.closure_iff_fallibility.unwrap_or(false)
                        );
                    }
                }
            }
            for entry in &idempotent {
                match &entry.unmet_hypothesis {
                    Some(h) => {
                        let _ = writeln!(
                            text,
                            "idempotent-min {}: hypothesis unmet ({h})",
                            entry.calculus
                        );
                    }
                    None => {
                        let _ = writeln!(
                            text,
                            "idempotent-min {}: {}",
                            entry.calculus,
                            if entry.holds == Some(true) { "fusion is min" } else { "counterexample found" }
                        );
                    }
                }
            }
            text.push('\n');
            for report in &map_reports {
                let _ = writeln!(
                    text,
                    "map {} ({} -> {}): {}",
                    report.map, report.source, report.target, report.summary
                );
            }

            #[derive(Serialize)]
            struct ReportJson {
                axioms: BTreeMap<String, BTreeMap<&'static str, VerdictJson>>,
                no_go: Vec<NoGoJson>,
                idempotent_min: Vec<IdempotentMinJson>,
                maps: Vec<ClassificationJson>,
            }
            let result = ReportJson {
                axioms: table_json(&table),
                no_go,
                idempotent_min: idempotent,
                maps: map_reports,
            };
            Ok(Output { json: envelope("report", &cli.run, no_inputs, result)?, text })
        }
    }
}

/// Execute a parsed command line and return the bytes to emit.
pub fn run(cli: &Cli) -> Result<Vec<u8>, CliError> {
    let output = run_command(cli)?;
    match cli.run.format {
        FormatArg::Json => Ok(canonical_json(&output.json)?.into_bytes()),
        FormatArg::Text => Ok(output.text.into_bytes()),
    }
}
