//! Command-line pipeline: convert, validate, stats, and query-compact.
//!
//! Outputs go to `--output` or standard output; every diagnostic goes to
//! standard error, so the tool composes in shells. Exit codes are stable:
//! 0 success, 1 parse/projection error, 2 validation failure, 64 usage
//! error.

use std::collections::BTreeMap;
use std::fs;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analytics::{
    compact_query, compaction_metrics, degree_histogram_rdf, degree_histogram_spg, has_variables,
};
use crate::error::{Error, Result};
use crate::gdf::write_gdf;
use crate::ntriples::parse_ntriples;
use crate::ontology::{load_ontology, validate_graph, OntologySchema, ValidationMode};
use crate::project::{
    project, project_with_mapping, MappingRole, MappingSpec, Projection, ProjectionConfig,
};
use crate::store::{LoadMode, Store, TriplePattern};
use crate::term::RdfGraph;
use crate::turtle::parse_turtle;
use crate::vocab::Vocabulary;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PIPELINE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Input serialization choice; `Auto` resolves from the file extension
/// (`.nt` / `.ttl`) before parsing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatChoice {
    Ntriples,
    Turtle,
    Auto,
}

/// Which histogram views `stats` emits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatsView {
    Rdf,
    Spg,
    Both,
}

/// A fully resolved run: defaults, then config-file values, then
/// command-line flags, later sources winning.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    pub format: FormatChoice,
    pub ontology: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub strict: bool,
    pub keep_names: bool,
    pub view: StatsView,
    pub vocab: Vocabulary,
    pub patterns: Vec<TriplePattern>,
    pub mapping: Option<MappingSpec>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            inputs: Vec::new(),
            format: FormatChoice::Auto,
            ontology: None,
            output: None,
            strict: true,
            keep_names: false,
            view: StatsView::Both,
            vocab: Vocabulary::default(),
            patterns: Vec::new(),
            mapping: None,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "spg",
    version,
    about = "Project reified RDF into semantic property graphs (GDF)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse RDF, project it, and write a GDF property graph
    Convert(CommonArgs),
    /// Project RDF and validate the result against an RDFS ontology
    Validate(CommonArgs),
    /// Emit degree-distribution CSVs and compaction metrics
    Stats(StatsArgs),
    /// Compact a reified query pattern into a GDF query template
    QueryCompact(CommonArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Input RDF file; repeat for a multi-file batch
    #[arg(long, value_name = "PATH")]
    input: Vec<PathBuf>,
    /// Input format (default: auto by extension)
    #[arg(long, value_enum)]
    format: Option<FormatChoice>,
    /// RDFS ontology used for labels and validation
    #[arg(long, value_name = "PATH")]
    ontology: Option<PathBuf>,
    /// Output path; standard output when omitted
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Fail on error diagnostics and validation violations (default)
    #[arg(long, overrides_with = "lenient")]
    strict: bool,
    /// Report problems but keep going
    #[arg(long, overrides_with = "strict")]
    lenient: bool,
    /// Flat key=value configuration file
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Mapping specification for query-driven projection
    #[arg(long, value_name = "PATH")]
    mapping: Option<PathBuf>,
    /// Keep loaded named graphs across the batch; reusing a name merges
    #[arg(long = "keep-names")]
    keep_names: bool,
}

#[derive(Debug, Args)]
struct StatsArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Which view to emit
    #[arg(long, value_enum)]
    view: Option<StatsView>,
}

/// Entry point for the `spg` binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    EXIT_OK
                }
                _ => {
                    eprint!("{e}");
                    EXIT_USAGE
                }
            }
        }
    };
    let (common, view, command): (&CommonArgs, Option<StatsView>, &str) = match &cli.command {
        Command::Convert(c) => (c, None, "convert"),
        Command::Validate(c) => (c, None, "validate"),
        Command::Stats(s) => (&s.common, s.view, "stats"),
        Command::QueryCompact(c) => (c, None, "query-compact"),
    };
    let config = match resolve_config(common, view) {
        Ok(config) => config,
        Err(e) => {
            eprintln!("spg: {e}");
            return exit_code_for(&e);
        }
    };
    match command {
        "convert" => run_convert(&config),
        "validate" => run_validate(&config),
        "stats" => run_stats(&config, config.view),
        _ => run_query_compact(&config),
    }
}

fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::Config(_) => EXIT_USAGE,
        _ => EXIT_PIPELINE,
    }
}

/// Merges defaults, config-file entries, and flags into a `RunConfig`.
fn resolve_config(args: &CommonArgs, view: Option<StatsView>) -> Result<RunConfig> {
    let mut config = RunConfig::default();
    let mut vocab_overrides: BTreeMap<String, String> = BTreeMap::new();

    if let Some(path) = &args.config {
        let entries = read_config_entries(path)?;
        apply_entries(&mut config, &mut vocab_overrides, &entries, path)?;
    }
    if let Some(path) = &args.mapping {
        let entries = read_config_entries(path)?;
        apply_entries(&mut config, &mut vocab_overrides, &entries, path)?;
    }

    // flags win over config-file values
    if !args.input.is_empty() {
        config.inputs = args.input.clone();
    }
    if let Some(format) = args.format {
        config.format = format;
    }
    if let Some(ontology) = &args.ontology {
        config.ontology = Some(ontology.clone());
    }
    if let Some(output) = &args.output {
        config.output = Some(output.clone());
    }
    if args.strict {
        config.strict = true;
    } else if args.lenient {
        config.strict = false;
    }
    if args.keep_names {
        config.keep_names = true;
    }
    if let Some(view) = view {
        config.view = view;
    }

    if !vocab_overrides.is_empty() {
        let defaults = Vocabulary::default();
        let get = |key: &str, fallback: &str| {
            vocab_overrides
                .get(key)
                .cloned()
                .unwrap_or_else(|| fallback.to_string())
        };
        config.vocab = Vocabulary::new(
            get("type", &defaults.rdf_type),
            get("statement", &defaults.statement_class),
            get("subject", &defaults.subject),
            get("predicate", &defaults.predicate),
            get("object", &defaults.object),
        )
        .map_err(|e| Error::Config(format!("invalid vocabulary override: {e}")))?;
    }

    if config.mapping.is_some() && config.patterns.is_empty() {
        return Err(Error::Config(
            "a mapping requires at least one pattern= entry".into(),
        ));
    }
    Ok(config)
}

fn read_config_entries(path: &Path) -> Result<Vec<(String, String)>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    let mut entries = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Config(format!(
                "{}:{}: expected key=value",
                path.display(),
                idx + 1
            )));
        };
        entries.push((key.trim().to_string(), value.trim().to_string()));
    }
    Ok(entries)
}

fn apply_entries(
    config: &mut RunConfig,
    vocab_overrides: &mut BTreeMap<String, String>,
    entries: &[(String, String)],
    path: &Path,
) -> Result<()> {
    let bad = |key: &str, value: &str| {
        Error::Config(format!("{}: bad value '{value}' for '{key}'", path.display()))
    };
    for (key, value) in entries {
        match key.as_str() {
            "input" => config.inputs.push(PathBuf::from(value)),
            "format" => {
                config.format = match value.as_str() {
                    "ntriples" => FormatChoice::Ntriples,
                    "turtle" => FormatChoice::Turtle,
                    "auto" => FormatChoice::Auto,
                    _ => return Err(bad(key, value)),
                }
            }
            "ontology" => config.ontology = Some(PathBuf::from(value)),
            "output" => config.output = Some(PathBuf::from(value)),
            "strictness" => {
                config.strict = match value.as_str() {
                    "strict" => true,
                    "lenient" => false,
                    _ => return Err(bad(key, value)),
                }
            }
            "keep-names" => {
                config.keep_names = match value.as_str() {
                    "true" => true,
                    "false" => false,
                    _ => return Err(bad(key, value)),
                }
            }
            "view" => {
                config.view = match value.as_str() {
                    "rdf" => StatsView::Rdf,
                    "spg" => StatsView::Spg,
                    "both" => StatsView::Both,
                    _ => return Err(bad(key, value)),
                }
            }
            "pattern" => {
                let pattern = TriplePattern::parse(value).map_err(|e| {
                    Error::Config(format!("{}: bad pattern '{value}': {e}", path.display()))
                })?;
                config.patterns.push(pattern);
            }
            key if key.starts_with("vocab.") => {
                vocab_overrides.insert(key["vocab.".len()..].to_string(), value.clone());
            }
            key if key.starts_with("map.") => {
                let var = key["map.".len()..].to_string();
                if var.is_empty() {
                    return Err(Error::Config(format!(
                        "{}: map. entry needs a variable name",
                        path.display()
                    )));
                }
                let mut mapping = config.mapping.take().unwrap_or_default();
                for role_text in split_roles(value) {
                    let role = parse_role(role_text.trim()).map_err(|e| {
                        Error::Config(format!("{}: {e}", path.display()))
                    })?;
                    mapping = mapping.assign(var.clone(), role);
                }
                config.mapping = Some(mapping);
            }
            _ => {
                return Err(Error::Config(format!(
                    "{}: unknown configuration key '{key}'",
                    path.display()
                )))
            }
        }
    }
    Ok(())
}

/// Splits a role list on commas that sit outside parentheses.
fn split_roles(value: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in value.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&value[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&value[start..]);
    parts
}

fn parse_role(text: &str) -> Result<MappingRole> {
    let arg = |name: &str| -> Option<&str> {
        text.strip_prefix(name)
            .and_then(|rest| rest.strip_prefix('('))
            .and_then(|rest| rest.strip_suffix(')'))
    };
    match text {
        "node-id" => return Ok(MappingRole::NodeId),
        "edge-source" => return Ok(MappingRole::EdgeSource),
        "edge-target" => return Ok(MappingRole::EdgeTarget),
        "edge-label" => return Ok(MappingRole::EdgeLabel),
        _ => {}
    }
    if let Some(owner) = arg("node-label") {
        return Ok(MappingRole::NodeLabel {
            owner: owner.trim().to_string(),
        });
    }
    if let Some(inner) = arg("node-property") {
        let (key, owner) = inner.split_once(',').ok_or_else(|| {
            Error::Config("node-property takes (key,owner-var)".into())
        })?;
        return Ok(MappingRole::NodeProperty {
            key: key.trim().to_string(),
            owner: owner.trim().to_string(),
        });
    }
    if let Some(key) = arg("edge-property") {
        return Ok(MappingRole::EdgeProperty {
            key: key.trim().to_string(),
        });
    }
    Err(Error::Config(format!("unknown mapping role '{text}'")))
}

fn resolve_format(path: &Path, choice: FormatChoice) -> Result<FormatChoice> {
    match choice {
        FormatChoice::Auto => match path.extension().and_then(|e| e.to_str()) {
            Some("nt") | Some("ntriples") => Ok(FormatChoice::Ntriples),
            Some("ttl") | Some("turtle") => Ok(FormatChoice::Turtle),
            other => Err(Error::Config(format!(
                "cannot infer format for '{}' (extension {:?}); pass --format",
                path.display(),
                other.unwrap_or("")
            ))),
        },
        concrete => Ok(concrete),
    }
}

fn read_graph(path: &Path, choice: FormatChoice) -> Result<RdfGraph> {
    let format = resolve_format(path, choice)?;
    let file = fs::File::open(path)?;
    let reader = BufReader::new(file);
    let mut graph = match format {
        FormatChoice::Ntriples => parse_ntriples(reader)?,
        FormatChoice::Turtle => parse_turtle(reader)?,
        FormatChoice::Auto => unreachable!("resolved above"),
    };
    graph.set_name(graph_name_for(path));
    Ok(graph)
}

fn graph_name_for(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "input".to_string())
}

fn load_schema(config: &RunConfig) -> Result<Option<OntologySchema>> {
    match &config.ontology {
        None => Ok(None),
        Some(path) => {
            let graph = read_graph(path, config.format)?;
            Ok(Some(load_ontology(&graph)))
        }
    }
}

fn projection_config(config: &RunConfig, schema: Option<&OntologySchema>) -> ProjectionConfig {
    ProjectionConfig {
        vocab: config.vocab.clone(),
        strict: config.strict,
        ontology: schema.cloned(),
        ..ProjectionConfig::default()
    }
}

fn report_diagnostics(diagnostics: &crate::error::Diagnostics, context: &str) {
    for d in diagnostics.iter() {
        eprintln!("spg: {context}: {d}");
    }
}

fn write_output(config: &RunConfig, stem: &str, multi: bool, text: &str) -> Result<()> {
    match &config.output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) if multi => {
            fs::create_dir_all(path)?;
            fs::write(path.join(format!("{stem}.gdf")), text)?;
            Ok(())
        }
        Some(path) => {
            fs::write(path, text)?;
            Ok(())
        }
    }
}

fn project_one(
    store: &Store,
    name: &str,
    config: &RunConfig,
    projection_config: &ProjectionConfig,
) -> Result<Projection> {
    match &config.mapping {
        Some(mapping) => project_with_mapping(store, name, &config.patterns, mapping, projection_config),
        None => project(store, name, projection_config),
    }
}

/// Shared loop: parse, load, project, then hand each projection to `emit`.
fn pipeline(
    config: &RunConfig,
    force_variables: bool,
    mut emit: impl FnMut(&str, &RdfGraph, Projection) -> Result<i32>,
) -> i32 {
    if config.inputs.is_empty() {
        eprintln!("spg: no input given (use --input or a config file)");
        return EXIT_USAGE;
    }
    let schema = match load_schema(config) {
        Ok(schema) => schema,
        Err(e) => {
            eprintln!("spg: ontology: {e}");
            return exit_code_for(&e);
        }
    };
    let mut projection_cfg = projection_config(config, schema.as_ref());
    if force_variables {
        projection_cfg.variables = true;
    }

    let mut store = Store::new();
    let mut worst = EXIT_OK;
    for input in &config.inputs {
        let name = graph_name_for(input);
        let outcome = (|| -> Result<i32> {
            let graph = read_graph(input, config.format)?;
            let mode = if config.keep_names && store.contains_graph(&name) {
                LoadMode::Merge
            } else {
                LoadMode::Replace
            };
            store.load_named_graph(&name, graph, mode)?;
            let loaded = RdfGraph::from_triples(
                name.clone(),
                store.graph(&name)?.triples().to_vec(),
            );
            let projection = project_one(&store, &name, config, &projection_cfg)?;
            report_diagnostics(&projection.diagnostics, &name);
            let code = emit(&name, &loaded, projection)?;
            if !config.keep_names {
                store.drop_graph(&name);
            }
            Ok(code)
        })();
        match outcome {
            Ok(code) => worst = worst.max(code),
            Err(e) => {
                eprintln!("spg: {name}: {e}");
                return exit_code_for(&e);
            }
        }
    }
    if config.keep_names {
        for name in store.graph_names() {
            eprintln!(
                "spg: kept graph '{name}' ({} triples)",
                store.triple_count(name).unwrap_or(0)
            );
        }
    }
    worst
}

/// parse → load → project → optional validate → GDF.
pub fn run_convert(config: &RunConfig) -> i32 {
    let schema = match load_schema(config) {
        Ok(schema) => schema,
        Err(e) => {
            eprintln!("spg: ontology: {e}");
            return exit_code_for(&e);
        }
    };
    let multi = config.inputs.len() > 1;
    pipeline(config, false, |name, _graph, projection| {
        if let Some(schema) = &schema {
            let mode = if config.strict {
                ValidationMode::Strict
            } else {
                ValidationMode::Lenient
            };
            let report = validate_graph(&projection.graph, schema, mode);
            for warning in &report.warnings {
                eprintln!("spg: {name}: warning: {warning}");
            }
            if !report.is_clean() {
                eprint!("{}", report.to_text());
                if report.pipeline_failure() {
                    return Ok(EXIT_VALIDATION);
                }
            }
        }
        let (text, diagnostics) = write_gdf(&projection.graph);
        report_diagnostics(&diagnostics, name);
        write_output(config, name, multi, &text)?;
        Ok(EXIT_OK)
    })
}

/// parse → load → project → validate; text and JSON reports.
pub fn run_validate(config: &RunConfig) -> i32 {
    let Some(_) = &config.ontology else {
        eprintln!("spg: validate requires --ontology");
        return EXIT_USAGE;
    };
    let schema = match load_schema(config) {
        Ok(schema) => schema.expect("ontology path checked above"),
        Err(e) => {
            eprintln!("spg: ontology: {e}");
            return exit_code_for(&e);
        }
    };
    let mode = if config.strict {
        ValidationMode::Strict
    } else {
        ValidationMode::Lenient
    };
    let multi = config.inputs.len() > 1;
    let mut text_report = String::new();
    let mut json_reports = Vec::new();
    let code = pipeline(config, false, |name, _graph, projection| {
        let report = validate_graph(&projection.graph, &schema, mode);
        for warning in &report.warnings {
            eprintln!("spg: {name}: warning: {warning}");
        }
        text_report.push_str(&report.to_text());
        let clean = report.is_clean();
        json_reports.push((name.to_string(), report));
        Ok(if clean { EXIT_OK } else { EXIT_VALIDATION })
    });
    if code == EXIT_PIPELINE || code == EXIT_USAGE {
        return code;
    }
    let json = if multi {
        let map: BTreeMap<String, &crate::ontology::ValidationReport> = json_reports
            .iter()
            .map(|(name, report)| (name.clone(), report))
            .collect();
        serde_json::to_string_pretty(&map).expect("report serializes")
    } else {
        match json_reports.first() {
            Some((_, report)) => serde_json::to_string_pretty(report).expect("report serializes"),
            None => "{}".to_string(),
        }
    };
    match &config.output {
        None => print!("{text_report}"),
        Some(path) => {
            if let Err(e) = fs::write(path, &text_report) {
                eprintln!("spg: cannot write {}: {e}", path.display());
                return EXIT_PIPELINE;
            }
            let json_path = PathBuf::from(format!("{}.json", path.display()));
            if let Err(e) = fs::write(&json_path, format!("{json}\n")) {
                eprintln!("spg: cannot write {}: {e}", json_path.display());
                return EXIT_PIPELINE;
            }
        }
    }
    code
}

/// Histogram CSVs per view plus compaction metrics for `both`.
pub fn run_stats(config: &RunConfig, view: StatsView) -> i32 {
    let multi = config.inputs.len() > 1;
    pipeline(config, false, |name, graph, projection| {
        let rdf = matches!(view, StatsView::Rdf | StatsView::Both)
            .then(|| degree_histogram_rdf(graph));
        let spg = matches!(view, StatsView::Spg | StatsView::Both)
            .then(|| degree_histogram_spg(&projection.graph));
        let metrics = matches!(view, StatsView::Both)
            .then(|| compaction_metrics(graph, &projection.graph));

        match &config.output {
            None => {
                if multi {
                    println!("# graph: {name}");
                }
                if let Some(h) = &rdf {
                    if matches!(view, StatsView::Both) {
                        println!("# rdf degree distribution");
                    }
                    print!("{}", h.to_csv());
                }
                if let Some(h) = &spg {
                    if matches!(view, StatsView::Both) {
                        println!("# spg degree distribution");
                    }
                    print!("{}", h.to_csv());
                }
                if let Some(m) = &metrics {
                    println!("# compaction metrics");
                    print!("{}", m.to_text());
                }
            }
            Some(base) => {
                let prefix = if multi {
                    format!("{}.{name}", base.display())
                } else {
                    base.display().to_string()
                };
                if let Some(h) = &rdf {
                    fs::write(format!("{prefix}.rdf.csv"), h.to_csv())?;
                }
                if let Some(h) = &spg {
                    fs::write(format!("{prefix}.spg.csv"), h.to_csv())?;
                }
                if let Some(m) = &metrics {
                    fs::write(format!("{prefix}.metrics.txt"), m.to_text())?;
                    let json = serde_json::to_string_pretty(m).expect("metrics serialize");
                    fs::write(format!("{prefix}.metrics.json"), format!("{json}\n"))?;
                }
            }
        }
        Ok(EXIT_OK)
    })
}

/// Projects a reified query pattern into a GDF template; inputs without
/// variables fall back to a plain conversion with a notice.
pub fn run_query_compact(config: &RunConfig) -> i32 {
    if config.inputs.is_empty() {
        eprintln!("spg: no input given (use --input or a config file)");
        return EXIT_USAGE;
    }
    let schema = match load_schema(config) {
        Ok(schema) => schema,
        Err(e) => {
            eprintln!("spg: ontology: {e}");
            return exit_code_for(&e);
        }
    };
    let projection_cfg = projection_config(config, schema.as_ref());
    let multi = config.inputs.len() > 1;
    let mut worst = EXIT_OK;
    for input in &config.inputs {
        let name = graph_name_for(input);
        let outcome = (|| -> Result<i32> {
            let graph = read_graph(input, config.format)?;
            let projection = if has_variables(&graph) {
                compact_query(&graph, &projection_cfg)?
            } else {
                eprintln!(
                    "spg: {name}: input contains no var: variables; converting as data"
                );
                let mut store = Store::new();
                store.load_named_graph(&name, graph, LoadMode::Replace)?;
                project(&store, &name, &projection_cfg)?
            };
            report_diagnostics(&projection.diagnostics, &name);
            let (text, diagnostics) = write_gdf(&projection.graph);
            report_diagnostics(&diagnostics, &name);
            write_output(config, &name, multi, &text)?;
            Ok(EXIT_OK)
        })();
        match outcome {
            Ok(code) => worst = worst.max(code),
            Err(e) => {
                eprintln!("spg: {name}: {e}");
                return exit_code_for(&e);
            }
        }
    }
    worst
}
