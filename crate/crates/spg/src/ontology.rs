//! RDFS-subset ontology loading and property-graph validation.
//!
//! The schema is extracted leniently — class declarations, the subclass
//! hierarchy, and property domain/range constraints — and validation
//! checks the projected graph against it: node labels, edge types,
//! domains, class ranges, and property datatypes. No inference is
//! performed; only asserted facts are checked.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::model::{PropertyValue, SpgEdge, SpgGraph, SpgNode, UNTYPED_LABEL};
use crate::term::{local_name, RdfGraph, Term};
use crate::vocab::{
    OWL_CLASS, RDFS_CLASS, RDFS_DOMAIN, RDFS_RANGE, RDFS_SUBCLASS_OF, RDFS_SUBPROPERTY_OF,
    RDF_LANG_STRING, RDF_PROPERTY, RDF_TYPE, XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_FLOAT,
    XSD_INT, XSD_INTEGER, XSD_LONG, XSD_NS, XSD_SHORT, XSD_STRING,
};

/// Domain and range constraints declared for one property.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertyConstraint {
    pub domain: Option<String>,
    pub range: Option<String>,
}

/// Classes, the subclass relation, and property constraints extracted
/// from an RDFS-subset ontology graph.
#[derive(Debug, Clone, Default)]
pub struct OntologySchema {
    classes: BTreeSet<String>,
    subclass_of: BTreeMap<String, BTreeSet<String>>,
    properties: BTreeMap<String, PropertyConstraint>,
    subproperty_of: BTreeMap<String, BTreeSet<String>>,
    skipped_triples: usize,
}

impl OntologySchema {
    pub fn classes(&self) -> &BTreeSet<String> {
        &self.classes
    }

    pub fn properties(&self) -> &BTreeMap<String, PropertyConstraint> {
        &self.properties
    }

    pub fn subproperties(&self) -> &BTreeMap<String, BTreeSet<String>> {
        &self.subproperty_of
    }

    /// Triples the extractor did not recognize.
    pub fn skipped_triples(&self) -> usize {
        self.skipped_triples
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty() && self.properties.is_empty() && self.subclass_of.is_empty()
    }

    /// Reflexive-transitive closure of the subclass relation from `class`.
    /// An unknown class yields just itself; cycles collapse into mutual
    /// superclass sets.
    pub fn superclass_closure(&self, class: &str) -> BTreeSet<String> {
        let mut seen: BTreeSet<String> = BTreeSet::new();
        let mut queue: VecDeque<&str> = VecDeque::new();
        seen.insert(class.to_string());
        queue.push_back(class);
        while let Some(current) = queue.pop_front() {
            if let Some(supers) = self.subclass_of.get(current) {
                for parent in supers {
                    if seen.insert(parent.clone()) {
                        queue.push_back(parent);
                    }
                }
            }
        }
        seen
    }

    /// Classes whose local name is `name`.
    pub fn classes_with_local_name(&self, name: &str) -> Vec<&str> {
        self.classes
            .iter()
            .filter(|c| local_name(c) == name)
            .map(|c| c.as_str())
            .collect()
    }

    /// Union of the superclass closures of every class whose local name
    /// is `name`, as local names. Unknown names close over themselves.
    pub fn local_name_closure(&self, name: &str) -> BTreeSet<String> {
        let candidates = self.classes_with_local_name(name);
        if candidates.is_empty() {
            let mut set = BTreeSet::new();
            set.insert(name.to_string());
            return set;
        }
        let mut out = BTreeSet::new();
        for class in candidates {
            for iri in self.superclass_closure(class) {
                out.insert(local_name(&iri).to_string());
            }
        }
        out
    }
}

/// Extracts a schema from a parsed ontology graph. Unknown constructs are
/// ignored and counted, never rejected.
pub fn load_ontology(graph: &RdfGraph) -> OntologySchema {
    let mut schema = OntologySchema::default();
    for triple in graph.triples() {
        let subject_iri = match triple.subject.as_iri() {
            Some(iri) => iri,
            None => {
                schema.skipped_triples += 1;
                continue;
            }
        };
        let predicate = triple.predicate.as_iri().unwrap_or_default();
        match (predicate, &triple.object) {
            (RDF_TYPE, Term::Iri(class)) if class == RDFS_CLASS || class == OWL_CLASS => {
                schema.classes.insert(subject_iri.to_string());
            }
            (RDF_TYPE, Term::Iri(class)) if class == RDF_PROPERTY => {
                schema.properties.entry(subject_iri.to_string()).or_default();
            }
            (RDFS_SUBCLASS_OF, Term::Iri(parent)) => {
                schema
                    .subclass_of
                    .entry(subject_iri.to_string())
                    .or_default()
                    .insert(parent.clone());
            }
            (RDFS_DOMAIN, Term::Iri(class)) => {
                schema
                    .properties
                    .entry(subject_iri.to_string())
                    .or_default()
                    .domain = Some(class.clone());
            }
            (RDFS_RANGE, Term::Iri(range)) => {
                schema
                    .properties
                    .entry(subject_iri.to_string())
                    .or_default()
                    .range = Some(range.clone());
            }
            (RDFS_SUBPROPERTY_OF, Term::Iri(parent)) => {
                schema
                    .subproperty_of
                    .entry(subject_iri.to_string())
                    .or_default()
                    .insert(parent.clone());
            }
            _ => schema.skipped_triples += 1,
        }
    }
    schema
}

/// The violation classes a validation run can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ViolationCode {
    UnknownLabel,
    UnknownEdgeType,
    DomainViolation,
    RangeViolation,
    DatatypeMismatch,
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationCode::UnknownLabel => "UnknownLabel",
            ViolationCode::UnknownEdgeType => "UnknownEdgeType",
            ViolationCode::DomainViolation => "DomainViolation",
            ViolationCode::RangeViolation => "RangeViolation",
            ViolationCode::DatatypeMismatch => "DatatypeMismatch",
        };
        write!(f, "{s}")
    }
}

/// Whether violations should fail the calling pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ValidationMode {
    Strict,
    Lenient,
}

/// One validation finding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub code: ViolationCode,
    pub element: String,
    pub detail: String,
}

/// The outcome of validating a graph: the violation list plus advisory
/// warnings (local-name collisions, unsupported datatypes).
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub mode: ValidationMode,
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// True when the report should abort a strict pipeline.
    pub fn pipeline_failure(&self) -> bool {
        self.mode == ValidationMode::Strict && !self.is_clean()
    }

    pub fn counts(&self) -> BTreeMap<ViolationCode, usize> {
        let mut counts = BTreeMap::new();
        for v in &self.violations {
            *counts.entry(v.code).or_insert(0) += 1;
        }
        counts
    }

    /// One violation per line: `CODE<TAB>element<TAB>detail`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.violations {
            out.push_str(&format!("{}\t{}\t{}\n", v.code, v.element, v.detail));
        }
        out
    }
}

struct Checker<'a> {
    schema: &'a OntologySchema,
    graph: &'a SpgGraph,
    classes: BTreeMap<&'a str, Vec<&'a str>>,
    properties: BTreeMap<&'a str, Vec<&'a str>>,
    report: ValidationReport,
    warned: BTreeSet<String>,
}

/// Validates node labels, edge types, domains, ranges, and property
/// datatypes of a projected graph against the schema. Labels are matched
/// by local name; when distinct IRIs share a local name all candidates
/// are checked and any passing candidate suffices, with a warning.
pub fn validate_graph(
    graph: &SpgGraph,
    schema: &OntologySchema,
    mode: ValidationMode,
) -> ValidationReport {
    let mut classes: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for class in &schema.classes {
        classes.entry(local_name(class)).or_default().push(class);
    }
    let mut properties: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for prop in schema.properties.keys() {
        properties.entry(local_name(prop)).or_default().push(prop);
    }
    let mut checker = Checker {
        schema,
        graph,
        classes,
        properties,
        report: ValidationReport {
            mode,
            violations: Vec::new(),
            warnings: Vec::new(),
        },
        warned: BTreeSet::new(),
    };

    for node in graph.nodes() {
        checker.check_node_label(node);
        for (key, value) in &node.properties {
            checker.check_property_datatype(&node.id, key, value);
        }
    }
    for edge in graph.edges() {
        checker.check_edge(edge);
        for (key, value) in &edge.properties {
            checker.check_property_datatype(&edge.id, key, value);
        }
    }
    checker.report
}

impl<'a> Checker<'a> {
    fn violation(&mut self, code: ViolationCode, element: &str, detail: String) {
        self.report.violations.push(Violation {
            code,
            element: element.to_string(),
            detail,
        });
    }

    fn warn_once(&mut self, key: String, message: String) {
        if self.warned.insert(key) {
            self.report.warnings.push(message);
        }
    }

    fn warn_collision(&mut self, kind: &str, name: &str, candidates: &[&str]) {
        if candidates.len() > 1 {
            self.warn_once(
                format!("{kind}:{name}"),
                format!("{kind} '{name}' is ambiguous: {}", candidates.join(", ")),
            );
        }
    }

    fn check_node_label(&mut self, node: &SpgNode) {
        // "Thing" marks an untyped node; there is no class to resolve.
        if node.label == UNTYPED_LABEL {
            return;
        }
        match self.classes.get(node.label.as_str()).cloned() {
            Some(candidates) => self.warn_collision("class", &node.label, &candidates),
            None => self.violation(
                ViolationCode::UnknownLabel,
                &node.id,
                format!("label '{}' does not name a declared class", node.label),
            ),
        }
    }

    /// Union of superclass closures over every class the node's label can
    /// resolve to; an unresolvable label closes over itself only.
    fn label_closure(&self, node_id: &str) -> BTreeSet<String> {
        let label = self
            .graph
            .node(node_id)
            .map(|n| n.label.as_str())
            .unwrap_or(UNTYPED_LABEL);
        match self.classes.get(label) {
            Some(label_classes) => {
                let mut closure = BTreeSet::new();
                for class in label_classes {
                    closure.extend(self.schema.superclass_closure(class));
                }
                closure
            }
            None => {
                let mut closure = BTreeSet::new();
                closure.insert(label.to_string());
                closure
            }
        }
    }

    fn check_edge(&mut self, edge: &SpgEdge) {
        let candidates = match self.properties.get(edge.label.as_str()).cloned() {
            Some(candidates) => {
                self.warn_collision("property", &edge.label, &candidates);
                candidates
            }
            None => {
                self.violation(
                    ViolationCode::UnknownEdgeType,
                    &edge.id,
                    format!("edge label '{}' does not name a declared property", edge.label),
                );
                return;
            }
        };

        // Domain check: skipped unless every candidate declares a domain;
        // passes when any declared domain sits in the source closure.
        let domains: Vec<(&str, String)> = candidates
            .iter()
            .filter_map(|p| {
                self.schema
                    .properties
                    .get(*p)
                    .and_then(|c| c.domain.clone())
                    .map(|d| (*p, d))
            })
            .collect();
        if !domains.is_empty() && domains.len() == candidates.len() {
            let source_closure = self.label_closure(&edge.source);
            if !domains.iter().any(|(_, d)| source_closure.contains(d)) {
                let (prop, domain) = &domains[0];
                self.violation(
                    ViolationCode::DomainViolation,
                    &edge.id,
                    format!(
                        "domain of '{}' is <{}> but source '{}' is outside its subclass closure",
                        local_name(prop),
                        domain,
                        edge.source
                    ),
                );
            }
        }

        // Range check applies when the range names a class.
        let class_ranges: Vec<(&str, String)> = candidates
            .iter()
            .filter_map(|p| {
                self.schema
                    .properties
                    .get(*p)
                    .and_then(|c| c.range.clone())
                    .filter(|r| !is_datatype_iri(r))
                    .map(|r| (*p, r))
            })
            .collect();
        if !class_ranges.is_empty() && class_ranges.len() == candidates.len() {
            let target_closure = self.label_closure(&edge.target);
            if !class_ranges.iter().any(|(_, r)| target_closure.contains(r)) {
                let (prop, range) = &class_ranges[0];
                self.violation(
                    ViolationCode::RangeViolation,
                    &edge.id,
                    format!(
                        "range of '{}' is <{}> but target '{}' is outside its subclass closure",
                        local_name(prop),
                        range,
                        edge.target
                    ),
                );
            }
        }
    }

    fn check_property_datatype(&mut self, element: &str, key: &str, value: &PropertyValue) {
        // Dotted keys carry statement metadata: `pred.extra` holds the
        // value of `extra`, so the final segment names the property.
        let lookup = match self.properties.get(key).cloned() {
            Some(candidates) => Some((key, candidates)),
            None => key.rsplit_once('.').and_then(|(_, tail)| {
                self.properties
                    .get(tail)
                    .cloned()
                    .map(|candidates| (tail, candidates))
            }),
        };
        let Some((name, candidates)) = lookup else {
            return;
        };
        self.warn_collision("property", name, &candidates);

        // Only datatype-ranged declarations constrain a property value;
        // skipped unless every candidate carries one.
        let datatype_ranges: Vec<(&str, String)> = candidates
            .iter()
            .filter_map(|p| {
                self.schema
                    .properties
                    .get(*p)
                    .and_then(|c| c.range.clone())
                    .filter(|r| is_datatype_iri(r))
                    .map(|r| (*p, r))
            })
            .collect();
        if datatype_ranges.is_empty() || datatype_ranges.len() != candidates.len() {
            return;
        }

        let actual = variant_name(value);
        let mut matched = false;
        for (_, datatype) in &datatype_ranges {
            let (expected, supported) = expected_variant(datatype);
            if !supported {
                self.warn_once(
                    format!("datatype:{datatype}"),
                    format!("datatype <{datatype}> is outside the supported map; values checked as Text"),
                );
            }
            if expected == actual {
                matched = true;
            }
        }
        if !matched {
            let (_, datatype) = &datatype_ranges[0];
            let (expected, _) = expected_variant(datatype);
            self.violation(
                ViolationCode::DatatypeMismatch,
                element,
                format!(
                    "property '{key}' expects {expected} (<{datatype}>) but value '{value}' is {actual}"
                ),
            );
        }
    }
}

fn is_datatype_iri(iri: &str) -> bool {
    iri.starts_with(XSD_NS) || iri == RDF_LANG_STRING
}

/// Expected property-value shape for a datatype IRI; the bool is false
/// when the datatype is outside the supported map (checked as text).
fn expected_variant(datatype: &str) -> (&'static str, bool) {
    match datatype {
        XSD_STRING => ("Text", true),
        XSD_INTEGER | XSD_LONG | XSD_INT | XSD_SHORT => ("Integer", true),
        XSD_DOUBLE | XSD_FLOAT | XSD_DECIMAL => ("Real", true),
        XSD_BOOLEAN => ("Boolean", true),
        _ => ("Text", false),
    }
}

fn variant_name(value: &PropertyValue) -> &'static str {
    match value {
        PropertyValue::Text(_) => "Text",
        PropertyValue::Integer(_) => "Integer",
        PropertyValue::Real(_) => "Real",
        PropertyValue::Boolean(_) => "Boolean",
    }
}
