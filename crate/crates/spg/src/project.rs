//! Projection of reified RDF graphs into property graphs, the inverse
//! reification used for round-trip checking, and mapping-driven
//! projection over query results.
//!
//! A statement node is consumed and becomes an edge (resource object) or
//! a node property (literal object); extra triples on the statement node
//! become properties of that edge or dotted-key properties of the node.
//! Remaining type triples become labels, remaining literal triples become
//! node properties, and remaining resource triples become plain edges.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Diagnostics, Error, Result};
use crate::model::{PropertyValue, SpgEdge, SpgGraph, SpgNode, UNTYPED_LABEL};
use crate::ontology::OntologySchema;
use crate::store::{BindingTable, Store, TriplePattern};
use crate::term::{is_absolute_iri, local_name, RdfGraph, Term, Triple};
use crate::vocab::{Vocabulary, XSD_BOOLEAN, XSD_DOUBLE, XSD_INTEGER};

/// The reserved IRI scheme that marks query variables in pattern graphs.
pub const VARIABLE_SCHEME: &str = "var:";

/// Settings shared by every projection entry point.
#[derive(Debug, Clone)]
pub struct ProjectionConfig {
    pub vocab: Vocabulary,
    /// Strict mode turns error diagnostics into operation failure.
    pub strict: bool,
    /// Namespace used when reification must mint IRIs for property keys,
    /// labels, and non-IRI ids.
    pub namespace: String,
    /// Schema consulted by the primary-label rule, when available.
    pub ontology: Option<OntologySchema>,
    /// Treat `var:` IRIs and blank nodes as query variables, rendering
    /// their ids as `?name` (used for query templates).
    pub variables: bool,
}

impl Default for ProjectionConfig {
    fn default() -> Self {
        ProjectionConfig {
            vocab: Vocabulary::default(),
            strict: true,
            namespace: "http://ex.org/".to_string(),
            ontology: None,
            variables: false,
        }
    }
}

impl ProjectionConfig {
    pub fn lenient() -> Self {
        ProjectionConfig {
            strict: false,
            ..ProjectionConfig::default()
        }
    }

    fn display_id(&self, term: &Term) -> String {
        if self.variables {
            if let Some(name) = variable_name(term) {
                return format!("?{name}");
            }
        }
        match term {
            Term::Iri(iri) => iri.clone(),
            Term::Blank(label) => label.clone(),
            Term::Literal(lit) => lit.lexical.clone(),
        }
    }

    fn display_pred(&self, term: &Term) -> String {
        if self.variables {
            if let Some(name) = variable_name(term) {
                return format!("?{name}");
            }
        }
        match term {
            Term::Iri(iri) => local_name(iri).to_string(),
            Term::Blank(label) => label.clone(),
            Term::Literal(lit) => lit.lexical.clone(),
        }
    }
}

fn variable_name(term: &Term) -> Option<&str> {
    match term {
        Term::Iri(iri) => iri.strip_prefix(VARIABLE_SCHEME),
        // blank nodes in a pattern graph act as non-distinguished variables
        Term::Blank(label) => Some(label.as_str()),
        Term::Literal(_) => None,
    }
}

/// A complete reification: the statement node, its three components, and
/// any extra triples attached to the statement node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementDescriptor {
    /// Node id of the statement node (IRI or blank label).
    pub id: String,
    /// The statement node term itself.
    pub node: Term,
    pub subject: Term,
    pub predicate: Term,
    pub object: Term,
    /// Non-reification triples on the statement node, canonical order.
    pub extras: Vec<Triple>,
}

/// A projection result: the graph plus everything worth reporting.
#[derive(Debug, Clone)]
pub struct Projection {
    pub graph: SpgGraph,
    pub diagnostics: Diagnostics,
}

struct StatementScan {
    descriptors: Vec<StatementDescriptor>,
    diagnostics: Diagnostics,
}

/// Finds every reified statement in a named graph.
///
/// A node is a statement node iff it is typed as the statement class or
/// carries all three reification components. Incomplete or duplicated
/// reification yields an error diagnostic and no descriptor.
pub fn find_statements(
    store: &Store,
    graph_name: &str,
    vocab: &Vocabulary,
) -> Result<(Vec<StatementDescriptor>, Diagnostics)> {
    let scan = scan_statements(store, graph_name, vocab)?;
    Ok((scan.descriptors, scan.diagnostics))
}

fn scan_statements(store: &Store, graph_name: &str, vocab: &Vocabulary) -> Result<StatementScan> {
    let graph = store.graph(graph_name)?;
    let mut descriptors = Vec::new();
    let mut diagnostics = Diagnostics::new();

    let triples = graph.triples();
    let mut start = 0usize;
    while start < triples.len() {
        let subject = &triples[start].subject;
        let mut end = start;
        while end < triples.len() && &triples[end].subject == subject {
            end += 1;
        }
        let group = &triples[start..end];
        start = end;

        let sid = subject.id().expect("triple subjects are resources");
        let mut typed = false;
        let mut subjects: Vec<&Term> = Vec::new();
        let mut predicates: Vec<&Term> = Vec::new();
        let mut objects: Vec<&Term> = Vec::new();
        let mut extras: Vec<Triple> = Vec::new();
        for t in group {
            let p = t.predicate.as_iri().unwrap_or_default();
            if p == vocab.rdf_type && t.object == Term::Iri(vocab.statement_class.clone()) {
                typed = true;
            } else if p == vocab.subject {
                subjects.push(&t.object);
            } else if p == vocab.predicate {
                predicates.push(&t.object);
            } else if p == vocab.object {
                objects.push(&t.object);
            } else {
                extras.push(t.clone());
            }
        }

        let has_all = !subjects.is_empty() && !predicates.is_empty() && !objects.is_empty();
        if !typed && !has_all {
            continue; // not a statement candidate
        }
        if !has_all {
            diagnostics.error(
                "incomplete-reification",
                format!("statement node '{sid}' is missing reification components"),
                Some(sid.to_string()),
            );
            continue;
        }
        if subjects.len() > 1 || predicates.len() > 1 || objects.len() > 1 {
            diagnostics.error(
                "duplicate-reification-component",
                format!("statement node '{sid}' has duplicated reification components"),
                Some(sid.to_string()),
            );
            continue;
        }
        if !predicates[0].is_iri() {
            diagnostics.error(
                "malformed-reification",
                format!("statement node '{sid}' has a non-IRI predicate component"),
                Some(sid.to_string()),
            );
            continue;
        }
        if subjects[0].is_literal() {
            diagnostics.error(
                "malformed-reification",
                format!("statement node '{sid}' has a literal subject component"),
                Some(sid.to_string()),
            );
            continue;
        }
        descriptors.push(StatementDescriptor {
            id: sid.to_string(),
            node: subject.clone(),
            subject: subjects[0].clone(),
            predicate: predicates[0].clone(),
            object: objects[0].clone(),
            extras,
        });
    }

    descriptors.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(StatementScan {
        descriptors,
        diagnostics,
    })
}

/// Projects a named RDF graph into a property graph.
pub fn project(store: &Store, graph_name: &str, config: &ProjectionConfig) -> Result<Projection> {
    let scan = scan_statements(store, graph_name, &config.vocab)?;
    let mut diagnostics = scan.diagnostics;
    let graph = store.graph(graph_name)?;

    // Retained descriptors are consumed into edges or properties. A
    // statement node that something else still points at cannot vanish:
    // strict mode rejects it, lenient mode demotes it to an ordinary node.
    let mut retained: BTreeMap<String, StatementDescriptor> = scan
        .descriptors
        .into_iter()
        .map(|d| (d.id.clone(), d))
        .collect();
    loop {
        let mut demote: BTreeSet<String> = BTreeSet::new();
        for d in retained.values() {
            for (endpoint, code) in [(&d.subject, "nested-reification"), (&d.object, "nested-reification")] {
                if let Some(id) = endpoint.id() {
                    if retained.contains_key(id) && !demote.contains(id) {
                        demote.insert(id.to_string());
                        let message = format!(
                            "statement node '{id}' is itself a component of statement '{}'",
                            d.id
                        );
                        if config.strict {
                            diagnostics.error(code, message, Some(id.to_string()));
                        } else {
                            diagnostics.warn(code, format!("{message}; kept as an ordinary node"), Some(id.to_string()));
                        }
                    }
                }
            }
        }
        for t in graph.triples() {
            let subject_id = t.subject.id().expect("resource subject");
            if retained.contains_key(subject_id) {
                continue; // consumed triple
            }
            if let Some(object_id) = t.object.id() {
                if retained.contains_key(object_id) && !demote.contains(object_id) {
                    demote.insert(object_id.to_string());
                    let message = format!(
                        "statement node '{object_id}' is referenced by ordinary triple subject '{subject_id}'"
                    );
                    if config.strict {
                        diagnostics.error("statement-reference", message, Some(object_id.to_string()));
                    } else {
                        diagnostics.warn(
                            "statement-reference",
                            format!("{message}; kept as an ordinary node"),
                            Some(object_id.to_string()),
                        );
                    }
                }
            }
        }
        if demote.is_empty() {
            break;
        }
        for id in demote {
            retained.remove(&id);
        }
    }

    if config.strict && diagnostics.has_errors() {
        return Err(Error::Projection(diagnostics));
    }

    let mut builder = GraphBuilder::new(config);

    // Residual triples first, in canonical order; descriptor-derived
    // values are applied afterwards and win property collisions.
    for t in graph.triples() {
        let subject_id = t.subject.id().expect("resource subject");
        if retained.contains_key(subject_id) {
            continue;
        }
        let sid = config.display_id(&t.subject);
        let predicate_iri = t.predicate.as_iri().unwrap_or_default();
        match &t.object {
            Term::Literal(lit) => {
                let key = config.display_pred(&t.predicate);
                builder.set_node_property(&sid, key, lit, &mut diagnostics);
            }
            object if predicate_iri == config.vocab.rdf_type => {
                let type_name = if object == &Term::Iri(config.vocab.statement_class.clone()) {
                    "Statement".to_string()
                } else {
                    config.display_pred(object)
                };
                builder.add_type(&sid, type_name);
            }
            object => {
                let oid = config.display_id(object);
                let label = config.display_pred(&t.predicate);
                builder.add_direct_edge(&sid, predicate_iri, &oid, label);
            }
        }
    }

    for descriptor in retained.values() {
        builder.apply_descriptor(descriptor, &mut diagnostics);
    }

    let graph = builder.finish(config)?;
    Ok(Projection {
        graph,
        diagnostics,
    })
}

struct NodeBuilder {
    types: BTreeSet<String>,
    properties: BTreeMap<String, PropertyValue>,
}

struct GraphBuilder<'a> {
    config: &'a ProjectionConfig,
    nodes: BTreeMap<String, NodeBuilder>,
    edges: Vec<SpgEdge>,
    direct_counters: BTreeMap<String, usize>,
}

impl<'a> GraphBuilder<'a> {
    fn new(config: &'a ProjectionConfig) -> Self {
        GraphBuilder {
            config,
            nodes: BTreeMap::new(),
            edges: Vec::new(),
            direct_counters: BTreeMap::new(),
        }
    }

    fn ensure_node(&mut self, id: &str) -> &mut NodeBuilder {
        self.nodes.entry(id.to_string()).or_insert_with(|| NodeBuilder {
            types: BTreeSet::new(),
            properties: BTreeMap::new(),
        })
    }

    fn add_type(&mut self, id: &str, type_name: String) {
        self.ensure_node(id).types.insert(type_name);
    }

    fn set_node_property(
        &mut self,
        id: &str,
        key: String,
        literal: &crate::term::LiteralValue,
        diagnostics: &mut Diagnostics,
    ) {
        let (value, parsed) = PropertyValue::from_literal(literal);
        if !parsed {
            diagnostics.warn(
                "unparsable-literal",
                format!(
                    "literal '{}' does not parse under <{}>; kept as text",
                    literal.lexical, literal.datatype
                ),
                Some(id.to_string()),
            );
        }
        let owner = id.to_string();
        let node = self.ensure_node(id);
        if let Some(previous) = node.properties.get(&key) {
            if previous == &value {
                return; // identical re-assertion is silent
            }
            diagnostics.warn(
                "property-collision",
                format!("property '{key}' on '{owner}' overwritten ('{previous}' -> '{value}')"),
                Some(owner.clone()),
            );
        }
        node.properties.insert(key, value);
    }

    fn set_edge_property(
        edge: &mut SpgEdge,
        key: String,
        value: PropertyValue,
        diagnostics: &mut Diagnostics,
    ) {
        if let Some(previous) = edge.properties.get(&key) {
            if previous == &value {
                return;
            }
            diagnostics.warn(
                "property-collision",
                format!(
                    "property '{key}' on edge '{}' overwritten ('{previous}' -> '{value}')",
                    edge.id
                ),
                Some(edge.id.clone()),
            );
        }
        edge.properties.insert(key, value);
    }

    fn add_direct_edge(&mut self, source: &str, predicate_iri: &str, target: &str, label: String) {
        let counter_key = format!("{source}|{predicate_iri}|{target}");
        let k = self.direct_counters.entry(counter_key.clone()).or_insert(0);
        let id = format!("{counter_key}|{k}");
        *k += 1;
        self.ensure_node(source);
        self.ensure_node(target);
        self.edges.push(SpgEdge::new(id, source, target, label));
    }

    fn apply_descriptor(&mut self, descriptor: &StatementDescriptor, diagnostics: &mut Diagnostics) {
        let config = self.config;
        let subject_id = config.display_id(&descriptor.subject);
        match &descriptor.object {
            Term::Literal(lit) => {
                // Literal-object statements fold into node properties; the
                // statement extras attach under dotted keys.
                let base_key = config.display_pred(&descriptor.predicate);
                self.set_node_property(&subject_id, base_key.clone(), lit, diagnostics);
                for extra in &descriptor.extras {
                    let key = format!("{base_key}.{}", config.display_pred(&extra.predicate));
                    match &extra.object {
                        Term::Literal(extra_lit) => {
                            self.set_node_property(&subject_id, key, extra_lit, diagnostics);
                        }
                        resource => {
                            diagnostics.warn(
                                "resource-valued-extra",
                                format!(
                                    "statement '{}' property '{key}' has a resource value; stored as text",
                                    descriptor.id
                                ),
                                Some(descriptor.id.clone()),
                            );
                            let text = PropertyValue::Text(config.display_id(resource));
                            let owner = self.ensure_node(&subject_id);
                            owner.properties.insert(key, text);
                        }
                    }
                }
            }
            object => {
                let target_id = config.display_id(object);
                self.ensure_node(&subject_id);
                self.ensure_node(&target_id);
                let mut edge = SpgEdge::new(
                    config.display_id(&descriptor.node),
                    subject_id,
                    target_id,
                    config.display_pred(&descriptor.predicate),
                );
                for extra in &descriptor.extras {
                    let key = config.display_pred(&extra.predicate);
                    match &extra.object {
                        Term::Literal(lit) => {
                            let (value, parsed) = PropertyValue::from_literal(lit);
                            if !parsed {
                                diagnostics.warn(
                                    "unparsable-literal",
                                    format!(
                                        "literal '{}' does not parse under <{}>; kept as text",
                                        lit.lexical, lit.datatype
                                    ),
                                    Some(descriptor.id.clone()),
                                );
                            }
                            Self::set_edge_property(&mut edge, key, value, diagnostics);
                        }
                        resource => {
                            diagnostics.warn(
                                "resource-valued-extra",
                                format!(
                                    "statement '{}' property '{key}' has a resource value; stored as text",
                                    descriptor.id
                                ),
                                Some(descriptor.id.clone()),
                            );
                            let text = PropertyValue::Text(config.display_id(resource));
                            Self::set_edge_property(&mut edge, key, text, diagnostics);
                        }
                    }
                }
                self.edges.push(edge);
            }
        }
    }

    fn finish(self, config: &ProjectionConfig) -> Result<SpgGraph> {
        let mut nodes = Vec::with_capacity(self.nodes.len());
        for (id, builder) in self.nodes {
            let label = primary_label(&builder.types, config);
            nodes.push(SpgNode {
                id,
                label,
                types: builder.types,
                properties: builder.properties,
            });
        }
        SpgGraph::from_parts(nodes, self.edges)
    }
}

/// Primary-label rule: with an ontology, the most specific asserted class
/// under the subclass closure (ties broken lexicographically); otherwise
/// the lexicographically smallest asserted type; `Thing` when untyped.
fn primary_label(types: &BTreeSet<String>, config: &ProjectionConfig) -> String {
    if types.is_empty() {
        return UNTYPED_LABEL.to_string();
    }
    if let Some(schema) = &config.ontology {
        let mut best: Option<(usize, &str)> = None;
        for candidate in types {
            let closure = schema.local_name_closure(candidate);
            let score = types.iter().filter(|t| closure.contains(*t)).count();
            let better = match best {
                None => true,
                // BTreeSet iteration is ascending, so on ties the earlier
                // (lexicographically smaller) candidate stays.
                Some((best_score, _)) => score > best_score,
            };
            if better {
                best = Some((score, candidate));
            }
        }
        return best.map(|(_, name)| name.to_string()).unwrap_or_else(|| UNTYPED_LABEL.to_string());
    }
    types.iter().next().cloned().unwrap_or_else(|| UNTYPED_LABEL.to_string())
}

/// Reifies a property graph back into RDF.
///
/// Edges with properties become statement nodes; property-less edges
/// whose id carries direct-triple provenance (`source|predicate|target|k`)
/// become plain triples with the recovered predicate, and all other edges
/// become statement nodes as well, so projected statements survive the
/// round trip even without properties.
pub fn reify(graph: &SpgGraph, config: &ProjectionConfig) -> RdfGraph {
    let vocab = &config.vocab;
    let ns = &config.namespace;
    let mut triples: Vec<Triple> = Vec::new();
    let term_for = |id: &str| term_for_id(id, ns);

    for node in graph.nodes() {
        let subject = term_for(&node.id);
        for type_name in &node.types {
            triples.push(Triple {
                subject: subject.clone(),
                predicate: Term::iri(&vocab.rdf_type),
                object: Term::iri(format!("{ns}{type_name}")),
            });
        }
        for (key, value) in &node.properties {
            triples.push(Triple {
                subject: subject.clone(),
                predicate: Term::iri(key_iri(key, ns)),
                object: literal_for(value),
            });
        }
    }

    for edge in graph.edges() {
        let source = term_for(&edge.source);
        let target = term_for(&edge.target);
        if edge.properties.is_empty() {
            if let Some(predicate) = direct_edge_predicate(edge) {
                triples.push(Triple {
                    subject: source,
                    predicate: Term::iri(predicate),
                    object: target,
                });
                continue;
            }
        }
        let statement = term_for(&edge.id);
        triples.push(Triple {
            subject: statement.clone(),
            predicate: Term::iri(&vocab.rdf_type),
            object: Term::iri(&vocab.statement_class),
        });
        triples.push(Triple {
            subject: statement.clone(),
            predicate: Term::iri(&vocab.subject),
            object: source,
        });
        triples.push(Triple {
            subject: statement.clone(),
            predicate: Term::iri(&vocab.predicate),
            object: Term::iri(format!("{ns}{}", edge.label)),
        });
        triples.push(Triple {
            subject: statement.clone(),
            predicate: Term::iri(&vocab.object),
            object: target,
        });
        for (key, value) in &edge.properties {
            triples.push(Triple {
                subject: statement.clone(),
                predicate: Term::iri(key_iri(key, ns)),
                object: literal_for(value),
            });
        }
    }

    RdfGraph::from_triples("", triples)
}

/// Recovers the predicate from a synthesized direct-edge id when the id
/// is consistent with the edge it names.
fn direct_edge_predicate(edge: &SpgEdge) -> Option<String> {
    let rest = edge.id.strip_prefix(&format!("{}|", edge.source))?;
    let (middle, counter) = rest.rsplit_once('|')?;
    if counter.is_empty() || !counter.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let predicate = middle.strip_suffix(&format!("|{}", edge.target))?;
    if !is_absolute_iri(predicate) || local_name(predicate) != edge.label {
        return None;
    }
    Some(predicate.to_string())
}

fn key_iri(key: &str, ns: &str) -> String {
    let candidate = format!("{ns}{key}");
    if is_absolute_iri(&candidate) && !key.chars().any(|c| c.is_whitespace() || matches!(c, '<' | '>' | '"')) {
        candidate
    } else {
        let sanitized: String = key
            .chars()
            .map(|c| if c.is_whitespace() || matches!(c, '<' | '>' | '"') { '_' } else { c })
            .collect();
        format!("{ns}{sanitized}")
    }
}

fn term_for_id(id: &str, ns: &str) -> Term {
    if is_absolute_iri(id) {
        Term::iri(id)
    } else if !id.is_empty() && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        Term::blank(id)
    } else {
        let sanitized: String = id
            .chars()
            .map(|c| if c.is_whitespace() || matches!(c, '<' | '>' | '"') { '_' } else { c })
            .collect();
        Term::iri(format!("{ns}{sanitized}"))
    }
}

fn literal_for(value: &PropertyValue) -> Term {
    match value {
        PropertyValue::Text(s) => Term::literal(s.clone()),
        PropertyValue::Integer(v) => Term::typed_literal(v.to_string(), XSD_INTEGER),
        PropertyValue::Real(v) => Term::typed_literal(v.to_string(), XSD_DOUBLE),
        PropertyValue::Boolean(v) => Term::typed_literal(v.to_string(), XSD_BOOLEAN),
    }
}

/// Roles a query variable can play when folding binding rows into a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MappingRole {
    NodeId,
    NodeLabel { owner: String },
    NodeProperty { key: String, owner: String },
    EdgeSource,
    EdgeTarget,
    EdgeLabel,
    EdgeProperty { key: String },
}

/// Role assignments per variable. A variable may carry several roles
/// (a node id that is also the edge source, for example).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MappingSpec {
    assignments: Vec<(String, MappingRole)>,
}

impl MappingSpec {
    pub fn new() -> Self {
        MappingSpec::default()
    }

    pub fn assign(mut self, variable: impl Into<String>, role: MappingRole) -> Self {
        self.assignments.push((variable.into(), role));
        self
    }

    pub fn assignments(&self) -> &[(String, MappingRole)] {
        &self.assignments
    }

    fn vars_with(&self, pred: impl Fn(&MappingRole) -> bool) -> Vec<&str> {
        self.assignments
            .iter()
            .filter(|(_, r)| pred(r))
            .map(|(v, _)| v.as_str())
            .collect()
    }

    fn validate(&self, bound_variables: &[String]) -> Result<()> {
        if self.assignments.is_empty() {
            return Err(Error::Mapping("mapping declares no role assignments".into()));
        }
        for (var, role) in &self.assignments {
            if !bound_variables.iter().any(|v| v == var) {
                return Err(Error::Mapping(format!(
                    "mapping references variable '?{var}' which the patterns do not bind"
                )));
            }
            let owner = match role {
                MappingRole::NodeLabel { owner } => Some(owner),
                MappingRole::NodeProperty { owner, .. } => Some(owner),
                _ => None,
            };
            if let Some(owner) = owner {
                let owner_is_node = self.assignments.iter().any(|(v, r)| {
                    v == owner
                        && matches!(
                            r,
                            MappingRole::NodeId | MappingRole::EdgeSource | MappingRole::EdgeTarget
                        )
                });
                if !owner_is_node {
                    return Err(Error::Mapping(format!(
                        "owner variable '?{owner}' does not carry a node role"
                    )));
                }
            }
            if let MappingRole::NodeProperty { key, .. } | MappingRole::EdgeProperty { key } = role {
                if key.is_empty() {
                    return Err(Error::Mapping("property key must be non-empty".into()));
                }
            }
        }
        let sources = self.vars_with(|r| matches!(r, MappingRole::EdgeSource));
        let targets = self.vars_with(|r| matches!(r, MappingRole::EdgeTarget));
        let labels = self.vars_with(|r| matches!(r, MappingRole::EdgeLabel));
        let edge_props = self.vars_with(|r| matches!(r, MappingRole::EdgeProperty { .. }));
        let has_edge_group =
            !sources.is_empty() || !targets.is_empty() || !labels.is_empty() || !edge_props.is_empty();
        if has_edge_group {
            if sources.len() != 1 || targets.len() != 1 {
                return Err(Error::Mapping(
                    "an edge group requires exactly one edge-source and one edge-target".into(),
                ));
            }
            if labels.len() > 1 {
                return Err(Error::Mapping("at most one edge-label is allowed".into()));
            }
            if labels.is_empty() {
                return Err(Error::Mapping(
                    "an edge group requires an edge-label assignment".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Runs a basic graph pattern and folds each binding row into a property
/// graph according to the mapping.
pub fn project_with_mapping(
    store: &Store,
    graph_name: &str,
    patterns: &[TriplePattern],
    mapping: &MappingSpec,
    config: &ProjectionConfig,
) -> Result<Projection> {
    let table: BindingTable = store.match_bgp(graph_name, patterns)?;
    mapping.validate(table.variables())?;
    let mut diagnostics = Diagnostics::new();

    let mut nodes: BTreeMap<String, NodeBuilder> = BTreeMap::new();
    let mut edges: BTreeMap<(String, String, String, Vec<(String, String)>), SpgEdge> =
        BTreeMap::new();
    let mut edge_counters: BTreeMap<(String, String, String), usize> = BTreeMap::new();

    for row in 0..table.len() {
        let binding = |var: &str| table.get(row, var).expect("validated variable");

        // First pass: materialize every node-bearing variable of the row.
        let mut row_nodes: BTreeMap<&str, String> = BTreeMap::new();
        for (var, role) in mapping.assignments() {
            if matches!(
                role,
                MappingRole::NodeId | MappingRole::EdgeSource | MappingRole::EdgeTarget
            ) {
                let term = binding(var);
                if term.is_literal() {
                    return Err(Error::Mapping(format!(
                        "node variable '?{var}' is bound to a literal in a result row"
                    )));
                }
                let id = config.display_id(term);
                nodes.entry(id.clone()).or_insert_with(|| NodeBuilder {
                    types: BTreeSet::new(),
                    properties: BTreeMap::new(),
                });
                row_nodes.insert(var.as_str(), id);
            }
        }

        let mut edge_source: Option<String> = None;
        let mut edge_target: Option<String> = None;
        let mut edge_label: Option<String> = None;
        let mut edge_properties: BTreeMap<String, PropertyValue> = BTreeMap::new();
        for (var, role) in mapping.assignments() {
            let term = binding(var);
            match role {
                MappingRole::NodeId => {}
                MappingRole::NodeLabel { owner } => {
                    let owner_id = row_nodes
                        .get(owner.as_str())
                        .ok_or_else(|| Error::Mapping(format!("owner '?{owner}' missing in row")))?;
                    let label = config.display_pred(term);
                    nodes.get_mut(owner_id).expect("owner node").types.insert(label);
                }
                MappingRole::NodeProperty { key, owner } => {
                    let owner_id = row_nodes
                        .get(owner.as_str())
                        .cloned()
                        .ok_or_else(|| Error::Mapping(format!("owner '?{owner}' missing in row")))?;
                    let value = property_value_for(term, config, &mut diagnostics, var);
                    let node = nodes.get_mut(&owner_id).expect("owner node");
                    if let Some(previous) = node.properties.get(key) {
                        if previous != &value {
                            diagnostics.warn(
                                "property-collision",
                                format!(
                                    "property '{key}' on '{owner_id}' overwritten ('{previous}' -> '{value}')"
                                ),
                                Some(owner_id.clone()),
                            );
                        }
                    }
                    node.properties.insert(key.clone(), value);
                }
                MappingRole::EdgeSource => edge_source = row_nodes.get(var.as_str()).cloned(),
                MappingRole::EdgeTarget => edge_target = row_nodes.get(var.as_str()).cloned(),
                MappingRole::EdgeLabel => edge_label = Some(config.display_pred(term)),
                MappingRole::EdgeProperty { key } => {
                    let value = property_value_for(term, config, &mut diagnostics, var);
                    edge_properties.insert(key.clone(), value);
                }
            }
        }

        if let (Some(source), Some(target), Some(label)) = (edge_source, edge_target, edge_label) {
            let signature = (
                source.clone(),
                target.clone(),
                label.clone(),
                edge_properties
                    .iter()
                    .map(|(k, v)| (k.clone(), v.lexical()))
                    .collect::<Vec<_>>(),
            );
            if !edges.contains_key(&signature) {
                let counter_key = (source.clone(), label.clone(), target.clone());
                let k = edge_counters.entry(counter_key).or_insert(0);
                let id = format!("{source}|{label}|{target}|{k}");
                *k += 1;
                let mut edge = SpgEdge::new(id, source, target, label);
                edge.properties = edge_properties;
                edges.insert(signature, edge);
            }
        }
    }

    let mut node_list = Vec::with_capacity(nodes.len());
    for (id, builder) in nodes {
        let label = primary_label(&builder.types, config);
        node_list.push(SpgNode {
            id,
            label,
            types: builder.types,
            properties: builder.properties,
        });
    }
    let graph = SpgGraph::from_parts(node_list, edges.into_values().collect())?;
    Ok(Projection {
        graph,
        diagnostics,
    })
}

fn property_value_for(
    term: &Term,
    config: &ProjectionConfig,
    diagnostics: &mut Diagnostics,
    var: &str,
) -> PropertyValue {
    match term {
        Term::Literal(lit) => {
            let (value, parsed) = PropertyValue::from_literal(lit);
            if !parsed {
                diagnostics.warn(
                    "unparsable-literal",
                    format!(
                        "literal '{}' does not parse under <{}>; kept as text",
                        lit.lexical, lit.datatype
                    ),
                    None,
                );
            }
            value
        }
        resource => {
            diagnostics.warn(
                "resource-valued-property",
                format!("variable '?{var}' is bound to a resource; stored as text"),
                Some(config.display_id(resource)),
            );
            PropertyValue::Text(config.display_id(resource))
        }
    }
}
