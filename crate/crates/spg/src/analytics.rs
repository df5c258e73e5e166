//! Structural comparisons between an RDF graph and its projection:
//! degree distributions, compaction ratios, and query-pattern
//! compaction into reusable templates.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::model::SpgGraph;
use crate::project::{project, Projection, ProjectionConfig, VARIABLE_SCHEME};
use crate::store::{LoadMode, Store};
use crate::term::{RdfGraph, Term};

/// Degree → node count, with totals. Degrees are undirected (in + out)
/// so the RDF and property-graph views stay comparable.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DegreeHistogram {
    pub counts: BTreeMap<u64, u64>,
    pub nodes: u64,
    pub edges: u64,
}

impl DegreeHistogram {
    fn from_degrees(degrees: impl Iterator<Item = u64>, edges: u64) -> DegreeHistogram {
        let mut histogram = DegreeHistogram {
            edges,
            ..DegreeHistogram::default()
        };
        for degree in degrees {
            *histogram.counts.entry(degree).or_insert(0) += 1;
            histogram.nodes += 1;
        }
        histogram
    }

    pub fn max_degree(&self) -> u64 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    /// Σ(degree × count); equals 2 × edges on every input.
    pub fn degree_sum(&self) -> u64 {
        self.counts.iter().map(|(d, c)| d * c).sum()
    }

    /// Two-column CSV, ascending degree.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,count\n");
        for (degree, count) in &self.counts {
            out.push_str(&format!("{degree},{count}\n"));
        }
        out
    }
}

/// Degree distribution of the RDF triple view: every subject and object
/// term (literals included) is a node, every triple contributes one
/// degree to each end, and predicates are not nodes.
pub fn degree_histogram_rdf(graph: &RdfGraph) -> DegreeHistogram {
    let mut degrees: BTreeMap<&Term, u64> = BTreeMap::new();
    for triple in graph.triples() {
        *degrees.entry(&triple.subject).or_insert(0) += 1;
        *degrees.entry(&triple.object).or_insert(0) += 1;
    }
    DegreeHistogram::from_degrees(degrees.into_values(), graph.len() as u64)
}

/// Degree distribution of a property graph: incident edge count per
/// node; isolated nodes count at degree zero.
pub fn degree_histogram_spg(graph: &SpgGraph) -> DegreeHistogram {
    let mut degrees: BTreeMap<&str, u64> = BTreeMap::new();
    for node in graph.nodes() {
        degrees.insert(&node.id, 0);
    }
    for edge in graph.edges() {
        *degrees.entry(&edge.source).or_insert(0) += 1;
        *degrees.entry(&edge.target).or_insert(0) += 1;
    }
    DegreeHistogram::from_degrees(degrees.into_values(), graph.edge_count() as u64)
}

/// Size comparison between an RDF graph and its projection. Ratios are
/// RDF over SPG; a zero denominator reports an absent ratio.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompactionMetrics {
    pub rdf_nodes: u64,
    pub rdf_triples: u64,
    pub spg_nodes: u64,
    pub spg_edges: u64,
    pub node_ratio: Option<f64>,
    pub edge_ratio: Option<f64>,
}

impl CompactionMetrics {
    /// Flat `key=value` text block.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("rdf_nodes={}\n", self.rdf_nodes));
        out.push_str(&format!("rdf_triples={}\n", self.rdf_triples));
        out.push_str(&format!("spg_nodes={}\n", self.spg_nodes));
        out.push_str(&format!("spg_edges={}\n", self.spg_edges));
        if let Some(ratio) = self.node_ratio {
            out.push_str(&format!("node_ratio={}\n", format_ratio(ratio)));
        }
        if let Some(ratio) = self.edge_ratio {
            out.push_str(&format!("edge_ratio={}\n", format_ratio(ratio)));
        }
        out
    }
}

fn format_ratio(v: f64) -> String {
    if v.is_finite() && v.fract() == 0.0 {
        format!("{v:.1}")
    } else {
        format!("{v}")
    }
}

fn ratio(numerator: u64, denominator: u64) -> Option<f64> {
    if denominator == 0 {
        None
    } else {
        Some(numerator as f64 / denominator as f64)
    }
}

/// Counts nodes and edges on both sides and computes the ratios.
pub fn compaction_metrics(graph: &RdfGraph, spg: &SpgGraph) -> CompactionMetrics {
    let rdf = degree_histogram_rdf(graph);
    CompactionMetrics {
        rdf_nodes: rdf.nodes,
        rdf_triples: graph.len() as u64,
        spg_nodes: spg.node_count() as u64,
        spg_edges: spg.edge_count() as u64,
        node_ratio: ratio(rdf.nodes, spg.node_count() as u64),
        edge_ratio: ratio(graph.len() as u64, spg.edge_count() as u64),
    }
}

/// True when the graph contains `var:` terms, i.e. is a query pattern.
pub fn has_variables(graph: &RdfGraph) -> bool {
    graph.triples().iter().any(|t| {
        [&t.subject, &t.predicate, &t.object]
            .iter()
            .any(|term| matches!(term, Term::Iri(iri) if iri.starts_with(VARIABLE_SCHEME)))
    })
}

/// Projects a reified query pattern into a query template: variables
/// (`var:` IRIs and blank nodes) become `?name` node ids and edge
/// labels, ready for GDF serialization.
pub fn compact_query(pattern: &RdfGraph, config: &ProjectionConfig) -> Result<Projection> {
    let mut store = Store::new();
    store.load_named_graph("pattern", pattern.clone(), LoadMode::Replace)?;
    let template_config = ProjectionConfig {
        variables: true,
        ..config.clone()
    };
    project(&store, "pattern", &template_config)
}
