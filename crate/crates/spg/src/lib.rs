//! Semantic property graphs: project reified RDF into compact labeled
//! property graphs, validate them against an RDFS ontology, and
//! serialize them as GDF.
//!
//! RDF expresses metadata about a relationship by reifying it: a
//! statement node typed `rdf:Statement` carries `rdf:subject`,
//! `rdf:predicate`, and `rdf:object` links plus any number of metadata
//! triples. That encoding is flexible and exchangeable, but it inflates
//! the graph — every attributed edge costs four triples before the first
//! attribute — and the statement machinery dominates degree
//! distributions and query shapes. This crate collapses the reification
//! layer: statement nodes become attributed edges, type triples become
//! labels, literal triples become properties, and the ontology keeps
//! governing the result.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! - **`parse_roundtrip`** — N-Triples and Turtle parsing, canonical serialization
//! - **`pattern_match`** — the indexed store and basic-graph-pattern matching
//! - **`project_reified`** — reification detection and projection, plus the exact inverse
//! - **`mapping_projection`** — query-driven projection through role mappings
//! - **`validate_ontology`** — RDFS validation with an injected fault
//! - **`write_gdf`** — GDF serialization and its round trip
//! - **`degree_stats`** — degree distributions and compaction metrics
//! - **`query_template`** — compacting a reified query pattern into a wedge template
//! - **`throughput`** — the full pipeline on a large generated graph
//!
//! ```bash
//! cargo run -p spg --example project_reified
//! cargo run --release -p spg --example throughput 200000
//! ```
//!
//! # Quick start
//!
//! ```
//! use spg::{parse_ntriples_str, project, write_gdf, LoadMode, ProjectionConfig, Store};
//!
//! let doc = r#"
//! <http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> .
//! <http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <http://ex.org/alice> .
//! <http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate> <http://ex.org/knows> .
//! <http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> <http://ex.org/bob> .
//! <http://ex.org/st1> <http://ex.org/since> "2019"^^<http://www.w3.org/2001/XMLSchema#integer> .
//! "#;
//!
//! let mut store = Store::new();
//! store.load_named_graph("g", parse_ntriples_str(doc)?, LoadMode::Replace)?;
//! let projection = project(&store, "g", &ProjectionConfig::default())?;
//! assert_eq!(projection.graph.edge_count(), 1); // one attributed edge, no statement node
//! let (gdf, _) = write_gdf(&projection.graph);
//! assert!(gdf.starts_with("nodedef>name VARCHAR,label VARCHAR"));
//! # Ok::<(), spg::Error>(())
//! ```
//!
//! # Module map
//!
//! - [`term`] / [`vocab`] — the RDF term model and well-known IRIs
//! - [`ntriples`] / [`turtle`] — parsers and the canonical serializer
//! - [`store`] — named graphs under SPO/POS/OSP orderings, BGP matching
//! - [`model`] — property-graph nodes, edges, and values
//! - [`project`] — projection, its inverse, and mapping-driven projection
//! - [`ontology`] — RDFS schema extraction and validation
//! - [`gdf`] — the GDF writer and reader
//! - [`analytics`] — degree histograms, compaction metrics, query templates
//! - [`generator`] — seeded synthesis of reified graphs for testing
//! - [`cli`] — the `spg` command-line pipeline

pub mod analytics;
pub mod cli;
pub mod error;
pub mod gdf;
pub mod generator;
pub mod model;
pub mod ntriples;
pub mod ontology;
pub mod project;
pub mod store;
pub mod term;
pub mod turtle;
pub mod vocab;

pub use analytics::{
    compact_query, compaction_metrics, degree_histogram_rdf, degree_histogram_spg,
    has_variables, CompactionMetrics, DegreeHistogram,
};
pub use error::{Diagnostic, Diagnostics, Error, Result, Severity};
pub use gdf::{read_gdf, write_gdf, GdfColumn, GdfType};
pub use generator::{generate_reified, GeneratorConfig};
pub use model::{PropertyValue, SpgEdge, SpgGraph, SpgNode};
pub use ntriples::{parse_ntriples, parse_ntriples_str, serialize_ntriples, serialize_term};
pub use ontology::{
    load_ontology, validate_graph, OntologySchema, ValidationMode, ValidationReport, Violation,
    ViolationCode,
};
pub use project::{
    find_statements, project, project_with_mapping, reify, MappingRole, MappingSpec, Projection,
    ProjectionConfig, StatementDescriptor,
};
pub use store::{BindingTable, IndexedGraph, LoadMode, PatternTerm, Store, TriplePattern};
pub use term::{local_name, LiteralValue, RdfGraph, Term, Triple};
pub use turtle::{parse_turtle, parse_turtle_str};
pub use vocab::Vocabulary;
