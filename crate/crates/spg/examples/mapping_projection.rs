//! Query-driven projection: run a basic graph pattern and fold each
//! binding row into nodes and edges through per-variable role
//! assignments, instead of relying on reification detection.
//!
//! Run with: cargo run -p spg --example mapping_projection

use spg::{
    parse_ntriples_str, project_with_mapping, LoadMode, MappingRole, MappingSpec, ProjectionConfig,
    Store, TriplePattern,
};

const DATA: &str = r#"
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <http://ex.org/alice> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate> <http://ex.org/knows> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> <http://ex.org/bob> .
<http://ex.org/st1> <http://ex.org/since> "2019"^^<http://www.w3.org/2001/XMLSchema#integer> .
<http://ex.org/st2> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <http://ex.org/bob> .
<http://ex.org/st2> <http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate> <http://ex.org/knows> .
<http://ex.org/st2> <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> <http://ex.org/carol> .
<http://ex.org/st2> <http://ex.org/since> "2021"^^<http://www.w3.org/2001/XMLSchema#integer> .
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut store = Store::new();
    store.load_named_graph("g", parse_ntriples_str(DATA)?, LoadMode::Replace)?;

    // the projection query: one row per reified statement
    let patterns = vec![
        TriplePattern::parse("?st <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> ?u")?,
        TriplePattern::parse("?st <http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate> ?p")?,
        TriplePattern::parse("?st <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> ?v")?,
        TriplePattern::parse("?st <http://ex.org/since> ?year")?,
    ];

    // how each variable lands in the property graph
    let mapping = MappingSpec::new()
        .assign("u", MappingRole::NodeId)
        .assign("u", MappingRole::EdgeSource)
        .assign("v", MappingRole::NodeId)
        .assign("v", MappingRole::EdgeTarget)
        .assign("p", MappingRole::EdgeLabel)
        .assign("year", MappingRole::EdgeProperty { key: "since".into() });

    let projection =
        project_with_mapping(&store, "g", &patterns, &mapping, &ProjectionConfig::default())?;
    for diagnostic in projection.diagnostics.iter() {
        eprintln!("{diagnostic}");
    }

    println!(
        "{} nodes, {} edges from {} binding rows",
        projection.graph.node_count(),
        projection.graph.edge_count(),
        2
    );
    for edge in projection.graph.edges() {
        println!(
            "{} -[{} since={}]-> {}",
            edge.source,
            edge.label,
            edge.properties.get("since").unwrap(),
            edge.target
        );
    }
    Ok(())
}
