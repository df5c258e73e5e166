//! Validate a projected graph against an RDFS ontology, then inject a
//! fault and watch the report catch it.
//!
//! Run with: cargo run -p spg --example validate_ontology

use spg::ontology::ValidationMode;
use spg::{
    load_ontology, parse_ntriples_str, parse_turtle_str, project, validate_graph, LoadMode,
    ProjectionConfig, Store,
};

const ONTOLOGY: &str = r#"
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
@prefix ex: <http://ex.org/> .

ex:Person a rdfs:Class .
ex:Agent a rdfs:Class .
ex:Person rdfs:subClassOf ex:Agent .
ex:knows a rdf:Property ;
    rdfs:domain ex:Person ;
    rdfs:range ex:Person .
ex:since rdfs:range xsd:integer .
"#;

const CLEAN: &str = r#"
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <http://ex.org/alice> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate> <http://ex.org/knows> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> <http://ex.org/bob> .
<http://ex.org/st1> <http://ex.org/since> "2019"^^<http://www.w3.org/2001/XMLSchema#integer> .
<http://ex.org/alice> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Person> .
<http://ex.org/bob> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Person> .
"#;

// same graph, but alice claims an undeclared class and since is text
const FAULTY: &str = r#"
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <http://ex.org/alice> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate> <http://ex.org/knows> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> <http://ex.org/bob> .
<http://ex.org/st1> <http://ex.org/since> "soon" .
<http://ex.org/alice> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Organization> .
<http://ex.org/bob> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Person> .
"#;

fn check(name: &str, data: &str) -> Result<(), Box<dyn std::error::Error>> {
    let schema = load_ontology(&parse_turtle_str(ONTOLOGY)?);
    let mut store = Store::new();
    store.load_named_graph(name, parse_ntriples_str(data)?, LoadMode::Replace)?;
    let projection = project(&store, name, &ProjectionConfig::default())?;
    let report = validate_graph(&projection.graph, &schema, ValidationMode::Lenient);
    if report.is_clean() {
        println!("{name}: clean");
    } else {
        println!("{name}: {} violation(s)", report.violations.len());
        print!("{}", report.to_text());
    }
    for warning in &report.warnings {
        println!("{name}: warning: {warning}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    check("clean", CLEAN)?;
    println!();
    check("faulty", FAULTY)?;
    Ok(())
}
