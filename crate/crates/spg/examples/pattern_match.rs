//! Load a reified graph into the indexed store and evaluate basic graph
//! patterns against it.
//!
//! Run with: cargo run -p spg --example pattern_match

use spg::{parse_ntriples_str, LoadMode, PatternTerm, Store, Term, TriplePattern};

const DATA: &str = r#"
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <http://ex.org/alice> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate> <http://ex.org/knows> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> <http://ex.org/bob> .
<http://ex.org/st1> <http://ex.org/since> "2019"^^<http://www.w3.org/2001/XMLSchema#integer> .
<http://ex.org/alice> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Person> .
<http://ex.org/bob> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Person> .
<http://ex.org/alice> <http://ex.org/name> "Alice" .
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut store = Store::new();
    store.load_named_graph("people", parse_ntriples_str(DATA)?, LoadMode::Replace)?;
    println!(
        "loaded graph 'people' with {} triples",
        store.triple_count("people").unwrap()
    );

    // every statement node
    let statements = vec![TriplePattern::new(
        PatternTerm::var("st"),
        Term::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type"),
        Term::iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement"),
    )?];
    println!("\n?st a rdf:Statement:");
    print!("{}", store.match_bgp("people", &statements)?.to_tsv());

    // join the reification components back together
    let join = vec![
        TriplePattern::parse("?st <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> ?who")?,
        TriplePattern::parse("?st <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> ?whom")?,
        TriplePattern::parse("?st <http://ex.org/since> ?year")?,
    ];
    println!("\nreification join (?who, ?whom, ?year):");
    print!("{}", store.match_bgp("people", &join)?.to_tsv());

    // the fully unbound pattern enumerates the graph
    let all = vec![TriplePattern::new(
        PatternTerm::var("s"),
        PatternTerm::var("p"),
        PatternTerm::var("o"),
    )?];
    let table = store.match_bgp("people", &all)?;
    println!("\n?s ?p ?o matches {} rows", table.len());
    Ok(())
}
