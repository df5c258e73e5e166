//! Parse the same small graph from N-Triples and Turtle, show that both
//! forms produce one triple set, and serialize it back canonically.
//!
//! Run with: cargo run -p spg --example parse_roundtrip

use spg::{parse_ntriples_str, parse_turtle_str, serialize_ntriples};

const NTRIPLES: &str = r#"
<http://ex.org/alice> <http://ex.org/knows> <http://ex.org/bob> .
<http://ex.org/alice> <http://ex.org/name> "Alice" .
<http://ex.org/alice> <http://ex.org/age> "34"^^<http://www.w3.org/2001/XMLSchema#integer> .
<http://ex.org/bob> <http://ex.org/name> "Bob"@en .
"#;

const TURTLE: &str = r#"
@prefix ex: <http://ex.org/> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .

ex:alice ex:knows ex:bob ;
    ex:name "Alice" ;
    ex:age "34"^^xsd:integer .
ex:bob ex:name "Bob"@en .
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let from_nt = parse_ntriples_str(NTRIPLES)?;
    let from_ttl = parse_turtle_str(TURTLE)?;

    println!(
        "parsed {} triples from N-Triples, {} from Turtle",
        from_nt.len(),
        from_ttl.len()
    );
    assert_eq!(from_nt.triples(), from_ttl.triples());
    println!("both serializations expand to the same triple set\n");

    let canonical = serialize_ntriples(&from_ttl);
    println!("canonical N-Triples (sorted, minimal escapes):\n{canonical}");

    // the canonical form is a fixpoint
    let reparsed = parse_ntriples_str(&canonical)?;
    assert_eq!(serialize_ntriples(&reparsed), canonical);
    println!("round trip: parse(serialize(g)) == g");
    Ok(())
}
