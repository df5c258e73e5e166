//! Serialize a projected graph to GDF and read it back.
//!
//! Run with: cargo run -p spg --example write_gdf

use spg::{parse_ntriples_str, project, read_gdf, write_gdf, LoadMode, ProjectionConfig, Store};

const DATA: &str = r#"
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <http://ex.org/alice> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate> <http://ex.org/knows> .
<http://ex.org/st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> <http://ex.org/bob> .
<http://ex.org/st1> <http://ex.org/since> "2019"^^<http://www.w3.org/2001/XMLSchema#integer> .
<http://ex.org/alice> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Person> .
<http://ex.org/bob> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Person> .
<http://ex.org/alice> <http://ex.org/name> "Curie, Marie" .
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut store = Store::new();
    store.load_named_graph("g", parse_ntriples_str(DATA)?, LoadMode::Replace)?;
    let projection = project(&store, "g", &ProjectionConfig::default())?;

    let (text, diagnostics) = write_gdf(&projection.graph);
    for diagnostic in diagnostics.iter() {
        eprintln!("{diagnostic}");
    }
    // note the reserved-name rename (name -> name_attr) and the quoted
    // comma-bearing value
    println!("{text}");

    let back = read_gdf(&text)?;
    assert!(back.gdf_equivalent(&projection.graph));
    let (again, _) = write_gdf(&back);
    assert_eq!(text, again);
    println!("read(write(g)) is equivalent and write∘read is byte-stable");
    Ok(())
}
