//! Compact a reified query pattern into a property-graph query template.
//! An 11-triple reified wedge (two hops, typed endpoints) becomes a
//! 3-node, 2-edge template with `?name` variable ids, ready to feed a
//! subgraph matcher.
//!
//! Run with: cargo run -p spg --example query_template

use spg::{compact_query, compaction_metrics, parse_ntriples_str, write_gdf, ProjectionConfig};

const WEDGE: &str = r#"
<var:st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> .
<var:st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <var:x> .
<var:st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate> <http://ex.org/knows> .
<var:st1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> <var:y> .
<var:st2> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> .
<var:st2> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <var:y> .
<var:st2> <http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate> <http://ex.org/knows> .
<var:st2> <http://www.w3.org/1999/02/22-rdf-syntax-ns#object> <var:z> .
<var:x> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Person> .
<var:y> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Person> .
<var:z> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex.org/Person> .
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pattern = parse_ntriples_str(WEDGE)?;
    println!("reified wedge pattern: {} triples", pattern.len());

    let projection = compact_query(&pattern, &ProjectionConfig::default())?;
    let template = &projection.graph;
    println!(
        "compacted template: {} nodes, {} edges",
        template.node_count(),
        template.edge_count()
    );

    let metrics = compaction_metrics(&pattern, template);
    println!(
        "edge compaction ratio: {:.1}\n",
        metrics.edge_ratio.unwrap_or(f64::NAN)
    );

    let (gdf, _) = write_gdf(template);
    println!("template in GDF:\n{gdf}");
    Ok(())
}
