//! Time the full pipeline on a large generated graph: serialize to
//! N-Triples, parse it back, index, project, and write GDF.
//!
//! Run with: cargo run --release -p spg --example throughput [statements]

use std::time::Instant;

use spg::generator::{generate_reified, GeneratorConfig};
use spg::{parse_ntriples_str, project, serialize_ntriples, write_gdf, LoadMode, ProjectionConfig, Store};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let statements: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(100_000);

    let config = GeneratorConfig {
        seed: 9,
        statements,
        properties_per_statement: (0, 4),
        ..GeneratorConfig::default()
    };
    let t = Instant::now();
    let graph = generate_reified(&config);
    println!(
        "generated {} triples ({} statements) in {:.2}s",
        graph.len(),
        statements,
        t.elapsed().as_secs_f64()
    );

    let t = Instant::now();
    let text = serialize_ntriples(&graph);
    println!(
        "serialized {:.1} MB of N-Triples in {:.2}s",
        text.len() as f64 / 1e6,
        t.elapsed().as_secs_f64()
    );

    let t = Instant::now();
    let parsed = parse_ntriples_str(&text)?;
    println!("parsed back in {:.2}s", t.elapsed().as_secs_f64());

    let t = Instant::now();
    let mut store = Store::new();
    store.load_named_graph("big", parsed, LoadMode::Replace)?;
    println!("indexed (SPO/POS/OSP) in {:.2}s", t.elapsed().as_secs_f64());

    let t = Instant::now();
    let projection = project(&store, "big", &ProjectionConfig::default())?;
    println!(
        "projected to {} nodes / {} edges in {:.2}s",
        projection.graph.node_count(),
        projection.graph.edge_count(),
        t.elapsed().as_secs_f64()
    );

    let t = Instant::now();
    let (gdf, _) = write_gdf(&projection.graph);
    println!(
        "wrote {:.1} MB of GDF in {:.2}s",
        gdf.len() as f64 / 1e6,
        t.elapsed().as_secs_f64()
    );
    Ok(())
}
