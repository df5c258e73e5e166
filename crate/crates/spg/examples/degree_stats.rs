//! Compare the degree distribution of a reified RDF graph with its
//! projection and print the compaction metrics. The RDF view is heavily
//! skewed: the statement class node touches every reified statement.
//!
//! Run with: cargo run -p spg --example degree_stats

use spg::generator::{generate_reified, GeneratorConfig};
use spg::{
    compaction_metrics, degree_histogram_rdf, degree_histogram_spg, project, LoadMode,
    ProjectionConfig, Store,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = GeneratorConfig {
        seed: 11,
        statements: 2_000,
        max_entity_degree: Some(40),
        properties_per_statement: (1, 3),
        ..GeneratorConfig::default()
    };
    let graph = generate_reified(&config);

    let mut store = Store::new();
    store.load_named_graph("g", graph.clone(), LoadMode::Replace)?;
    let spg_graph = project(&store, "g", &ProjectionConfig::default())?.graph;

    let rdf = degree_histogram_rdf(&graph);
    let spg = degree_histogram_spg(&spg_graph);

    println!("# rdf degree distribution (top of the tail)");
    for (degree, count) in rdf.counts.iter().rev().take(5) {
        println!("{degree},{count}");
    }
    println!("rdf max degree: {}\n", rdf.max_degree());

    println!("# spg degree distribution (top of the tail)");
    for (degree, count) in spg.counts.iter().rev().take(5) {
        println!("{degree},{count}");
    }
    println!("spg max degree: {}\n", spg.max_degree());

    let metrics = compaction_metrics(&graph, &spg_graph);
    print!("{}", metrics.to_text());
    println!(
        "\nthe projection is {:.1}x smaller in edges and the degree skew drops {}x",
        metrics.edge_ratio.unwrap_or(f64::NAN),
        rdf.max_degree() / spg.max_degree().max(1)
    );
    Ok(())
}
