//! File formats and generator recipes: parsing, emitting, and labels.
//!
//! Run with `cargo run --example corpus_files`.

use perfect_graphs::generate::{generate, parse_recipe};
use perfect_graphs::io::{emit, parse_graph, Format};

fn main() {
    // DIMACS in, edge list out.
    let dimacs = "c the 5-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
    let doc = parse_graph(dimacs.as_bytes(), Format::Dimacs).unwrap();
    println!("parsed C5 from DIMACS; as an edge list:\n{}", emit(&doc, Format::EdgeList));

    // Labeled edge lists index vertices by first appearance.
    let labeled = "alice bob\nbob carol\ncarol alice\n";
    let doc = parse_graph(labeled.as_bytes(), Format::EdgeList).unwrap();
    println!(
        "labeled triangle: vertex 2 is {:?}; round-trips to:\n{}",
        doc.label(2),
        emit(&doc, Format::EdgeList)
    );

    // Recipes are reproducible given a seed.
    for text in ["antihole:9", "replicate:0,3:cycle:4", "random-berge:8,0.5"] {
        let recipe = parse_recipe(text).unwrap();
        let doc = generate(&recipe, 7).unwrap();
        println!(
            "{text}: {} vertices, {} edges (source: {})",
            doc.graph.n(),
            doc.graph.edge_count(),
            doc.source
        );
    }
}
