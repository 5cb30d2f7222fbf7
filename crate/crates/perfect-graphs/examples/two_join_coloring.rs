//! The constructive 2-join coloring pipeline, end to end: glue two
//! perfect sides, build the blocks, color them with the parity-
//! controlled recipe, and combine into an omega-coloring of the whole.
//!
//! Run with `cargo run --example two_join_coloring`.

use perfect_graphs::decompose::{
    block_coloring, combine_colorings, perfect_color, two_join_blocks, PerfectionHandling,
};
use perfect_graphs::generate::{glue_two_join, random_two_join_composition, rng_for};
use perfect_graphs::graph::{Graph, VertexSet};
use perfect_graphs::oracle::{chromatic_number, clique_number};
use perfect_graphs::Limits;

fn main() {
    let limits = Limits::at_least(20);

    // Two paths of three vertices, glued endpoint-to-endpoint: C6.
    let mut side = Graph::empty(3);
    side.add_edge(0, 1);
    side.add_edge(1, 2);
    let a = VertexSet::from_iter(3, [0]);
    let b = VertexSet::from_iter(3, [2]);
    let (c6, join) = glue_two_join(&side, &a, &b, &side, &a, &b).unwrap();
    println!("glued graph: {:?}", c6);

    let blocks = two_join_blocks(&c6, &join).unwrap();
    println!(
        "block parities: {} and {}",
        blocks.first.parity.tag(),
        blocks.second.parity.tag()
    );

    let (omega, _) = clique_number(&c6, &limits).unwrap();
    let (bc1, _) = block_coloring(&blocks.first, omega, 6).unwrap();
    let (bc2, _) = block_coloring(&blocks.second, omega, 6).unwrap();
    println!(
        "block 1: |C(A)| = {}, |C(B)| = {}, overlap {}",
        bc1.color_a.len(),
        bc1.color_b.len(),
        bc1.color_a.intersection(&bc1.color_b).count()
    );
    let combined = combine_colorings(&c6, &join, &bc1, &bc2, omega).unwrap();
    println!(
        "combined coloring ({} colors): {:?}",
        combined.coloring.colors_used(),
        combined.coloring.assignment
    );

    // A random composition through the full pipeline, checked against
    // the exact oracle.
    let mut rng = rng_for(2024, 0);
    let comp = random_two_join_composition(&mut rng, 6, 10, &Limits::default()).unwrap();
    let pc = perfect_color(&comp.graph, &limits, PerfectionHandling::Trust).unwrap();
    let (chi, _) = chromatic_number(&comp.graph, &limits).unwrap();
    println!(
        "\nrandom composition on {} vertices: pipeline used {} colors via {}, oracle chi = {chi}",
        comp.graph.n(),
        pc.coloring.colors_used(),
        pc.tree.tag()
    );
    assert_eq!(pc.coloring.colors_used(), chi);
}
