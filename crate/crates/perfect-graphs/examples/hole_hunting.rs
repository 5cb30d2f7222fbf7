//! Core graph queries: complements, hole enumeration with parity, and
//! shortest paths between vertex sets.
//!
//! Run with `cargo run --example hole_hunting`.

use perfect_graphs::graph::{Graph, HoleParity, VertexSet};

fn main() {
    let c7 = Graph::cycle(7);
    let anti7 = c7.complement();

    println!("C7 has {} edges; its complement has {}", c7.edge_count(), anti7.edge_count());

    let hole = c7.find_hole(HoleParity::Odd, 4).unwrap();
    println!("odd hole in C7: {:?}", hole.vertices);

    println!("holes of the complement of C7:");
    for hole in anti7.holes() {
        println!(
            "  length {} ({}): {:?}",
            hole.vertices.len(),
            if hole.vertices.len() % 2 == 0 { "even" } else { "odd" },
            hole.vertices
        );
    }
    assert!(anti7.find_hole(HoleParity::Odd, 4).is_none());
    println!("no odd hole hides in the complement");

    // Shortest connection between two vertex sets of C7, interior
    // vertices avoiding both.
    let from = VertexSet::from_iter(7, [0]);
    let to = VertexSet::from_iter(7, [3, 4]);
    let path = c7.shortest_path_between_sets(&from, &to).unwrap().unwrap();
    println!("shortest path from {{0}} to {{3,4}}: {:?}", path.vertices);
}
