//! Recognizing the four basic classes and coloring each with exactly
//! omega colors, including König edge coloring of bipartite roots.
//!
//! Run with `cargo run --example basic_coloring`.

use perfect_graphs::basic::{color_basic, konig_edge_coloring, line_graph, recognize_basic};
use perfect_graphs::graph::Graph;
use perfect_graphs::oracle::clique_number;
use perfect_graphs::Limits;

fn main() {
    let limits = Limits::at_least(16);
    let k33 = Graph::complete_bipartite(3, 3);
    let (l_k34, _) = line_graph(&Graph::complete_bipartite(3, 4));

    let zoo: Vec<(&str, Graph)> = vec![
        ("C6", Graph::cycle(6)),
        ("complement of C6", Graph::cycle(6).complement()),
        ("line graph of K33", line_graph(&k33).0),
        ("complement of L(K34)", l_k34.complement()),
        ("C5", Graph::cycle(5)),
    ];

    for (name, g) in &zoo {
        let class = recognize_basic(g);
        print!("{name}: {}", class.tag());
        if class.is_basic() {
            let coloring = color_basic(g, &class).unwrap();
            let (omega, _) = clique_number(g, &limits).unwrap();
            println!(
                " -> colored with {} colors (omega = {omega})",
                coloring.colors_used()
            );
            assert_eq!(coloring.colors_used(), omega);
        } else {
            println!(" -> no constructive coloring from this module");
        }
    }

    // König: a bipartite graph edge-colors with exactly its maximum
    // degree.
    let ec = konig_edge_coloring(&k33).unwrap();
    println!(
        "\nK33 edge-colored with {} colors (max degree {}):",
        ec.colors_used(),
        k33.max_degree()
    );
    for (edge, color) in ec.edges.iter().zip(&ec.colors) {
        println!("  edge {edge:?} -> color {color}");
    }
}
