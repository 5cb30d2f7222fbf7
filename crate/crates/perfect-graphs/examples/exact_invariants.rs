//! Exact clique, stability, and chromatic numbers, and the perfection
//! tests, on the classic families.
//!
//! Run with `cargo run --example exact_invariants`.

use perfect_graphs::graph::Graph;
use perfect_graphs::oracle::{
    chromatic_number, clique_number, is_minimally_imperfect, is_perfect, lovasz_bound_holds,
    stability_number,
};
use perfect_graphs::Limits;

fn main() {
    let limits = Limits::default();
    let zoo: Vec<(String, Graph)> = vec![
        ("C5".into(), Graph::cycle(5)),
        ("C6".into(), Graph::cycle(6)),
        ("C7".into(), Graph::cycle(7)),
        ("anti-C7".into(), Graph::cycle(7).complement()),
        ("K5".into(), Graph::complete(5)),
        ("K33".into(), Graph::complete_bipartite(3, 3)),
    ];

    println!("{:<8} {:>5} {:>5} {:>5} {:>8} {:>17} {:>7}", "graph", "omega", "alpha", "chi", "perfect", "min-imperfect", "lovasz");
    for (name, g) in &zoo {
        let (omega, _) = clique_number(g, &limits).unwrap();
        let (alpha, _) = stability_number(g, &limits).unwrap();
        let (chi, coloring) = chromatic_number(g, &limits).unwrap();
        coloring.validate(g).unwrap();
        let perfect = is_perfect(g, &limits).unwrap().perfect;
        let minimal = is_minimally_imperfect(g, &limits).unwrap();
        let lovasz = lovasz_bound_holds(g, &limits).unwrap();
        println!("{name:<8} {omega:>5} {alpha:>5} {chi:>5} {perfect:>8} {minimal:>17} {lovasz:>7}");
    }

    // An imperfect graph exposes its smallest violating subgraph.
    let mut c5_plus = Graph::empty(6);
    for v in 0..5 {
        c5_plus.add_edge(v, (v + 1) % 5);
    }
    let report = is_perfect(&c5_plus, &limits).unwrap();
    println!(
        "\nC5 with an isolated vertex: imperfect, smallest violator {:?}",
        report.witness.unwrap().to_vec()
    );
}
