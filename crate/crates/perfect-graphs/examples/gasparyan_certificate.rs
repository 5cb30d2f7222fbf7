//! Builds the stable-set/clique certificate of a minimally imperfect
//! graph and checks the matrix identity A·Bᵀ = J − I by hand.
//!
//! Run with `cargo run --example gasparyan_certificate`.

use perfect_graphs::graph::Graph;
use perfect_graphs::oracle::gasparyan_certificate;
use perfect_graphs::Limits;

fn main() {
    let g = Graph::cycle(7);
    let cert = gasparyan_certificate(&g, &Limits::default()).unwrap();

    println!(
        "C7: alpha = {}, omega = {}, so {} stable sets and cliques on {} vertices",
        cert.alpha,
        cert.omega,
        cert.alpha * cert.omega + 1,
        g.n()
    );
    println!("{}", cert.to_text());

    // The product matrix, printed entrywise: all ones off the
    // diagonal, zeros on it.
    println!("A · Bᵀ:");
    for a in &cert.stable_sets {
        let row: Vec<String> = cert
            .cliques
            .iter()
            .map(|b| a.intersection_len(b).to_string())
            .collect();
        println!("  {}", row.join(" "));
    }
    cert.verify(&g).unwrap();
    println!("certificate verified");
}
