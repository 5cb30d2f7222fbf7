//! The Roussel–Rubio lemma as an executable check: split a Berge graph
//! into a set S and an odd chordless path whose ends see all of S, and
//! one of three alternatives must hold.
//!
//! Run with `cargo run --example wonderful_lemma`.

use perfect_graphs::berge::{wonderful_check, wonderful_instances, WonderfulInstance};
use perfect_graphs::graph::{Graph, Path, VertexSet};
use perfect_graphs::Limits;

fn main() {
    let limits = Limits::default();

    // The smallest interesting instance: path u-u'-v'-v plus a single
    // s adjacent to u, u', v.
    let mut g = Graph::empty(5);
    for (a, b) in [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 3)] {
        g.add_edge(a, b);
    }
    let inst = WonderfulInstance {
        graph: g.clone(),
        s: VertexSet::from_iter(5, [4]),
        path: Path::new(vec![0, 1, 2, 3]),
    };
    let outcome = wonderful_check(&inst, &limits).unwrap();
    println!(
        "hand-built instance: {} saturated edge(s), parity alternative holds: {}",
        outcome.saturated_edges, outcome.parity_holds
    );

    // Scan a graph for every hypothesis-satisfying split.
    let instances = wonderful_instances(&g, &limits).unwrap();
    println!("\n{} instance(s) found by the scanner:", instances.len());
    for inst in &instances {
        let outcome = wonderful_check(inst, &limits).unwrap();
        println!(
            "  S = {:?}, path = {:?}: (i) {} (ii) {:?} (iii) {:?}",
            inst.s.to_vec(),
            inst.path.vertices,
            outcome.parity_holds,
            outcome.short_jump_holds,
            outcome.long_pair_holds,
        );
    }
}
