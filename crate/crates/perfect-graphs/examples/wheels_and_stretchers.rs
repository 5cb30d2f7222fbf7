//! The five-way wheel taxonomy and stretcher detection.
//!
//! Run with `cargo run --example wheels_and_stretchers`.

use perfect_graphs::graph::Graph;
use perfect_graphs::wheels::{find_stretcher, find_wheels};
use perfect_graphs::Limits;

fn c6_with_center(spokes: &[usize]) -> Graph {
    let mut g = Graph::empty(7);
    for v in 0..6 {
        g.add_edge(v, (v + 1) % 6);
    }
    for &s in spokes {
        g.add_edge(6, s);
    }
    g
}

fn main() {
    let limits = Limits::default();

    for (name, g) in [
        ("universal (center sees all of C6)", c6_with_center(&[0, 1, 2, 3, 4, 5])),
        ("line (two triangles meeting at the center)", c6_with_center(&[0, 1, 3, 4])),
        ("triangle-free (alternating spokes)", c6_with_center(&[0, 2, 4])),
        ("proper (three spokes, one triangle)", c6_with_center(&[0, 1, 3])),
    ] {
        let wheels = find_wheels(&g, &[], &limits).unwrap();
        println!("{name}:");
        for w in wheels {
            println!(
                "  hole {:?} center {} -> {} ({}-wheel)",
                w.hole.vertices, w.center, w.kind.tag(), w.arity
            );
        }
    }

    // A twin wheel needs a center over three consecutive hole vertices.
    let mut c5c = Graph::empty(6);
    for v in 0..5 {
        c5c.add_edge(v, (v + 1) % 5);
    }
    for s in [0, 1, 2] {
        c5c.add_edge(5, s);
    }
    let wheels = find_wheels(&c5c, &[], &limits).unwrap();
    println!("C5 + consecutive center:");
    for w in wheels {
        println!("  hole {:?} center {} -> {}", w.hole.vertices, w.center, w.kind.tag());
    }

    // Stretchers: two triangles joined by three disjoint paths, at
    // least one of length two or more. The prism just misses.
    let mut prism = Graph::empty(6);
    for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)] {
        prism.add_edge(u, v);
    }
    println!("\nprism stretcher: {:?}", find_stretcher(&prism, &limits).unwrap());

    let mut stretched = Graph::empty(7);
    for (u, v) in [(0, 1), (0, 2), (1, 2), (4, 5), (4, 6), (5, 6), (0, 3), (3, 4), (1, 5), (2, 6)] {
        stretched.add_edge(u, v);
    }
    let s = find_stretcher(&stretched, &limits).unwrap().unwrap();
    println!(
        "stretched prism: triangles {:?} and {:?}, paths {:?}",
        s.triangle_a(),
        s.triangle_b(),
        s.paths.iter().map(|p| p.vertices.clone()).collect::<Vec<_>>()
    );
}
