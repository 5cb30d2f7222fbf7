//! Hunting for 2-joins, 6-joins, skew partitions (with their cutset
//! kinds), star and double star cutsets, and homogeneous pairs.
//!
//! Run with `cargo run --example structure_census`.

use perfect_graphs::graph::Graph;
use perfect_graphs::structure::{
    classify_cutset, find_double_star_cutset, find_homogeneous_pair, find_six_join,
    find_skew_partition, find_star_cutset, find_two_join, HomogeneousPairOptions,
};
use perfect_graphs::Limits;

fn main() {
    let limits = Limits::default();

    // A path: the middle edge is simultaneously a skew cutset, a star
    // cutset, and a double star cutset.
    let mut p4 = Graph::empty(4);
    for v in 0..3 {
        p4.add_edge(v, v + 1);
    }
    let sp = find_skew_partition(&p4, &limits).unwrap().unwrap();
    println!(
        "P4 skew partition: a {:?}, b {:?}, c {:?}, d {:?}",
        sp.a.to_vec(), sp.b.to_vec(), sp.c.to_vec(), sp.d.to_vec()
    );
    let kinds = classify_cutset(&p4, &sp).unwrap();
    println!(
        "  cutset kinds: {:?}",
        kinds.kinds().iter().map(|k| k.tag()).collect::<Vec<_>>()
    );
    println!("  star cutset: {:?}", find_star_cutset(&p4));
    println!("  double star cutset: {:?}", find_double_star_cutset(&p4));

    // C7 splits along a 2-join; its complement does not (it is a
    // minimally imperfect non-hole).
    println!("\nC7 two-join: {:?}", find_two_join(&Graph::cycle(7)));
    println!(
        "anti-C7 two-join: {:?}",
        find_two_join(&Graph::cycle(7).complement())
    );

    // A hand-built 6-join: the 6-hole 0-1-2-3-4-5 with a private
    // neighbor on each side.
    let mut g = Graph::empty(8);
    for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 0), (7, 1)] {
        g.add_edge(u, v);
    }
    let sj = find_six_join(&g).unwrap();
    println!(
        "\n6-join: x classes {:?}, y classes {:?}",
        sj.x.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
        sj.y.iter().map(|s| s.to_vec()).collect::<Vec<_>>()
    );

    // Replicating a C4 vertex creates a homogeneous pair.
    let mut c4r = Graph::empty(5);
    for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 3)] {
        c4r.add_edge(u, v);
    }
    let hp = find_homogeneous_pair(&c4r, &limits, HomogeneousPairOptions::default())
        .unwrap()
        .unwrap();
    println!(
        "\nreplicated C4 homogeneous pair: a1 {:?}, a2 {:?}, b {:?}",
        hp.a1.to_vec(), hp.a2.to_vec(), hp.b.to_vec()
    );

    // Odd holes admit none of these within reach of their size.
    let c5 = Graph::cycle(5);
    assert!(find_skew_partition(&c5, &limits).unwrap().is_none());
    assert!(find_two_join(&c5).is_none());
    assert!(find_homogeneous_pair(&c5, &limits, HomogeneousPairOptions::default())
        .unwrap()
        .is_none());
    println!("\nC5: no skew partition, no 2-join, no homogeneous pair");
}
