//! Property tests pitting the solvers against independent brute-force
//! oracles, plus witness re-validation on random graphs.

use proptest::prelude::*;

use perfect_graphs::basic::konig_edge_coloring;
use perfect_graphs::decompose::replicate;
use perfect_graphs::graph::{Graph, HoleParity, VertexSet};
use perfect_graphs::io::{emit, parse_graph, Format, GraphDocument};
use perfect_graphs::oracle::{chromatic_number, clique_number, stability_number};
use perfect_graphs::structure::{
    find_double_star_cutset, find_homogeneous_pair, find_skew_partition, find_star_cutset,
    find_two_join, HomogeneousPairOptions,
};
use perfect_graphs::sweeps::graph_from_mask;
use perfect_graphs::Limits;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let slots = (n * (n - 1) / 2) as u32;
        (Just(n), 0u64..(1u64 << slots)).prop_map(|(n, mask)| graph_from_mask(n, mask))
    })
}

// Independent oracles -------------------------------------------------

fn brute_max_clique(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for mask in 0usize..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs
            .iter()
            .all(|&u| vs.iter().all(|&v| u == v || g.has_edge(u, v)))
        {
            best = best.max(vs.len());
        }
    }
    best
}

fn brute_chi(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    'k: for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if g.edges().all(|(u, v)| colors[u] != colors[v]) {
                return k;
            }
            let mut i = 0;
            loop {
                if i == n {
                    continue 'k;
                }
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }
    unreachable!()
}

/// Every vertex subset that induces a cycle, by degree counting.
fn brute_holes(g: &Graph) -> Vec<(usize, bool)> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in 0usize..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 4 {
            continue;
        }
        let s = VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        let (sub, _) = g.induced(&s);
        if sub.is_connected() && (0..sub.n()).all(|v| sub.degree(v) == 2) {
            out.push((size, size % 2 == 1));
        }
    }
    out
}

fn brute_set_distance(g: &Graph, from: &VertexSet, to: &VertexSet) -> Option<usize> {
    // Plain layered BFS with the interior restriction, written without
    // the production code's reverse-search trick.
    let blocked = from.union(to);
    let mut best: Option<usize> = None;
    for s in from.iter() {
        let mut dist = vec![usize::MAX; g.n()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).iter() {
                if dist[v] != usize::MAX {
                    continue;
                }
                dist[v] = dist[u] + 1;
                if to.contains(v) {
                    best = Some(best.map_or(dist[v], |b: usize| b.min(dist[v])));
                } else if !blocked.contains(v) {
                    queue.push_back(v);
                }
            }
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_involutive_with_edge_counts(g in arb_graph(7)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(g.edge_count() + c.edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn odd_hole_detection_matches_bruteforce(g in arb_graph(9)) {
        let brute_has_odd = brute_holes(&g).iter().any(|&(_, odd)| odd);
        match g.find_hole(HoleParity::Odd, 4) {
            Some(hole) => {
                prop_assert!(brute_has_odd);
                prop_assert!(hole.is_hole(&g));
                prop_assert_eq!(hole.vertices.len() % 2, 1);
            }
            None => prop_assert!(!brute_has_odd),
        }
    }

    #[test]
    fn hole_enumeration_count_matches_bruteforce(g in arb_graph(7)) {
        prop_assert_eq!(g.holes().len(), brute_holes(&g).len());
    }

    #[test]
    fn clique_solver_matches_bruteforce(g in arb_graph(7)) {
        let lim = Limits::default();
        let (omega, witness) = clique_number(&g, &lim).unwrap();
        prop_assert_eq!(omega, brute_max_clique(&g));
        prop_assert_eq!(witness.len(), omega);
        let vs = witness.to_vec();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                prop_assert!(g.has_edge(u, v));
            }
        }
        let (alpha, _) = stability_number(&g, &lim).unwrap();
        prop_assert_eq!(alpha, brute_max_clique(&g.complement()));
    }

    #[test]
    fn chromatic_solver_matches_bruteforce(g in arb_graph(6)) {
        let (chi, coloring) = chromatic_number(&g, &Limits::default()).unwrap();
        prop_assert_eq!(chi, brute_chi(&g));
        coloring.validate(&g).unwrap();
        prop_assert_eq!(coloring.colors_used(), chi);
    }

    #[test]
    fn structure_witnesses_revalidate(g in arb_graph(8)) {
        let lim = Limits::default();
        if let Some(tj) = find_two_join(&g) {
            tj.validate(&g).unwrap();
        }
        if let Some(sp) = find_skew_partition(&g, &lim).unwrap() {
            sp.validate(&g).unwrap();
            // A skew partition always yields a double star cutset:
            // take the cutset A ∪ B with u in A and v in B.
            prop_assert!(find_double_star_cutset(&g).is_some());
        }
        if let Some(sc) = find_star_cutset(&g) {
            sc.validate(&g).unwrap();
        }
        if let Some(ds) = find_double_star_cutset(&g) {
            ds.validate(&g).unwrap();
        }
        if let Some(hp) =
            find_homogeneous_pair(&g, &lim, HomogeneousPairOptions::default()).unwrap()
        {
            hp.validate(&g).unwrap();
        }
    }

    #[test]
    fn shortest_set_path_matches_bfs_oracle(
        g in arb_graph(8),
        picks in proptest::collection::vec(0usize..8, 2..6),
    ) {
        let n = g.n();
        let mut from = VertexSet::empty(n);
        let mut to = VertexSet::empty(n);
        for (i, &p) in picks.iter().enumerate() {
            let v = p % n;
            if i % 2 == 0 {
                if !to.contains(v) { from.insert(v); }
            } else if !from.contains(v) {
                to.insert(v);
            }
        }
        prop_assume!(!from.is_empty() && !to.is_empty());
        let expected = brute_set_distance(&g, &from, &to);
        let found = g.shortest_path_between_sets(&from, &to).unwrap();
        match (found, expected) {
            (Some(path), Some(d)) => {
                prop_assert_eq!(path.len(), d);
                prop_assert!(from.contains(path.first()));
                prop_assert!(to.contains(path.last()));
                for &v in &path.vertices[1..path.vertices.len() - 1] {
                    prop_assert!(!from.contains(v) && !to.contains(v));
                }
                for w in path.vertices.windows(2) {
                    prop_assert!(g.has_edge(w[0], w[1]));
                }
            }
            (None, None) => {}
            (found, expected) => {
                return Err(TestCaseError::fail(format!(
                    "disagreement: found {found:?}, oracle {expected:?}"
                )));
            }
        }
    }

    #[test]
    fn parse_emit_round_trip(g in arb_graph(9)) {
        let doc = GraphDocument::bare(g, "prop");
        for format in [Format::EdgeList, Format::Dimacs] {
            let text = emit(&doc, format);
            let back = parse_graph(text.as_bytes(), format).unwrap();
            prop_assert_eq!(&back.graph, &doc.graph);
        }
    }

    #[test]
    fn replication_adds_a_true_twin(g in arb_graph(7), pick in 0usize..7) {
        let v = pick % g.n();
        let r = replicate(&g, v, 2);
        let copy = g.n();
        prop_assert!(r.has_edge(v, copy));
        for w in 0..g.n() {
            if w != v {
                prop_assert_eq!(r.has_edge(copy, w), g.has_edge(v, w));
            }
        }
    }

    #[test]
    fn konig_uses_exactly_delta_on_bipartite(mask in 0u64..(1 << 12)) {
        // Random bipartite 4+3 from the crossing-edge mask.
        let mut g = Graph::empty(7);
        let mut bit = 0;
        for u in 0..4 {
            for v in 4..7 {
                if mask >> bit & 1 == 1 {
                    g.add_edge(u, v);
                }
                bit += 1;
            }
        }
        let ec = konig_edge_coloring(&g).unwrap();
        ec.validate(&g).unwrap();
        prop_assert_eq!(ec.colors_used(), g.max_degree());
    }
}
