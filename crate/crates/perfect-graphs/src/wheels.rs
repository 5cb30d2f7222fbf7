//! Wheels and stretchers.
//!
//! A wheel is a hole plus a center with at least three neighbors on it.
//! The five-way taxonomy (line, twin, universal, triangle-free, proper)
//! is decided by triangle counts inside the induced wheel subgraph; the
//! four special kinds are mutually exclusive and that exclusivity is
//! asserted at runtime rather than resolved by precedence.

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexSet};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum WheelKind {
    Line,
    Twin,
    Universal,
    TriangleFree,
    Proper,
}

impl WheelKind {
    pub fn tag(&self) -> &'static str {
        match self {
            WheelKind::Line => "line",
            WheelKind::Twin => "twin",
            WheelKind::Universal => "universal",
            WheelKind::TriangleFree => "triangle_free",
            WheelKind::Proper => "proper",
        }
    }
}

/// A classified wheel `(hole, center)`.
#[derive(Debug, Clone)]
pub struct Wheel {
    pub hole: Path,
    pub center: usize,
    /// Neighbors of the center on the hole.
    pub spokes: VertexSet,
    /// Spoke count; a `k`-wheel has `k` of them.
    pub arity: usize,
    pub kind: WheelKind,
}

/// Assigns the taxonomy kind. Triangle counting is over the subgraph
/// induced by the hole plus the center; since the hole is chordless,
/// every triangle uses the center and a hole edge between two spokes.
pub fn classify_wheel(g: &Graph, hole: &Path, center: usize) -> Result<Wheel> {
    if !hole.is_hole(g) {
        return Err(Error::invalid("not a hole"));
    }
    if hole.vertices.contains(&center) {
        return Err(Error::invalid("center must lie off the hole"));
    }
    let n = g.n();
    let hole_set = VertexSet::from_iter(n, hole.vertices.iter().copied());
    let spokes = g.neighbors(center).intersection(&hole_set);
    let arity = spokes.len();
    if arity < 3 {
        return Err(Error::invalid(
            "a wheel center needs at least three neighbors on the hole",
        ));
    }

    // Honest triangle count on the induced wheel subgraph.
    let wheel_vertices: Vec<usize> = hole_set
        .union(&VertexSet::from_iter(n, [center]))
        .iter()
        .collect();
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    for (i, &a) in wheel_vertices.iter().enumerate() {
        for (j, &b) in wheel_vertices.iter().enumerate().skip(i + 1) {
            for &c in wheel_vertices.iter().skip(j + 1) {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    triangles.push([a, b, c]);
                }
            }
        }
    }

    let universal = arity == hole.vertices.len();
    let line = arity == 4 && triangles.len() == 2 && {
        let [t1, t2] = [&triangles[0], &triangles[1]];
        let shared: Vec<usize> = t1.iter().filter(|v| t2.contains(v)).copied().collect();
        shared == vec![center] || shared == [center]
    };
    let twin = arity == 3 && triangles.len() == 2;
    let triangle_free = triangles.is_empty();

    let flags = [line, twin, universal, triangle_free];
    let set = flags.iter().filter(|&&f| f).count();
    if set > 1 {
        return Err(Error::InternalInconsistency {
            context: "wheel taxonomy",
            detail: format!(
                "kinds overlap (line={line}, twin={twin}, universal={universal}, triangle_free={triangle_free})"
            ),
            instance: g.encode(),
        });
    }
    let kind = if line {
        WheelKind::Line
    } else if twin {
        WheelKind::Twin
    } else if universal {
        WheelKind::Universal
    } else if triangle_free {
        WheelKind::TriangleFree
    } else {
        WheelKind::Proper
    };
    Ok(Wheel {
        hole: hole.clone(),
        center,
        spokes,
        arity,
        kind,
    })
}

/// All wheels of the requested kinds: every hole is enumerated in
/// canonical order and every off-hole vertex with three or more
/// neighbors on it is classified. Wheels are already unique by (hole
/// vertex set, center) because hole enumeration is canonical.
pub fn find_wheels(g: &Graph, kinds: &[WheelKind], limits: &Limits) -> Result<Vec<Wheel>> {
    if g.n() > limits.wheel {
        return Err(Error::ResourceLimit {
            what: "wheel scan",
            n: g.n(),
            limit: limits.wheel,
        });
    }
    let mut out = Vec::new();
    let mut inconsistency = None;
    g.for_each_hole(|cycle| {
        let hole = Path::new(cycle.to_vec());
        let hole_set = VertexSet::from_iter(g.n(), cycle.iter().copied());
        for center in 0..g.n() {
            if hole_set.contains(center) || g.neighbors(center).intersection_len(&hole_set) < 3 {
                continue;
            }
            match classify_wheel(g, &hole, center) {
                Ok(wheel) => {
                    if kinds.is_empty() || kinds.contains(&wheel.kind) {
                        out.push(wheel);
                    }
                }
                Err(e) => {
                    inconsistency = Some(e);
                    return false;
                }
            }
        }
        true
    });
    match inconsistency {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Convenience: does `g` contain a proper wheel?
pub fn has_proper_wheel(g: &Graph, limits: &Limits) -> Result<bool> {
    Ok(!find_wheels(g, &[WheelKind::Proper], limits)?.is_empty())
}

/// Two disjoint triangles joined by three vertex-disjoint chordless
/// paths, at least one of length two or more; the triangle edges are
/// the only adjacencies between distinct paths.
#[derive(Debug, Clone)]
pub struct Stretcher {
    /// `paths[i]` runs from the first triangle's i-th corner to the
    /// second triangle's i-th corner.
    pub paths: [Path; 3],
}

impl Stretcher {
    pub fn triangle_a(&self) -> [usize; 3] {
        [
            self.paths[0].first(),
            self.paths[1].first(),
            self.paths[2].first(),
        ]
    }

    pub fn triangle_b(&self) -> [usize; 3] {
        [
            self.paths[0].last(),
            self.paths[1].last(),
            self.paths[2].last(),
        ]
    }

    pub fn vertices(&self, n: usize) -> VertexSet {
        VertexSet::from_iter(n, self.paths.iter().flat_map(|p| p.vertices.iter().copied()))
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let ta = self.triangle_a();
        let tb = self.triangle_b();
        for corners in [&ta, &tb] {
            for i in 0..3 {
                for j in i + 1..3 {
                    if !g.has_edge(corners[i], corners[j]) {
                        return Err(Error::invalid("triangle corners must be pairwise adjacent"));
                    }
                }
            }
        }
        if ta.iter().any(|v| tb.contains(v)) {
            return Err(Error::invalid("the triangles must be vertex disjoint"));
        }
        let mut seen = std::collections::HashSet::new();
        for p in &self.paths {
            if !p.is_chordless_path(g) {
                return Err(Error::invalid("every connecting path must be chordless"));
            }
            for &v in &p.vertices {
                if !seen.insert(v) {
                    return Err(Error::invalid("paths must be vertex disjoint"));
                }
            }
        }
        if !self.paths.iter().any(|p| p.len() >= 2) {
            return Err(Error::invalid("at least one path must have length two or more"));
        }
        // Deleting the six triangle edges must leave exactly the three
        // paths' edges among the stretcher's vertices.
        let triangle_edges: std::collections::HashSet<(usize, usize)> = [&ta, &tb]
            .iter()
            .flat_map(|t| {
                [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
                    .map(|(a, b)| (a.min(b), a.max(b)))
            })
            .collect();
        let mut path_edges = std::collections::HashSet::new();
        for p in &self.paths {
            for w in p.vertices.windows(2) {
                path_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        let all: Vec<usize> = seen.iter().copied().collect();
        for (i, &u) in all.iter().enumerate() {
            for &v in &all[i + 1..] {
                let key = (u.min(v), u.max(v));
                let expected = triangle_edges.contains(&key) || path_edges.contains(&key);
                if g.has_edge(u, v) != expected {
                    return Err(Error::invalid(format!(
                        "adjacency between {u} and {v} is not a path or triangle edge"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Exhaustive stretcher search: enumerate disjoint triangle pairs,
/// corner pairings, and grow the three chordless connecting paths with
/// cross-path adjacency pruning; the final witness is re-validated.
pub fn find_stretcher(g: &Graph, limits: &Limits) -> Result<Option<Stretcher>> {
    if g.n() > limits.stretcher {
        return Err(Error::ResourceLimit {
            what: "stretcher scan",
            n: g.n(),
            limit: limits.stretcher,
        });
    }
    let triangles = list_triangles(g);
    for (i, ta) in triangles.iter().enumerate() {
        for tb in triangles.iter().skip(i + 1) {
            if ta.iter().any(|v| tb.contains(v)) {
                continue;
            }
            // Corners of ta stay in ascending order; pair them with
            // every permutation of tb's corners.
            for perm in PERMS3 {
                let ends = [tb[perm[0]], tb[perm[1]], tb[perm[2]]];
                if let Some(found) = grow_paths(g, ta, &ends, &mut Vec::new()) {
                    found.validate(g).expect("constructed stretcher must validate");
                    return Ok(Some(found));
                }
            }
        }
    }
    Ok(None)
}

const PERMS3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn list_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in a + 1..g.n() {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in g.neighbors(a).intersection(g.neighbors(b)).iter() {
                if c > b {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn grow_paths(
    g: &Graph,
    starts: &[usize; 3],
    ends: &[usize; 3],
    done: &mut Vec<Path>,
) -> Option<Stretcher> {
    let idx = done.len();
    if idx == 3 {
        let stretcher = Stretcher {
            paths: [done[0].clone(), done[1].clone(), done[2].clone()],
        };
        return stretcher.validate(g).is_ok().then_some(stretcher);
    }
    // Vertices the new path must avoid entirely, and vertices its
    // interior may not even touch: earlier paths and the four corners
    // not on this path.
    let mut blocked = VertexSet::empty(g.n());
    for p in done.iter() {
        for &v in &p.vertices {
            blocked.insert(v);
        }
    }
    for j in 0..3 {
        if j != idx {
            blocked.insert(starts[j]);
            blocked.insert(ends[j]);
        }
    }
    let mut path = vec![starts[idx]];
    grow_one_path(g, ends[idx], &blocked, &mut path, &mut |p| {
        done.push(Path::new(p.to_vec()));
        let found = grow_paths(g, starts, ends, done);
        done.pop();
        found
    })
}

fn grow_one_path(
    g: &Graph,
    target: usize,
    blocked: &VertexSet,
    path: &mut Vec<usize>,
    complete: &mut impl FnMut(&[usize]) -> Option<Stretcher>,
) -> Option<Stretcher> {
    let last = *path.last().unwrap();
    if last == target {
        return complete(path);
    }
    'next: for w in g.neighbors(last).iter() {
        if w != target && blocked.contains(w) {
            continue;
        }
        if path.contains(&w) {
            continue;
        }
        // Chordless within the path: w may only touch the last vertex.
        for &p in &path[..path.len() - 1] {
            if g.has_edge(w, p) {
                continue 'next;
            }
        }
        // Interior vertices may not see other paths or foreign corners.
        if w != target && g.neighbors(w).intersects(blocked) {
            continue;
        }
        path.push(w);
        if let Some(found) = grow_one_path(g, target, blocked, path, complete) {
            return Some(found);
        }
        path.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universal_wheel_on_c4() {
        let mut g = Graph::cycle(4);
        let hub = 4;
        let mut with_hub = Graph::empty(5);
        for (u, v) in g.edges() {
            with_hub.add_edge(u, v);
        }
        for v in 0..4 {
            with_hub.add_edge(hub, v);
        }
        g = with_hub;
        let hole = Path::new(vec![0, 1, 2, 3]);
        let wheel = classify_wheel(&g, &hole, hub).unwrap();
        assert_eq!(wheel.kind, WheelKind::Universal);
        assert_eq!(wheel.arity, 4);
    }

    #[test]
    fn proper_wheel_on_c6() {
        // Center adjacent to {h0, h1, h3}: one triangle, three spokes,
        // none of the special kinds.
        let mut g = Graph::cycle(6);
        let mut with_center = Graph::empty(7);
        for (u, v) in g.edges() {
            with_center.add_edge(u, v);
        }
        for v in [0, 1, 3] {
            with_center.add_edge(6, v);
        }
        g = with_center;
        let hole = Path::new(vec![0, 1, 2, 3, 4, 5]);
        let wheel = classify_wheel(&g, &hole, 6).unwrap();
        assert_eq!(wheel.kind, WheelKind::Proper);
        assert_eq!(wheel.arity, 3);
    }

    #[test]
    fn twin_wheel_on_c5() {
        // Center adjacent to three consecutive hole vertices: exactly
        // two triangles on a 3-wheel.
        let mut g = Graph::empty(6);
        for v in 0..5 {
            g.add_edge(v, (v + 1) % 5);
        }
        for v in [0, 1, 2] {
            g.add_edge(5, v);
        }
        let hole = Path::new(vec![0, 1, 2, 3, 4]);
        let wheel = classify_wheel(&g, &hole, 5).unwrap();
        assert_eq!(wheel.kind, WheelKind::Twin);
        assert_eq!(wheel.arity, 3);
    }

    #[test]
    fn line_wheel_example() {
        // C6 hole with center adjacent to {0, 1, 3, 4}: triangles
        // {c,0,1} and {c,3,4} share only the center.
        let mut g = Graph::empty(7);
        for v in 0..6 {
            g.add_edge(v, (v + 1) % 6);
        }
        for v in [0, 1, 3, 4] {
            g.add_edge(6, v);
        }
        let hole = Path::new(vec![0, 1, 2, 3, 4, 5]);
        let wheel = classify_wheel(&g, &hole, 6).unwrap();
        assert_eq!(wheel.kind, WheelKind::Line);
        assert_eq!(wheel.arity, 4);
    }

    #[test]
    fn triangle_free_wheel() {
        // C6 hole with center adjacent to alternating vertices.
        let mut g = Graph::empty(7);
        for v in 0..6 {
            g.add_edge(v, (v + 1) % 6);
        }
        for v in [0, 2, 4] {
            g.add_edge(6, v);
        }
        let hole = Path::new(vec![0, 1, 2, 3, 4, 5]);
        let wheel = classify_wheel(&g, &hole, 6).unwrap();
        assert_eq!(wheel.kind, WheelKind::TriangleFree);
    }

    #[test]
    fn rejects_non_wheels() {
        let g = Graph::cycle(5);
        let hole = Path::new(vec![0, 1, 2, 3, 4]);
        assert!(classify_wheel(&g, &hole, 0).is_err());
    }

    #[test]
    fn c5_has_no_wheels() {
        let wheels = find_wheels(&Graph::cycle(5), &[], &Limits::default()).unwrap();
        assert!(wheels.is_empty());
    }

    #[test]
    fn hub_and_rim_is_one_universal_wheel() {
        // W5: a hub adjacent to every vertex of C5. The rim is the only
        // hole (4-subsets of the rim induce paths, cycles through the
        // hub have chords), so exactly one wheel exists.
        let mut g = Graph::empty(6);
        for v in 0..5 {
            g.add_edge(v, (v + 1) % 5);
        }
        for v in 0..5 {
            g.add_edge(5, v);
        }
        let wheels = find_wheels(&g, &[], &Limits::default()).unwrap();
        assert_eq!(wheels.len(), 1);
        assert_eq!(wheels[0].kind, WheelKind::Universal);
        assert_eq!(wheels[0].center, 5);
    }

    #[test]
    fn line_wheels_in_subdivided_k4_line_graphs() {
        // Regression values from the exhaustive scan. Subdividing just
        // the triangle of K4 = (triangle {0,1,2} + apex 3) is already
        // bipartite, and its line graph carries exactly three wheels,
        // all of them line wheels.
        let mut sub = Graph::empty(7);
        for (u, v) in [(0, 3), (1, 3), (2, 3)] {
            sub.add_edge(u, v);
        }
        for (i, &(u, v)) in [(0, 1), (0, 2), (1, 2)].iter().enumerate() {
            let m = 4 + i;
            sub.add_edge(u, m);
            sub.add_edge(m, v);
        }
        assert!(sub.is_bipartite().is_some());
        let (lg, _) = crate::basic::line_graph(&sub);
        let wheels = find_wheels(&lg, &[], &Limits::default()).unwrap();
        assert_eq!(wheels.len(), 3);
        assert!(wheels.iter().all(|w| w.kind == WheelKind::Line));

        // Subdividing every edge instead yields a 3-regular line graph
        // where no vertex can center a wheel at all.
        let k4_edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut full = Graph::empty(10);
        for (i, &(u, v)) in k4_edges.iter().enumerate() {
            let m = 4 + i;
            full.add_edge(u, m);
            full.add_edge(m, v);
        }
        let (lg, _) = crate::basic::line_graph(&full);
        assert!(find_wheels(&lg, &[], &Limits::default()).unwrap().is_empty());
    }

    #[test]
    fn prism_is_not_a_stretcher() {
        // Two triangles joined by three length-one paths: excluded by
        // the "at least one long path" clause.
        let mut g = Graph::empty(6);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)] {
            g.add_edge(u, v);
        }
        assert!(find_stretcher(&g, &Limits::default()).unwrap().is_none());
    }

    #[test]
    fn seven_vertex_stretcher() {
        // Triangles {0,1,2} and {4,5,6}; paths 0-3-4, 1-5, 2-6.
        let mut g = Graph::empty(7);
        for (u, v) in [
            (0, 1),
            (0, 2),
            (1, 2),
            (4, 5),
            (4, 6),
            (5, 6),
            (0, 3),
            (3, 4),
            (1, 5),
            (2, 6),
        ] {
            g.add_edge(u, v);
        }
        let s = find_stretcher(&g, &Limits::default()).unwrap().unwrap();
        s.validate(&g).unwrap();
        assert!(s.paths.iter().any(|p| p.len() >= 2));
    }

    #[test]
    fn triangle_free_graphs_have_no_stretcher() {
        assert!(find_stretcher(&Graph::cycle(7), &Limits::default())
            .unwrap()
            .is_none());
    }
}
