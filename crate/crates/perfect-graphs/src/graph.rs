//! Simple finite undirected graphs over dense vertex indices `0..n`,
//! with adjacency stored as per-vertex bitsets so that neighborhood
//! tests and set algebra are whole-word operations.
//!
//! Graphs are immutable once built (the mutating helpers are only used
//! during construction) and all queries are pure, so values can be
//! shared freely across threads.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// A subset of `0..n`, backed by a fixed-width bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            nbits: n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter(n: usize, vs: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Number of vertices of the universe `0..n`, not the cardinality.
    pub fn universe(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range 0..{}", self.nbits);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range 0..{}", self.nbits);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.nbits && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD_BITS + b)
                }
            })
        })
    }

    pub fn smallest(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.intersects(other)
    }

    /// Complement within the universe `0..n`.
    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        debug_assert_eq!(self.nbits, other.nbits);
        VertexSet {
            nbits: self.nbits,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn trim(&mut self) {
        let spare = self.words.len() * WORD_BITS - self.nbits;
        if spare > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> spare;
            }
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple finite undirected graph: no loops, no multiple edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// An ordered vertex list `v_0, ..., v_k`; its length is `k` (edges).
///
/// The same type carries open chordless paths and holes (chordless
/// cycles): for a hole the closing edge `v_k v_0` is present in the
/// graph and is not listed explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub vertices: Vec<usize>,
}

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Path { vertices }
    }

    /// Number of edges when read as an open path.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// True iff the vertex list is a chordless path of `g`: consecutive
    /// vertices adjacent, and no other adjacency among its vertices.
    pub fn is_chordless_path(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.is_empty() {
            return false;
        }
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if u == v {
                    return false;
                }
                let adjacent = g.has_edge(u, v);
                if adjacent != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff the vertex list is a hole of `g`: a chordless cycle on
    /// at least 4 vertices (the closing edge `last-first` included).
    pub fn is_hole(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        let k = vs.len();
        if k < 4 {
            return false;
        }
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if u == v {
                    return false;
                }
                let wanted = j == i + 1 || (i == 0 && j == k - 1);
                if g.has_edge(u, v) != wanted {
                    return false;
                }
            }
        }
        true
    }
}

/// Parity filter for hole searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoleParity {
    Odd,
    Even,
    Any,
}

impl HoleParity {
    fn matches(self, cycle_len: usize) -> bool {
        match self {
            HoleParity::Odd => cycle_len % 2 == 1,
            HoleParity::Even => cycle_len % 2 == 0,
            HoleParity::Any => true,
        }
    }
}

/// Two-sided partition witnessing bipartiteness; every edge crosses.
/// On edgeless graphs the convention is everything on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Bipartition {
    pub fn validate(&self, g: &Graph) -> bool {
        if self.left.intersects(&self.right) {
            return false;
        }
        if self.left.union(&self.right) != VertexSet::full(g.n()) {
            return false;
        }
        g.edges().all(|(u, v)| {
            (self.left.contains(u) && self.right.contains(v))
                || (self.right.contains(u) && self.left.contains(v))
        })
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The cycle `0-1-...-(n-1)-0`; a hole when `n >= 4`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n);
            }
        } else if n == 2 {
            g.add_edge(0, 1);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).unwrap();
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edge-complement: `uv` is an edge iff it is not one here (u != v).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            let mut row = self.adj[u].complement();
            row.remove(u);
            g.adj[u] = row;
        }
        g
    }

    /// Induced subgraph `G(S)` with vertices reindexed to `0..|S|`,
    /// plus the map from new indices back to the originals.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, map)
    }

    /// Checked variant for callers with untrusted vertex sets.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if s.universe() != self.n {
            return Err(Error::invalid(format!(
                "vertex set over universe {} does not match graph on {} vertices",
                s.universe(),
                self.n
            )));
        }
        Ok(self.induced(s))
    }

    /// Two-coloring by breadth-first search; `None` iff an odd cycle
    /// exists. Each component is rooted at its smallest vertex, which
    /// lands on the left side; isolated vertices are left too.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut side = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if side[root] != usize::MAX {
                continue;
            }
            side[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if side[v] == usize::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        let mut left = VertexSet::empty(self.n);
        let mut right = VertexSet::empty(self.n);
        for v in 0..self.n {
            if side[v] == 0 {
                left.insert(v);
            } else {
                right.insert(v);
            }
        }
        Some(Bipartition { left, right })
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut comps = Vec::new();
        for root in 0..self.n {
            if seen.contains(root) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![root];
            comp.insert(root);
            seen.insert(root);
            while let Some(u) = stack.pop() {
                for v in self.adj[u].iter() {
                    if !comp.contains(v) {
                        comp.insert(v);
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Connected components of `G(S)` without reindexing.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut comps = Vec::new();
        for root in s.iter() {
            if seen.contains(root) {
                continue;
            }
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![root];
            comp.insert(root);
            seen.insert(root);
            while let Some(u) = stack.pop() {
                for v in self.adj[u].intersection(s).iter() {
                    if !comp.contains(v) {
                        comp.insert(v);
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Shortest path starting in `from` and ending in `to`, no interior
    /// vertex in either set. Ties broken by lexicographically smallest
    /// vertex sequence. `None` if no such path exists.
    pub fn shortest_path_between_sets(
        &self,
        from: &VertexSet,
        to: &VertexSet,
    ) -> Result<Option<Path>> {
        if from.is_empty() || to.is_empty() {
            return Err(Error::invalid("shortest path endpoints must be nonempty"));
        }
        if from.intersects(to) {
            return Err(Error::invalid("shortest path endpoint sets must be disjoint"));
        }
        // Distances to `to`, walking only through interior vertices.
        let forbidden = from.union(to);
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for t in to.iter() {
            dist[t] = 0;
            queue.push_back(t);
        }
        while let Some(u) = queue.pop_front() {
            for v in self.adj[u].iter() {
                if dist[v] != usize::MAX || to.contains(v) {
                    continue;
                }
                dist[v] = dist[u] + 1;
                // `from` vertices terminate the walk; interiors expand.
                if !from.contains(v) {
                    queue.push_back(v);
                }
            }
        }
        let start = from
            .iter()
            .filter(|&s| dist[s] != usize::MAX)
            .min_by_key(|&s| (dist[s], s));
        let Some(start) = start else {
            return Ok(None);
        };
        // Greedy lexicographic descent along decreasing distance.
        let mut path = vec![start];
        let mut cur = start;
        while dist[cur] > 0 {
            let next = self.adj[cur]
                .iter()
                .filter(|&v| {
                    dist[v] == dist[cur] - 1 && (dist[cur] == 1 || !forbidden.contains(v))
                })
                .min()
                .expect("BFS distance must decrease somewhere");
            path.push(next);
            cur = next;
        }
        Ok(Some(Path::new(path)))
    }

    /// Visits every hole (chordless cycle, length >= 4) exactly once, in
    /// a canonical deterministic order: cycles are rooted at their
    /// smallest vertex, oriented so the second vertex is smaller than
    /// the last, and discovered by lexicographic DFS over chordless
    /// paths. The visitor returns `false` to stop early.
    pub fn for_each_hole(&self, mut visit: impl FnMut(&[usize]) -> bool) {
        let mut path: Vec<usize> = Vec::new();
        for root in 0..self.n {
            for second in self.adj[root].iter() {
                if second < root {
                    continue;
                }
                path.clear();
                path.push(root);
                path.push(second);
                if !self.grow_hole(&mut path, &mut visit) {
                    return;
                }
            }
        }
    }

    fn grow_hole(&self, path: &mut Vec<usize>, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        let root = path[0];
        let last = *path.last().unwrap();
        'next: for w in self.adj[last].iter() {
            if w <= root || path.contains(&w) {
                continue;
            }
            // Chordless: w may touch only the path's last vertex, and
            // possibly the root (which closes a cycle).
            for &p in &path[1..path.len() - 1] {
                if self.has_edge(w, p) {
                    continue 'next;
                }
            }
            if self.has_edge(w, root) {
                // Closing here is forced; extending past w would leave
                // the chord w-root behind.
                if path.len() >= 3 && path[1] < w {
                    path.push(w);
                    let keep_going = visit(path);
                    path.pop();
                    if !keep_going {
                        return false;
                    }
                }
            } else {
                path.push(w);
                if !self.grow_hole(path, visit) {
                    return false;
                }
                path.pop();
            }
        }
        true
    }

    /// First hole of the requested parity and length, in canonical
    /// enumeration order. `min_length` counts edges (= vertices here)
    /// and must be at least 4.
    pub fn find_hole(&self, parity: HoleParity, min_length: usize) -> Option<Path> {
        assert!(min_length >= 4, "holes have length at least 4");
        let mut found = None;
        self.for_each_hole(|cycle| {
            if cycle.len() >= min_length && parity.matches(cycle.len()) {
                let hole = Path::new(cycle.to_vec());
                debug_assert!(hole.is_hole(self));
                found = Some(hole);
                false
            } else {
                true
            }
        });
        found
    }

    /// All holes, canonical order.
    pub fn holes(&self) -> Vec<Path> {
        let mut out = Vec::new();
        self.for_each_hole(|cycle| {
            out.push(Path::new(cycle.to_vec()));
            true
        });
        out
    }

    /// Compact single-line encoding used in error payloads and debug
    /// output: `n:m:u-v,u-v,...`.
    pub fn encode(&self) -> String {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("{}:{}:{}", self.n, edges.len(), edges.join(","))
    }

    /// Inverse of [`Graph::encode`].
    pub fn decode(text: &str) -> Result<Graph> {
        let mut parts = text.splitn(3, ':');
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::invalid("bad graph encoding: missing vertex count"))?;
        let _m = parts.next();
        let mut g = Graph::empty(n);
        if let Some(edges) = parts.next() {
            for tok in edges.split(',').filter(|t| !t.is_empty()) {
                let (u, v) = tok
                    .split_once('-')
                    .ok_or_else(|| Error::invalid(format!("bad edge token {tok:?}")))?;
                let u = u.parse().map_err(|_| Error::invalid("bad edge endpoint"))?;
                let v = v.parse().map_err(|_| Error::invalid("bad edge endpoint"))?;
                g.try_add_edge(u, v)?;
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.encode())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_triangle_is_edgeless() {
        let g = Graph::complete(3).complement();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.n(), 3);
    }

    #[test]
    fn complement_is_involutive_on_c6() {
        let c6 = Graph::cycle(6);
        assert_eq!(c6.complement().complement(), c6);
    }

    #[test]
    fn complement_of_c5_is_isomorphic_to_c5() {
        // Exhaustive isomorphism check on 5 vertices.
        let c5 = Graph::cycle(5);
        let cc = c5.complement();
        let mut perm = [0, 1, 2, 3, 4];
        let mut found = false;
        permute(&mut perm, 0, &mut |p| {
            let ok = (0..5).all(|u| (u + 1..5).all(|v| c5.has_edge(u, v) == cc.has_edge(p[u], p[v])));
            found |= ok;
        });
        assert!(found);
    }

    fn permute(p: &mut [usize; 5], k: usize, f: &mut impl FnMut(&[usize; 5])) {
        if k == 5 {
            f(p);
            return;
        }
        for i in k..5 {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn induced_subgraph_cases() {
        let c5 = Graph::cycle(5);
        let (whole, map) = c5.induced(&VertexSet::full(5));
        assert_eq!(whole, c5);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);

        // Three consecutive vertices of C5 induce a path.
        let (p3, _) = c5.induced(&VertexSet::from_iter(5, [0, 1, 2]));
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.degree(1), 2);

        let (k3, _) = Graph::complete(5).induced(&VertexSet::from_iter(5, [1, 3, 4]));
        assert_eq!(k3, Graph::complete(3));
    }

    #[test]
    fn induced_subgraph_rejects_wrong_universe() {
        let g = Graph::cycle(5);
        assert!(g.induced_subgraph(&VertexSet::from_iter(6, [0, 1])).is_err());
    }

    #[test]
    fn bipartite_cases() {
        let bip = Graph::cycle(6).is_bipartite().unwrap();
        assert!(bip.validate(&Graph::cycle(6)));
        assert_eq!(bip.left.to_vec(), vec![0, 2, 4]);

        assert!(Graph::cycle(5).is_bipartite().is_none());

        let edgeless = Graph::empty(4);
        let bip = edgeless.is_bipartite().unwrap();
        assert_eq!(bip.left.len(), 4);
        assert!(bip.right.is_empty());
    }

    #[test]
    fn find_hole_cases() {
        let c5 = Graph::cycle(5);
        let hole = c5.find_hole(HoleParity::Odd, 4).unwrap();
        assert_eq!(hole.vertices, vec![0, 1, 2, 3, 4]);
        assert!(hole.is_hole(&c5));

        // Every 4-cycle of K4 has a chord.
        assert!(Graph::complete(4).find_hole(HoleParity::Any, 4).is_none());

        // The complement of C7 has even holes but no odd ones.
        let anti7 = Graph::cycle(7).complement();
        assert!(anti7.find_hole(HoleParity::Odd, 4).is_none());
        assert!(anti7.find_hole(HoleParity::Even, 4).is_some());
    }

    #[test]
    fn holes_are_enumerated_once_and_validated() {
        let anti7 = Graph::cycle(7).complement();
        let holes = anti7.holes();
        for h in &holes {
            assert!(h.is_hole(&anti7));
        }
        // Cross-check against a brute-force count: subsets inducing cycles.
        let mut brute = 0;
        for mask in 0u32..(1 << 7) {
            let s = VertexSet::from_iter(7, (0..7).filter(|&v| mask >> v & 1 == 1));
            if s.len() < 4 {
                continue;
            }
            let (sub, _) = anti7.induced(&s);
            let cyclic = sub.is_connected()
                && (0..sub.n()).all(|v| sub.degree(v) == 2);
            if cyclic {
                brute += 1;
            }
        }
        assert_eq!(holes.len(), brute);
    }

    #[test]
    fn components_cases() {
        assert_eq!(Graph::cycle(5).connected_components().len(), 1);

        let mut two_triangles = Graph::empty(6);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            two_triangles.add_edge(u, v);
        }
        let comps = two_triangles.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_vec(), vec![3, 4, 5]);

        assert_eq!(Graph::empty(3).connected_components().len(), 3);
    }

    #[test]
    fn shortest_path_cases() {
        let c6 = Graph::cycle(6);
        let p = c6
            .shortest_path_between_sets(
                &VertexSet::from_iter(6, [0]),
                &VertexSet::from_iter(6, [3]),
            )
            .unwrap()
            .unwrap();
        assert_eq!(p.vertices, vec![0, 1, 2, 3]);

        // Adjacent singletons give a single edge.
        let p = c6
            .shortest_path_between_sets(
                &VertexSet::from_iter(6, [0]),
                &VertexSet::from_iter(6, [1]),
            )
            .unwrap()
            .unwrap();
        assert_eq!(p.vertices, vec![0, 1]);

        // Disconnected endpoints.
        let mut g = Graph::empty(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        assert!(g
            .shortest_path_between_sets(
                &VertexSet::from_iter(4, [0]),
                &VertexSet::from_iter(4, [2]),
            )
            .unwrap()
            .is_none());

        assert!(c6
            .shortest_path_between_sets(&VertexSet::empty(6), &VertexSet::from_iter(6, [1]))
            .is_err());
    }

    #[test]
    fn interior_avoids_endpoint_sets() {
        // from = {0, 2}: the path from 0 to 4 may not pass through 2.
        let mut g = Graph::empty(5);
        g.add_edge(0, 2);
        g.add_edge(2, 4);
        g.add_edge(0, 1);
        g.add_edge(1, 3);
        g.add_edge(3, 4);
        let p = g
            .shortest_path_between_sets(
                &VertexSet::from_iter(5, [0, 2]),
                &VertexSet::from_iter(5, [4]),
            )
            .unwrap()
            .unwrap();
        assert_eq!(p.vertices, vec![2, 4]);
    }

    #[test]
    fn encode_decode_round_trip() {
        let g = Graph::cycle(7).complement();
        let back = Graph::decode(&g.encode()).unwrap();
        assert_eq!(g, back);
    }
}
