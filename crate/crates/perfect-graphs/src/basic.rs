//! The four basic classes — bipartite graphs, line graphs of bipartite
//! graphs, and the complements of both — with recognition and
//! constructive colorings that use exactly omega colors.
//!
//! Line graphs are recognized through Krausz partitions: a graph is a
//! line graph iff its edges partition into cliques with every vertex in
//! at most two of them. The search is exhaustive at desk scale and its
//! result is re-validated by rebuilding the line graph from the
//! recovered root. Maximum bipartite matching is the shared primitive
//! behind König edge coloring and the clique covers used to color the
//! complement classes.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, VertexSet};
use crate::oracle::Coloring;

/// A proper edge coloring: edges sharing an endpoint get distinct colors.
#[derive(Debug, Clone)]
pub struct EdgeColoring {
    /// Edge list in ascending `(u, v)` order, `u < v`.
    pub edges: Vec<(usize, usize)>,
    /// Color per edge, parallel to `edges`.
    pub colors: Vec<usize>,
    pub num_colors: usize,
}

impl EdgeColoring {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let expected: Vec<(usize, usize)> = g.edges().collect();
        if self.edges != expected {
            return Err(Error::invalid("edge list does not match the graph"));
        }
        if self.colors.len() != self.edges.len() {
            return Err(Error::invalid("missing edge colors"));
        }
        for (i, &(u1, v1)) in self.edges.iter().enumerate() {
            for (j, &(u2, v2)) in self.edges.iter().enumerate().skip(i + 1) {
                let touching = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
                if touching && self.colors[i] == self.colors[j] {
                    return Err(Error::invalid(format!(
                        "adjacent edges {:?} and {:?} share color {}",
                        (u1, v1),
                        (u2, v2),
                        self.colors[i]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.num_colors];
        for &c in &self.colors {
            seen[c] = true;
        }
        seen.iter().filter(|&&b| b).count()
    }
}

/// A root graph together with the bijection from line-graph vertices to
/// root edges witnessing `L(root) = g` on the nose (not just up to
/// isomorphism).
#[derive(Debug, Clone)]
pub struct LineRoot {
    pub root: Graph,
    /// `vertex_edges[v]` is the root edge corresponding to vertex `v`.
    pub vertex_edges: Vec<(usize, usize)>,
}

impl LineRoot {
    /// Checks that the stored map realizes `g` as the line graph of
    /// `root`, covering every root edge exactly once.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.vertex_edges.len() != g.n() {
            return Err(Error::invalid("line root map must cover every vertex"));
        }
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &self.vertex_edges {
            if !self.root.has_edge(a, b) {
                return Err(Error::invalid(format!("({a}, {b}) is not a root edge")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::invalid("two vertices map to the same root edge"));
            }
        }
        if self.root.edge_count() != g.n() {
            return Err(Error::invalid("root has edges not covered by the map"));
        }
        for u in 0..g.n() {
            let (a1, b1) = self.vertex_edges[u];
            for v in u + 1..g.n() {
                let (a2, b2) = self.vertex_edges[v];
                let share = a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2;
                if share != g.has_edge(u, v) {
                    return Err(Error::invalid(format!(
                        "adjacency of {u} and {v} disagrees with their root edges"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Which of the four basic classes a graph belongs to, with a validated
/// witness. Recognition order is fixed so graphs in several classes get
/// a deterministic tag; see [`basic_memberships`] for the full vector.
#[derive(Debug, Clone)]
pub enum BasicClass {
    Bipartite(Bipartition),
    /// Bipartition of the complement.
    ComplementOfBipartite(Bipartition),
    LineOfBipartite(LineRoot),
    /// Line root of the complement.
    ComplementOfLineOfBipartite(LineRoot),
    NotBasic,
}

impl BasicClass {
    pub fn tag(&self) -> &'static str {
        match self {
            BasicClass::Bipartite(_) => "bipartite",
            BasicClass::ComplementOfBipartite(_) => "complement_of_bipartite",
            BasicClass::LineOfBipartite(_) => "line_of_bipartite",
            BasicClass::ComplementOfLineOfBipartite(_) => "complement_of_line_of_bipartite",
            BasicClass::NotBasic => "not_basic",
        }
    }

    pub fn is_basic(&self) -> bool {
        !matches!(self, BasicClass::NotBasic)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self {
            BasicClass::Bipartite(b) => {
                if b.validate(g) {
                    Ok(())
                } else {
                    Err(Error::invalid("bipartition does not fit the graph"))
                }
            }
            BasicClass::ComplementOfBipartite(b) => {
                if b.validate(&g.complement()) {
                    Ok(())
                } else {
                    Err(Error::invalid("bipartition does not fit the complement"))
                }
            }
            BasicClass::LineOfBipartite(r) => {
                r.validate(g)?;
                if r.root.is_bipartite().is_none() {
                    return Err(Error::invalid("line root is not bipartite"));
                }
                Ok(())
            }
            BasicClass::ComplementOfLineOfBipartite(r) => {
                r.validate(&g.complement())?;
                if r.root.is_bipartite().is_none() {
                    return Err(Error::invalid("line root is not bipartite"));
                }
                Ok(())
            }
            BasicClass::NotBasic => Ok(()),
        }
    }
}

/// Line graph of `root`: one vertex per root edge (ascending order),
/// adjacent iff the edges share an endpoint. Also returns the
/// vertex-to-edge map.
pub fn line_graph(root: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let edges: Vec<(usize, usize)> = root.edges().collect();
    let mut lg = Graph::empty(edges.len());
    for (i, &(a1, b1)) in edges.iter().enumerate() {
        for (j, &(a2, b2)) in edges.iter().enumerate().skip(i + 1) {
            if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
                lg.add_edge(i, j);
            }
        }
    }
    (lg, edges)
}

// ---------------------------------------------------------------------
// Krausz partition search
// ---------------------------------------------------------------------

struct KrauszState<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    edge_index: std::collections::HashMap<(usize, usize), usize>,
    covered: Vec<bool>,
    clique_count: Vec<usize>,
    cliques: Vec<VertexSet>,
}

impl KrauszState<'_> {
    fn edge_id(&self, u: usize, v: usize) -> usize {
        self.edge_index[&(u.min(v), u.max(v))]
    }
}

/// Visits Krausz partitions of `g`'s edges into cliques with every
/// vertex in at most two cliques, in a deterministic order. The visitor
/// returns `false` to stop. Returns whether the enumeration ran to
/// completion.
fn krausz_partitions(g: &Graph, visit: &mut impl FnMut(&[VertexSet]) -> bool) -> bool {
    // Local feasibility: the edges at each vertex must split into at
    // most two cliques, i.e. the complement of each neighborhood is
    // bipartite.
    for v in 0..g.n() {
        let (nbh, _) = g.induced(g.neighbors(v));
        if nbh.complement().is_bipartite().is_none() {
            return true;
        }
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let edge_index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut state = KrauszState {
        g,
        covered: vec![false; edges.len()],
        edges,
        edge_index,
        clique_count: vec![0; g.n()],
        cliques: Vec::new(),
    };
    krausz_extend(&mut state, visit)
}

fn krausz_extend(state: &mut KrauszState, visit: &mut impl FnMut(&[VertexSet]) -> bool) -> bool {
    let Some(next) = state.covered.iter().position(|&c| !c) else {
        return visit(&state.cliques);
    };
    let (u, v) = state.edges[next];
    if state.clique_count[u] >= 2 || state.clique_count[v] >= 2 {
        return true;
    }
    // Eligible extra members: adjacent to both endpoints, room for one
    // more clique, and both connecting edges still uncovered.
    let eligible: Vec<usize> = state
        .g
        .neighbors(u)
        .intersection(state.g.neighbors(v))
        .iter()
        .filter(|&w| {
            state.clique_count[w] < 2
                && !state.covered[state.edge_id(u, w)]
                && !state.covered[state.edge_id(v, w)]
        })
        .collect();
    let mut members = Vec::with_capacity(eligible.len() + 2);
    for mask in 0usize..(1 << eligible.len()) {
        members.clear();
        members.push(u);
        members.push(v);
        members.extend(
            eligible
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &w)| w),
        );
        if !clique_is_usable(state, &members) {
            continue;
        }
        let ids: Vec<usize> = pair_ids(state, &members);
        for &id in &ids {
            state.covered[id] = true;
        }
        for &w in &members {
            state.clique_count[w] += 1;
        }
        state
            .cliques
            .push(VertexSet::from_iter(state.g.n(), members.iter().copied()));
        let keep_going = krausz_extend(state, visit);
        state.cliques.pop();
        for &w in &members {
            state.clique_count[w] -= 1;
        }
        for &id in &ids {
            state.covered[id] = false;
        }
        if !keep_going {
            return false;
        }
    }
    true
}

fn clique_is_usable(state: &KrauszState, members: &[usize]) -> bool {
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !state.g.has_edge(a, b) || state.covered[state.edge_id(a, b)] {
                return false;
            }
        }
    }
    true
}

fn pair_ids(state: &KrauszState, members: &[usize]) -> Vec<usize> {
    let mut ids = Vec::new();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            ids.push(state.edge_id(a, b));
        }
    }
    ids
}

fn root_from_partition(g: &Graph, cliques: &[VertexSet]) -> LineRoot {
    // One root vertex per clique; vertices lying in fewer than two
    // cliques get fresh pendant endpoints.
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (ci, c) in cliques.iter().enumerate() {
        for v in c.iter() {
            membership[v].push(ci);
        }
    }
    let mut extra = cliques.len();
    let mut vertex_edges = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let e = match membership[v].as_slice() {
            [a, b] => (*a, *b),
            [a] => {
                let p = extra;
                extra += 1;
                (*a, p)
            }
            [] => {
                let p = extra;
                extra += 2;
                (p, p + 1)
            }
            _ => unreachable!("Krausz membership is at most two"),
        };
        vertex_edges.push((e.0.min(e.1), e.0.max(e.1)));
    }
    let mut root = Graph::empty(extra);
    for &(a, b) in &vertex_edges {
        root.add_edge(a, b);
    }
    LineRoot { root, vertex_edges }
}

/// Root graph realizing `g` as a line graph, if any. The Whitney
/// ambiguity on triangles means the returned root is just one valid
/// choice; [`LineRoot::validate`] is the correctness contract.
pub fn line_graph_root(g: &Graph) -> Option<LineRoot> {
    let mut found = None;
    krausz_partitions(g, &mut |cliques| {
        let candidate = root_from_partition(g, cliques);
        debug_assert!(candidate.validate(g).is_ok());
        found = Some(candidate);
        false
    });
    found
}

/// Like [`line_graph_root`] but only accepts bipartite roots, searching
/// through all Krausz partitions to find one.
pub fn line_of_bipartite_root(g: &Graph) -> Option<LineRoot> {
    let mut found = None;
    krausz_partitions(g, &mut |cliques| {
        let candidate = root_from_partition(g, cliques);
        if candidate.root.is_bipartite().is_some() {
            debug_assert!(candidate.validate(g).is_ok());
            found = Some(candidate);
            false
        } else {
            true
        }
    });
    found
}

/// First matching class in the fixed order: bipartite, complement of
/// bipartite, line of bipartite, complement of line of bipartite.
pub fn recognize_basic(g: &Graph) -> BasicClass {
    if let Some(b) = g.is_bipartite() {
        return BasicClass::Bipartite(b);
    }
    if let Some(b) = g.complement().is_bipartite() {
        return BasicClass::ComplementOfBipartite(b);
    }
    if let Some(r) = line_of_bipartite_root(g) {
        return BasicClass::LineOfBipartite(r);
    }
    if let Some(r) = line_of_bipartite_root(&g.complement()) {
        return BasicClass::ComplementOfLineOfBipartite(r);
    }
    BasicClass::NotBasic
}

/// Membership vector over all four classes, for analysis output and
/// tests; `recognize_basic` only reports the first hit.
pub fn basic_memberships(g: &Graph) -> [bool; 4] {
    [
        g.is_bipartite().is_some(),
        g.complement().is_bipartite().is_some(),
        line_of_bipartite_root(g).is_some(),
        line_of_bipartite_root(&g.complement()).is_some(),
    ]
}

// ---------------------------------------------------------------------
// Matching, covers, and colorings
// ---------------------------------------------------------------------

/// Maximum matching in a bipartite graph by augmenting paths. Returns
/// the partner of each vertex, or `None` if unmatched.
pub fn max_bipartite_matching(g: &Graph, bip: &Bipartition) -> Vec<Option<usize>> {
    let n = g.n();
    let mut partner: Vec<Option<usize>> = vec![None; n];
    for u in bip.left.iter() {
        let mut visited = VertexSet::empty(n);
        augment(g, u, &mut partner, &mut visited);
    }
    partner
}

fn augment(g: &Graph, u: usize, partner: &mut [Option<usize>], visited: &mut VertexSet) -> bool {
    for v in g.neighbors(u).iter() {
        if visited.contains(v) {
            continue;
        }
        visited.insert(v);
        let free = match partner[v] {
            None => true,
            Some(w) => augment(g, w, partner, visited),
        };
        if free {
            partner[v] = Some(u);
            partner[u] = Some(v);
            return true;
        }
    }
    false
}

/// Minimum vertex cover from a maximum matching (König): left vertices
/// not reachable by alternating paths from unmatched left vertices,
/// plus reachable right vertices.
pub fn konig_vertex_cover(g: &Graph, bip: &Bipartition, partner: &[Option<usize>]) -> VertexSet {
    let n = g.n();
    let mut reached = VertexSet::empty(n);
    let mut queue: Vec<usize> = bip.left.iter().filter(|&u| partner[u].is_none()).collect();
    for &u in &queue {
        reached.insert(u);
    }
    while let Some(u) = queue.pop() {
        for v in g.neighbors(u).iter() {
            if reached.contains(v) {
                continue;
            }
            reached.insert(v);
            if let Some(w) = partner[v] {
                if !reached.contains(w) {
                    reached.insert(w);
                    queue.push(w);
                }
            }
        }
    }
    let mut cover = VertexSet::empty(n);
    for u in bip.left.iter() {
        if !reached.contains(u) {
            cover.insert(u);
        }
    }
    for v in bip.right.iter() {
        if reached.contains(v) {
            cover.insert(v);
        }
    }
    cover
}

/// Proper edge coloring of a bipartite graph with exactly Delta colors,
/// by iterated Kempe swaps: for each edge pick the smallest colors free
/// at each endpoint and, when they differ, flip the alternating chain
/// so one becomes free at both ends.
pub fn konig_edge_coloring(g: &Graph) -> Result<EdgeColoring> {
    if g.is_bipartite().is_none() {
        return Err(Error::invalid(
            "edge coloring by König needs a bipartite graph",
        ));
    }
    let delta = g.max_degree();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut colors = vec![usize::MAX; edges.len()];
    // color_at[v][c] = edge currently colored c at v.
    let mut color_at: Vec<Vec<Option<usize>>> = vec![vec![None; delta]; g.n()];

    for (id, &(u, v)) in edges.iter().enumerate() {
        let common = (0..delta).find(|&c| color_at[u][c].is_none() && color_at[v][c].is_none());
        let chosen = if let Some(c) = common {
            c
        } else {
            let cu = color_at[u].iter().position(|s| s.is_none()).unwrap();
            let cv = color_at[v].iter().position(|s| s.is_none()).unwrap();
            // Walk the (cu, cv)-alternating chain from v and flip it,
            // freeing cu at v. In a bipartite graph the chain cannot
            // reach u.
            let mut chain = Vec::new();
            let mut cur = v;
            let mut col = cu;
            while let Some(eid) = color_at[cur][col] {
                chain.push(eid);
                let (a, b) = edges[eid];
                cur = if a == cur { b } else { a };
                col = if col == cu { cv } else { cu };
            }
            debug_assert!(cur != u);
            // Two phases: consecutive chain edges share a vertex, so
            // interleaving clears and writes would corrupt the table.
            for &eid in &chain {
                let (a, b) = edges[eid];
                color_at[a][colors[eid]] = None;
                color_at[b][colors[eid]] = None;
            }
            for &eid in &chain {
                let new = if colors[eid] == cu { cv } else { cu };
                let (a, b) = edges[eid];
                color_at[a][new] = Some(eid);
                color_at[b][new] = Some(eid);
                colors[eid] = new;
            }
            cu
        };
        colors[id] = chosen;
        color_at[u][chosen] = Some(id);
        color_at[v][chosen] = Some(id);
    }

    let ec = EdgeColoring {
        edges,
        colors,
        num_colors: delta,
    };
    debug_assert!(ec.validate(g).is_ok());
    Ok(ec)
}

/// Constructive coloring of a basic graph with exactly omega colors:
/// bipartite graphs by sides, line graphs of bipartite graphs through
/// König edge coloring of the root, and the complement classes through
/// minimum clique covers obtained from maximum matchings.
pub fn color_basic(g: &Graph, class: &BasicClass) -> Result<Coloring> {
    class.validate(g)?;
    let coloring = match class {
        BasicClass::NotBasic => {
            return Err(Error::invalid("color_basic needs a basic class witness"))
        }
        BasicClass::Bipartite(bip) => {
            if g.edge_count() == 0 {
                Coloring {
                    assignment: vec![0; g.n()],
                    num_colors: if g.n() == 0 { 0 } else { 1 },
                }
            } else {
                let assignment = (0..g.n())
                    .map(|v| usize::from(bip.right.contains(v)))
                    .collect();
                Coloring {
                    assignment,
                    num_colors: 2,
                }
            }
        }
        BasicClass::ComplementOfBipartite(bip) => {
            // Color classes are cliques of the complement: matched
            // pairs plus singletons, n - |matching| classes in all.
            let h = g.complement();
            let partner = max_bipartite_matching(&h, bip);
            let mut assignment = vec![usize::MAX; g.n()];
            let mut next = 0;
            for v in 0..g.n() {
                if assignment[v] != usize::MAX {
                    continue;
                }
                assignment[v] = next;
                if let Some(w) = partner[v] {
                    assignment[w] = next;
                }
                next += 1;
            }
            Coloring {
                assignment,
                num_colors: next,
            }
        }
        BasicClass::LineOfBipartite(root) => color_by_root_edges(g, root)?,
        BasicClass::ComplementOfLineOfBipartite(root) => {
            // Clique cover of the complement's line structure: every
            // color class is a star at a König cover vertex.
            let bip = root
                .root
                .is_bipartite()
                .ok_or_else(|| Error::invalid("line root is not bipartite"))?;
            let partner = max_bipartite_matching(&root.root, &bip);
            let cover = konig_vertex_cover(&root.root, &bip, &partner);
            let class_of: std::collections::HashMap<usize, usize> =
                cover.iter().enumerate().map(|(i, v)| (v, i)).collect();
            let assignment: Vec<usize> = root
                .vertex_edges
                .iter()
                .map(|&(a, b)| {
                    let owner = match (cover.contains(a), cover.contains(b)) {
                        (true, true) => a.min(b),
                        (true, false) => a,
                        (false, true) => b,
                        (false, false) => unreachable!("vertex cover misses a root edge"),
                    };
                    class_of[&owner]
                })
                .collect();
            compact(Coloring {
                assignment,
                num_colors: cover.len(),
            })
        }
    };
    coloring.validate(g)?;
    Ok(coloring)
}

fn color_by_root_edges(g: &Graph, root: &LineRoot) -> Result<Coloring> {
    let ec = konig_edge_coloring(&root.root)?;
    let index: std::collections::HashMap<(usize, usize), usize> =
        ec.edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let assignment = root
        .vertex_edges
        .iter()
        .map(|e| ec.colors[index[e]])
        .collect();
    let _ = g;
    Ok(compact(Coloring {
        assignment,
        num_colors: ec.num_colors,
    }))
}

fn compact(c: Coloring) -> Coloring {
    let mut remap = vec![usize::MAX; c.num_colors.max(1)];
    let mut next = 0;
    let assignment: Vec<usize> = c
        .assignment
        .iter()
        .map(|&old| {
            if remap[old] == usize::MAX {
                remap[old] = next;
                next += 1;
            }
            remap[old]
        })
        .collect();
    Coloring {
        assignment,
        num_colors: next,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{chromatic_number, clique_number};
    use crate::Limits;

    #[test]
    fn recognize_c6_as_bipartite() {
        let c6 = Graph::cycle(6);
        let class = recognize_basic(&c6);
        assert_eq!(class.tag(), "bipartite");
        class.validate(&c6).unwrap();
    }

    #[test]
    fn recognize_line_of_k33() {
        let (lg, _) = line_graph(&Graph::complete_bipartite(3, 3));
        let class = recognize_basic(&lg);
        assert_eq!(class.tag(), "line_of_bipartite");
        class.validate(&lg).unwrap();
        if let BasicClass::LineOfBipartite(root) = &class {
            // K33 is the unique root: 6 vertices, 9 edges, 3-regular.
            assert_eq!(root.root.n(), 6);
            assert_eq!(root.root.edge_count(), 9);
        }
    }

    #[test]
    fn c5_is_not_basic() {
        assert_eq!(recognize_basic(&Graph::cycle(5)).tag(), "not_basic");
        assert_eq!(basic_memberships(&Graph::cycle(5)), [false; 4]);
    }

    #[test]
    fn triangle_root_ambiguity() {
        // K3 is the line graph of both K3 and the 3-star; we accept
        // either, and the bipartite-root search must find the star.
        let k3 = Graph::complete(3);
        let any = line_graph_root(&k3).unwrap();
        any.validate(&k3).unwrap();
        let bip = line_of_bipartite_root(&k3).unwrap();
        bip.validate(&k3).unwrap();
        assert!(bip.root.is_bipartite().is_some());
    }

    #[test]
    fn cycles_are_their_own_line_graphs() {
        let c5 = Graph::cycle(5);
        let root = line_graph_root(&c5).unwrap();
        root.validate(&c5).unwrap();
        assert_eq!(root.root.n(), 5);
        assert_eq!(root.root.edge_count(), 5);
    }

    #[test]
    fn claw_is_not_a_line_graph() {
        let claw = Graph::complete_bipartite(1, 3);
        assert!(line_graph_root(&claw).is_none());
    }

    #[test]
    fn konig_edge_coloring_cases() {
        let k33 = Graph::complete_bipartite(3, 3);
        let ec = konig_edge_coloring(&k33).unwrap();
        ec.validate(&k33).unwrap();
        assert_eq!(ec.colors_used(), 3);

        let mut p4 = Graph::empty(4);
        p4.add_edge(0, 1);
        p4.add_edge(1, 2);
        p4.add_edge(2, 3);
        let ec = konig_edge_coloring(&p4).unwrap();
        ec.validate(&p4).unwrap();
        assert_eq!(ec.colors_used(), 2);

        assert!(konig_edge_coloring(&Graph::cycle(5)).is_err());
    }

    #[test]
    fn color_basic_bipartite_and_complement() {
        let c6 = Graph::cycle(6);
        let coloring = color_basic(&c6, &recognize_basic(&c6)).unwrap();
        assert_eq!(coloring.colors_used(), 2);

        // Complement of C6: clique cover of C6 by 3 edges.
        let anti = c6.complement();
        let class = recognize_basic(&anti);
        assert_eq!(class.tag(), "complement_of_bipartite");
        let coloring = color_basic(&anti, &class).unwrap();
        assert_eq!(coloring.colors_used(), 3);
        let lim = Limits::default();
        assert_eq!(chromatic_number(&anti, &lim).unwrap().0, 3);
    }

    #[test]
    fn color_basic_line_class_uses_max_degree_colors() {
        let (lg, _) = line_graph(&Graph::complete_bipartite(3, 3));
        let class = recognize_basic(&lg);
        let coloring = color_basic(&lg, &class).unwrap();
        assert_eq!(coloring.colors_used(), 3);
        let lim = Limits::default();
        assert_eq!(clique_number(&lg, &lim).unwrap().0, 3);
    }

    #[test]
    fn color_basic_complement_of_line_class() {
        // The complement of L(K33) is again a line graph of a bipartite
        // graph (the 3x3 rook graph is self-complementary), so K34 is
        // the smallest clean exemplar of this class: its line-graph
        // complement contains a claw and lands in the fourth class.
        let (lg, _) = line_graph(&Graph::complete_bipartite(3, 4));
        let anti = lg.complement();
        let class = recognize_basic(&anti);
        assert_eq!(class.tag(), "complement_of_line_of_bipartite");
        let coloring = color_basic(&anti, &class).unwrap();
        let lim = Limits::default();
        let (omega, _) = clique_number(&anti, &lim).unwrap();
        assert_eq!(coloring.colors_used(), omega);
        assert_eq!(omega, 3);
    }

    #[test]
    fn rook_graph_complement_is_still_line_of_bipartite() {
        let (lg, _) = line_graph(&Graph::complete_bipartite(3, 3));
        let anti = lg.complement();
        assert_eq!(recognize_basic(&anti).tag(), "line_of_bipartite");
    }

    #[test]
    fn color_basic_rejects_stale_witness() {
        let c6 = Graph::cycle(6);
        let class = recognize_basic(&c6);
        let other = Graph::cycle(8);
        assert!(color_basic(&other, &class).is_err());
    }

    #[test]
    fn basic_corpus_colors_with_exactly_omega_colors() {
        // Perfection of the basic classes, checked constructively: on
        // a generated corpus of basic graphs (≤ 10 vertices), the
        // constructive color count equals both oracle chi and omega.
        use rand::Rng;
        let lim = Limits::at_least(10);
        let mut corpus: Vec<Graph> = Vec::new();
        let mut rng = crate::generate::rng_for(0xBA51C, 0);
        for _ in 0..40 {
            let left = rng.gen_range(1..=5);
            let right = rng.gen_range(1..=5);
            let density = rng.gen_range(0.2..0.9);
            let bip = crate::generate::random_bipartite(&mut rng, left, right, density);
            corpus.push(bip.complement());
            let (lg, _) = line_graph(&bip);
            if lg.n() <= 10 {
                corpus.push(lg.complement());
                corpus.push(lg);
            }
            corpus.push(bip);
        }
        let mut basic_seen = 0;
        for g in &corpus {
            let class = recognize_basic(g);
            if !class.is_basic() {
                continue;
            }
            basic_seen += 1;
            let coloring = color_basic(g, &class).unwrap();
            let (omega, _) = clique_number(g, &lim).unwrap();
            let (chi, _) = chromatic_number(g, &lim).unwrap();
            assert_eq!(chi, omega, "basic graphs are perfect: {}", g.encode());
            assert_eq!(
                coloring.colors_used(),
                omega,
                "constructive count off on {} ({})",
                g.encode(),
                class.tag()
            );
        }
        assert!(basic_seen > 100, "corpus too small: {basic_seen}");
    }

    #[test]
    fn matching_and_cover_agree_on_size() {
        let g = Graph::complete_bipartite(3, 4);
        let bip = g.is_bipartite().unwrap();
        let partner = max_bipartite_matching(&g, &bip);
        let matched = partner.iter().filter(|p| p.is_some()).count() / 2;
        assert_eq!(matched, 3);
        let cover = konig_vertex_cover(&g, &bip, &partner);
        assert_eq!(cover.len(), matched);
        for (u, v) in g.edges() {
            assert!(cover.contains(u) || cover.contains(v));
        }
    }
}
