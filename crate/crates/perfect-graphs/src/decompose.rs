//! Constructive 2-join machinery: block construction, replication,
//! parity-controlled block colorings, coloring combination, 6-join
//! blocks, and the recursive perfect-coloring pipeline.
//!
//! `block_coloring` follows the replication recipe step by step — twin
//! the marker-path vertices with prescribed multiplicities, omega-color
//! the (perfect) replicated graph, and project down — and then asserts
//! the resulting color-set cardinalities and the parity-dependent
//! intersection size as executable contracts. `combine_colorings`
//! relabels the two block colorings so the contact sets occupy
//! complementary label ranges and verifies the merged coloring
//! directly.

use std::collections::BTreeSet;

use crate::basic::{color_basic, recognize_basic, BasicClass};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{clique_number, is_perfect, k_color_raw, max_clique_raw, Coloring};
use crate::structure::{find_two_join, SixJoin, TwoJoin};
use crate::Limits;

/// Parity of the marker path inside the opposite side, or
/// `Disconnected` when the two contact sets cannot reach each other
/// there (the block then carries a marker pair instead of a path).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathParity {
    Odd,
    Even,
    Disconnected,
}

impl PathParity {
    pub fn tag(&self) -> &'static str {
        match self {
            PathParity::Odd => "odd",
            PathParity::Even => "even",
            PathParity::Disconnected => "none",
        }
    }
}

/// One block of a 2-join: the side's vertices plus a marker path (or
/// pair) standing in for the other side, as an induced subgraph with a
/// map back to the parent.
#[derive(Debug, Clone)]
pub struct Block {
    pub graph: Graph,
    /// Block index -> parent index.
    pub to_parent: Vec<usize>,
    /// Block-local image of the side `V_i`.
    pub side: VertexSet,
    /// Block-local contact sets.
    pub a: VertexSet,
    pub b: VertexSet,
    /// Block-local marker vertices, ordered from the A end to the B
    /// end; a two-element list when the opposite side is disconnected.
    pub marker: Vec<usize>,
    pub parity: PathParity,
}

#[derive(Debug, Clone)]
pub struct BlockPair {
    pub first: Block,
    pub second: Block,
}

/// Builds both blocks: for each side, the marker is a shortest path
/// between the opposite contact sets inside the opposite side, or the
/// smallest-index pair when those sets live in different components.
pub fn two_join_blocks(g: &Graph, tj: &TwoJoin) -> Result<BlockPair> {
    tj.validate(g)?;
    let first = build_block(g, &tj.v1, &tj.a1, &tj.b1, &tj.v2, &tj.a2, &tj.b2)?;
    let second = build_block(g, &tj.v2, &tj.a2, &tj.b2, &tj.v1, &tj.a1, &tj.b1)?;
    Ok(BlockPair { first, second })
}

fn build_block(
    g: &Graph,
    side: &VertexSet,
    a: &VertexSet,
    b: &VertexSet,
    other: &VertexSet,
    other_a: &VertexSet,
    other_b: &VertexSet,
) -> Result<Block> {
    let (sub, sub_map) = g.induced(other);
    let local = |s: &VertexSet| {
        VertexSet::from_iter(
            sub.n(),
            sub_map
                .iter()
                .enumerate()
                .filter(|(_, p)| s.contains(**p))
                .map(|(i, _)| i),
        )
    };
    let path = sub.shortest_path_between_sets(&local(other_a), &local(other_b))?;
    let (marker_parents, parity) = match path {
        Some(p) => {
            let parents: Vec<usize> = p.vertices.iter().map(|&v| sub_map[v]).collect();
            let parity = if p.len() % 2 == 1 {
                PathParity::Odd
            } else {
                PathParity::Even
            };
            (parents, parity)
        }
        None => {
            let p = other_a.smallest().expect("contact sets are nonempty");
            let q = other_b.smallest().expect("contact sets are nonempty");
            (vec![p, q], PathParity::Disconnected)
        }
    };
    let mut keep = side.clone();
    for &m in &marker_parents {
        keep.insert(m);
    }
    let (graph, to_parent) = g.induced(&keep);
    let index_of = |parent: usize| to_parent.iter().position(|&p| p == parent).unwrap();
    Ok(Block {
        side: VertexSet::from_iter(graph.n(), side.iter().map(index_of)),
        a: VertexSet::from_iter(graph.n(), a.iter().map(index_of)),
        b: VertexSet::from_iter(graph.n(), b.iter().map(index_of)),
        marker: marker_parents.iter().map(|&m| index_of(m)).collect(),
        parity,
        graph,
        to_parent,
    })
}

/// Adds one true twin of `v`: adjacent to `v` and to all its neighbors.
fn add_twin(g: &Graph, v: usize) -> Graph {
    let n = g.n();
    let mut h = Graph::empty(n + 1);
    for (x, y) in g.edges() {
        h.add_edge(x, y);
    }
    h.add_edge(n, v);
    for w in g.neighbors(v).iter() {
        h.add_edge(n, w);
    }
    h
}

/// Replicates `v` to `copies` total copies (including `v` itself);
/// `copies = 1` is the identity. Copies are pairwise adjacent.
pub fn replicate(g: &Graph, v: usize, copies: usize) -> Graph {
    assert!(copies >= 1, "a vertex is replicated at least once");
    assert!(v < g.n(), "vertex out of range");
    let mut h = g.clone();
    for _ in 1..copies {
        h = add_twin(&h, v);
    }
    h
}

/// Replicates `v` into `v'` and deletes the edge `u v'`. Requires `uv`
/// to be an edge whose ends have no common neighbor. Returns the new
/// graph and the index of `v'`.
pub fn replicate_minus_edge(g: &Graph, u: usize, v: usize) -> Result<(Graph, usize)> {
    if !g.has_edge(u, v) {
        return Err(Error::invalid("uv must be an edge"));
    }
    if g.neighbors(u).intersects(g.neighbors(v)) {
        return Err(Error::invalid("u and v must have no common neighbor"));
    }
    let mut h = add_twin(g, v);
    let v_prime = g.n();
    h.remove_edge(u, v_prime);
    Ok((h, v_prime))
}

/// An omega-coloring of one side of a 2-join with controlled color
/// sets on the contact sets. `a_count` and `b_count` are the clique
/// numbers of the contact sets; the color-set sizes match them, and
/// for path blocks the intersection size is pinned by the parity.
#[derive(Debug, Clone)]
pub struct BlockColoring {
    /// `(parent vertex, color)` for every vertex of the side.
    pub side_colors: Vec<(usize, usize)>,
    pub color_a: BTreeSet<usize>,
    pub color_b: BTreeSet<usize>,
    pub a_count: usize,
    pub b_count: usize,
    pub parity: PathParity,
}

/// How deep the structural pipeline recurses and how large a graph it
/// is willing to scan for 2-joins or line-graph structure; beyond the
/// bounds it falls back to the exact coloring oracle (which every
/// output is verified against anyway).
#[derive(Debug, Clone, Copy)]
struct EngineCaps {
    two_join_bound: usize,
    line_bound: usize,
}

impl Default for EngineCaps {
    fn default() -> Self {
        EngineCaps {
            two_join_bound: 18,
            line_bound: 16,
        }
    }
}

/// Decomposition trace of a coloring run.
#[derive(Debug, Clone)]
pub enum ColorTreeNode {
    /// Colored constructively as a basic graph.
    Basic { class_tag: &'static str },
    /// Split along a 2-join; children describe the block colorings.
    TwoJoinSplit {
        join: TwoJoin,
        first: Box<ColorTreeNode>,
        second: Box<ColorTreeNode>,
    },
    /// Colored by the exact branch-and-bound oracle.
    Oracle,
}

impl ColorTreeNode {
    pub fn tag(&self) -> &'static str {
        match self {
            ColorTreeNode::Basic { .. } => "basic",
            ColorTreeNode::TwoJoinSplit { .. } => "two_join",
            ColorTreeNode::Oracle => "oracle",
        }
    }
}

/// Colors the replicated block with `omega` colors per the parity
/// recipe and projects down to the side vertices, asserting the
/// color-set contracts. The second return value traces how the
/// replicated graph itself was colored.
pub fn block_coloring(
    block: &Block,
    omega: usize,
    depth: usize,
) -> Result<(BlockColoring, ColorTreeNode)> {
    let caps = EngineCaps::default();
    block_coloring_with(block, omega, depth, &caps)
}

fn block_coloring_with(
    block: &Block,
    omega: usize,
    depth: usize,
    caps: &EngineCaps,
) -> Result<(BlockColoring, ColorTreeNode)> {
    let g = &block.graph;
    if block.a.is_empty() || block.b.is_empty() {
        return Err(Error::invalid("block contact sets must be nonempty"));
    }
    let a_count = max_clique_raw(&g.induced(&block.a).0).len();
    let b_count = max_clique_raw(&g.induced(&block.b).0).len();
    if max_clique_raw(g).len() > omega {
        return Err(Error::invalid("omega must be at least the block's clique number"));
    }

    // Replication plan: total copy counts per marker vertex, with the
    // edge-deleted twin of the last path vertex handled separately.
    let m = block.marker.len();
    let mut plan: Vec<(usize, usize)> = Vec::new();
    let mut claim2_move: Option<(usize, usize)> = None; // (u, v) of the deleted edge
    let mut x_prime_copies = 0usize;
    match block.parity {
        PathParity::Disconnected => {
            plan.push((block.marker[0], omega - a_count.min(omega)));
            plan.push((block.marker[1], omega - b_count.min(omega)));
        }
        PathParity::Odd => {
            claim2_move = Some((block.marker[m - 2], block.marker[m - 1]));
            for (pos, &x) in block.marker.iter().enumerate() {
                let i = pos + 1;
                if i == m {
                    continue;
                }
                if i % 2 == 1 {
                    plan.push((x, omega - a_count));
                } else if i <= m - 2 {
                    plan.push((x, a_count));
                }
            }
            if a_count + b_count < omega {
                plan.push((block.marker[m - 1], a_count));
                x_prime_copies = omega - a_count - b_count;
            } else {
                plan.push((block.marker[m - 1], omega - b_count));
                x_prime_copies = 0;
            }
        }
        PathParity::Even => {
            // The recipe assumes the A-side count is the smaller one;
            // otherwise walk the path from the B end with roles swapped.
            let (path, first_count, last_count) = if a_count <= b_count {
                (block.marker.clone(), a_count, b_count)
            } else {
                let mut rev = block.marker.clone();
                rev.reverse();
                (rev, b_count, a_count)
            };
            for (pos, &x) in path.iter().enumerate() {
                let i = pos + 1;
                if i == m {
                    plan.push((x, omega - last_count));
                } else if i % 2 == 1 {
                    plan.push((x, omega - first_count));
                } else {
                    plan.push((x, first_count));
                }
            }
        }
    }

    // Apply: the edge-deleted twin first, then the planned copies in
    // path order, then drop everything with a zero count.
    let mut h = g.clone();
    let mut x_prime = None;
    if let Some((u, v)) = claim2_move {
        let (hh, xp) = replicate_minus_edge(&h, u, v)?;
        h = hh;
        x_prime = Some(xp);
    }
    let mut deleted: Vec<usize> = Vec::new();
    for &(v, count) in &plan {
        if count == 0 {
            deleted.push(v);
        } else {
            h = replicate(&h, v, count);
        }
    }
    if let Some(xp) = x_prime {
        if x_prime_copies == 0 {
            deleted.push(xp);
        } else {
            h = replicate(&h, xp, x_prime_copies);
        }
    }
    let mut keep = VertexSet::full(h.n());
    for &v in &deleted {
        keep.remove(v);
    }
    let (h_final, h_map) = h.induced(&keep);
    // Side vertices are never replicated or deleted, so they survive
    // with their identity intact.
    let h_index = |block_v: usize| h_map.iter().position(|&w| w == block_v).unwrap();

    let (h_coloring, trace) = omega_color(&h_final, omega, depth, caps)?;

    let side_colors: Vec<(usize, usize)> = block
        .side
        .iter()
        .map(|v| (block.to_parent[v], h_coloring.assignment[h_index(v)]))
        .collect();
    let color_set = |s: &VertexSet| -> BTreeSet<usize> {
        s.iter()
            .map(|v| h_coloring.assignment[h_index(v)])
            .collect()
    };
    let color_a = color_set(&block.a);
    let color_b = color_set(&block.b);

    let inconsistency = |detail: String| Error::InternalInconsistency {
        context: "block coloring contract",
        detail,
        instance: g.encode(),
    };
    if color_a.len() != a_count {
        return Err(inconsistency(format!(
            "|C(A)| = {} but omega(A) = {a_count}",
            color_a.len()
        )));
    }
    if color_b.len() != b_count {
        return Err(inconsistency(format!(
            "|C(B)| = {} but omega(B) = {b_count}",
            color_b.len()
        )));
    }
    let meet = color_a.intersection(&color_b).count();
    let expected = match block.parity {
        PathParity::Odd => Some((a_count + b_count).saturating_sub(omega)),
        PathParity::Even => Some(a_count.min(b_count)),
        PathParity::Disconnected => None,
    };
    if let Some(expected) = expected {
        if meet != expected {
            return Err(inconsistency(format!(
                "|C(A) ∩ C(B)| = {meet}, expected {expected} for a {} path with a={a_count}, b={b_count}, omega={omega}",
                block.parity.tag()
            )));
        }
    }

    Ok((
        BlockColoring {
            side_colors,
            color_a,
            color_b,
            a_count,
            b_count,
            parity: block.parity,
        },
        trace,
    ))
}

/// Result of combining two block colorings; the relabelings are the
/// color permutations applied to each side (absent for the
/// component-wise route taken when a side is disconnected).
#[derive(Debug, Clone)]
pub struct CombinedColoring {
    pub coloring: Coloring,
    pub relabel_first: Option<Vec<usize>>,
    pub relabel_second: Option<Vec<usize>>,
}

/// Merges the two side colorings into an omega-coloring of the parent:
/// matching path parities get the label-range relabeling (contact
/// colors packed to opposite ends of the palette), and a disconnected
/// side is recolored component by component around the other side.
pub fn combine_colorings(
    g: &Graph,
    tj: &TwoJoin,
    c1: &BlockColoring,
    c2: &BlockColoring,
    omega: usize,
) -> Result<CombinedColoring> {
    tj.validate(g)?;
    if omega < c1.a_count + c2.a_count || omega < c1.b_count + c2.b_count {
        return Err(Error::invalid(
            "omega must cover both contact pairs: omega >= a1+a2 and omega >= b1+b2",
        ));
    }

    let combined = match (c1.parity, c2.parity) {
        (PathParity::Disconnected, _) => combine_around(g, tj, c1, c2, omega, false)?,
        (_, PathParity::Disconnected) => combine_around(g, tj, c2, c1, omega, true)?,
        (PathParity::Odd, PathParity::Odd) => combine_by_ranges(g, c1, c2, omega, true)?,
        (PathParity::Even, PathParity::Even) => combine_by_ranges(g, c1, c2, omega, false)?,
        _ => {
            return Err(Error::invalid(
                "block parities must match to combine path colorings",
            ))
        }
    };

    combined.coloring.validate(g).map_err(|e| Error::InternalInconsistency {
        context: "combined coloring",
        detail: format!("merged coloring is not proper: {e}"),
        instance: g.encode(),
    })?;
    Ok(combined)
}

fn range_set(range: std::ops::Range<usize>) -> BTreeSet<usize> {
    range.collect()
}

/// Permutation of `0..omega` sending `cx` onto `tx` and `cy` onto `ty`;
/// requires the overlap sizes to agree, which is exactly the parity
/// contract of the block colorings.
fn relabel_permutation(
    omega: usize,
    cx: &BTreeSet<usize>,
    tx: &BTreeSet<usize>,
    cy: &BTreeSet<usize>,
    ty: &BTreeSet<usize>,
) -> Result<Vec<usize>> {
    let clash = |msg: String| Error::InternalInconsistency {
        context: "color relabeling",
        detail: msg,
        instance: String::new(),
    };
    if cx.len() != tx.len() || cy.len() != ty.len() {
        return Err(clash("color set sizes do not match their target ranges".into()));
    }
    let c_meet: Vec<usize> = cx.intersection(cy).copied().collect();
    let t_meet: Vec<usize> = tx.intersection(ty).copied().collect();
    if c_meet.len() != t_meet.len() {
        return Err(clash(format!(
            "intersection sizes differ: {} actual vs {} target",
            c_meet.len(),
            t_meet.len()
        )));
    }
    let mut perm = vec![usize::MAX; omega];
    let assign = |from: &[usize], to: &[usize], perm: &mut Vec<usize>| {
        for (f, t) in from.iter().zip(to.iter()) {
            perm[*f] = *t;
        }
    };
    assign(&c_meet, &t_meet, &mut perm);
    let cx_only: Vec<usize> = cx.difference(cy).copied().collect();
    let tx_only: Vec<usize> = tx.difference(ty).copied().collect();
    assign(&cx_only, &tx_only, &mut perm);
    let cy_only: Vec<usize> = cy.difference(cx).copied().collect();
    let used: BTreeSet<usize> = perm.iter().copied().filter(|&t| t != usize::MAX).collect();
    let ty_rest: Vec<usize> = ty.iter().copied().filter(|t| !used.contains(t)).collect();
    assign(&cy_only, &ty_rest, &mut perm);
    let used: BTreeSet<usize> = perm.iter().copied().filter(|&t| t != usize::MAX).collect();
    let mut free = (0..omega).filter(|t| !used.contains(t));
    for slot in perm.iter_mut() {
        if *slot == usize::MAX {
            *slot = free.next().expect("permutation must cover the palette");
        }
    }
    Ok(perm)
}

fn combine_by_ranges(
    g: &Graph,
    c1: &BlockColoring,
    c2: &BlockColoring,
    omega: usize,
    odd: bool,
) -> Result<CombinedColoring> {
    let (a1, b1, a2, b2) = (c1.a_count, c1.b_count, c2.a_count, c2.b_count);
    // Side one always packs its A colors at the bottom; side two packs
    // its A colors at the top. The B targets depend on the parity.
    let t_a1 = range_set(0..a1);
    let t_a2 = range_set(omega - a2..omega);
    let (t_b1, t_b2) = if odd {
        (range_set(omega - b1..omega), range_set(0..b2))
    } else {
        (range_set(0..b1), range_set(omega - b2..omega))
    };
    let perm1 = relabel_permutation(omega, &c1.color_a, &t_a1, &c1.color_b, &t_b1)?;
    let perm2 = relabel_permutation(omega, &c2.color_a, &t_a2, &c2.color_b, &t_b2)?;

    let mut assignment = vec![usize::MAX; g.n()];
    for &(v, c) in &c1.side_colors {
        assignment[v] = perm1[c];
    }
    for &(v, c) in &c2.side_colors {
        assignment[v] = perm2[c];
    }
    Ok(CombinedColoring {
        coloring: Coloring {
            assignment,
            num_colors: omega,
        },
        relabel_first: Some(perm1),
        relabel_second: Some(perm2),
    })
}

/// `fixed` keeps its coloring verbatim; the other side is disconnected
/// between its contact sets, so each of its components is permuted
/// independently to steer contact colors away from the fixed side's.
/// `swapped` records whether `fixed` is block two.
fn combine_around(
    g: &Graph,
    tj: &TwoJoin,
    fixed: &BlockColoring,
    loose: &BlockColoring,
    omega: usize,
    swapped: bool,
) -> Result<CombinedColoring> {
    let (loose_side, loose_a, loose_b) = if swapped {
        (&tj.v1, &tj.a1, &tj.b1)
    } else {
        (&tj.v2, &tj.a2, &tj.b2)
    };
    let mut assignment = vec![usize::MAX; g.n()];
    for &(v, c) in &fixed.side_colors {
        assignment[v] = c;
    }
    let loose_colors: std::collections::HashMap<usize, usize> =
        loose.side_colors.iter().copied().collect();

    for comp in g.components_within(loose_side) {
        let in_a = comp.intersects(loose_a);
        let in_b = comp.intersects(loose_b);
        if in_a && in_b {
            return Err(Error::invalid(
                "side marked disconnected but a component meets both contact sets",
            ));
        }
        let mut perm: Vec<usize> = (0..omega).collect();
        if in_a || in_b {
            let (contact, avoid) = if in_a {
                (loose_a, &fixed.color_a)
            } else {
                (loose_b, &fixed.color_b)
            };
            let contact_colors: BTreeSet<usize> = comp
                .intersection(contact)
                .iter()
                .map(|v| loose_colors[&v])
                .collect();
            let mut targets = (0..omega).filter(|t| !avoid.contains(t));
            let mut mapping = vec![usize::MAX; omega];
            for &c in &contact_colors {
                mapping[c] = targets
                    .next()
                    .ok_or_else(|| Error::invalid("omega too small to steer contact colors"))?;
            }
            let used: BTreeSet<usize> = mapping.iter().copied().filter(|&t| t != usize::MAX).collect();
            let mut rest = (0..omega).filter(|t| !used.contains(t));
            for slot in mapping.iter_mut() {
                if *slot == usize::MAX {
                    *slot = rest.next().expect("bijection over the palette");
                }
            }
            perm = mapping;
        }
        for v in comp.iter() {
            assignment[v] = perm[loose_colors[&v]];
        }
    }
    Ok(CombinedColoring {
        coloring: Coloring {
            assignment,
            num_colors: omega,
        },
        relabel_first: None,
        relabel_second: None,
    })
}

/// An induced subgraph plus its map back to the parent's indices.
pub type InducedBlock = (Graph, Vec<usize>);

/// Blocks of a 6-join: each side plus the smallest-index
/// representative of each of the other side's first three classes.
pub fn six_join_blocks(g: &Graph, sj: &SixJoin) -> Result<(InducedBlock, InducedBlock)> {
    sj.validate(g)?;
    let side = |own: &[VertexSet; 4], reps: &[VertexSet; 4]| {
        let mut keep = own
            .iter()
            .fold(VertexSet::empty(g.n()), |acc, s| acc.union(s));
        for class in reps.iter().take(3) {
            keep.insert(class.smallest().expect("six-join classes are nonempty"));
        }
        g.induced(&keep)
    };
    Ok((side(&sj.x, &sj.y), side(&sj.y, &sj.x)))
}

// ---------------------------------------------------------------------
// Recursive perfect coloring
// ---------------------------------------------------------------------

/// Whether `perfect_color` verifies perfection itself or trusts the
/// caller.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerfectionHandling {
    Verify,
    Trust,
}

#[derive(Debug, Clone)]
pub struct PerfectColoring {
    pub coloring: Coloring,
    pub omega: usize,
    pub tree: ColorTreeNode,
}

/// Colors a perfect graph with exactly omega colors: basic graphs
/// constructively, 2-join graphs by recursive block coloring and
/// combination, everything else by the exact oracle. The result is
/// always validated before it is returned.
pub fn perfect_color(
    g: &Graph,
    limits: &Limits,
    handling: PerfectionHandling,
) -> Result<PerfectColoring> {
    if handling == PerfectionHandling::Verify {
        let report = is_perfect(g, limits)?;
        if !report.perfect {
            let witness = report.witness.expect("imperfect graphs carry a witness");
            return Err(Error::invalid(format!(
                "input is imperfect; violating vertex set {:?}",
                witness.to_vec()
            )));
        }
    }
    let (omega, _) = clique_number(g, limits)?;
    let caps = EngineCaps::default();
    let (coloring, tree) = omega_color(g, omega, g.n(), &caps)?;
    coloring.validate(g)?;
    if coloring.colors_used() != omega && g.n() > 0 {
        return Err(Error::InternalInconsistency {
            context: "perfect coloring",
            detail: format!(
                "coloring uses {} colors but omega = {omega}",
                coloring.colors_used()
            ),
            instance: g.encode(),
        });
    }
    Ok(PerfectColoring {
        coloring,
        omega,
        tree,
    })
}

/// Pipeline step shared by `perfect_color` and `block_coloring`:
/// basic -> 2-join recursion -> oracle. `omega` must be at least the
/// clique number of `g`; the coloring uses colors from `0..omega`.
fn omega_color(
    g: &Graph,
    omega: usize,
    depth: usize,
    caps: &EngineCaps,
) -> Result<(Coloring, ColorTreeNode)> {
    // Basic classes come first; the constructive coloring uses exactly
    // omega(g) <= omega colors. Line-graph recognition is skipped on
    // graphs too large for the Krausz search.
    let class = if g.n() <= caps.line_bound {
        recognize_basic(g)
    } else if let Some(bip) = g.is_bipartite() {
        BasicClass::Bipartite(bip)
    } else if let Some(bip) = g.complement().is_bipartite() {
        BasicClass::ComplementOfBipartite(bip)
    } else {
        BasicClass::NotBasic
    };
    if class.is_basic() {
        let coloring = color_basic(g, &class)?;
        if coloring.num_colors > omega {
            return Err(Error::InternalInconsistency {
                context: "basic coloring",
                detail: format!(
                    "basic coloring needs {} colors but omega = {omega}",
                    coloring.num_colors
                ),
                instance: g.encode(),
            });
        }
        return Ok((
            Coloring {
                assignment: coloring.assignment,
                num_colors: omega.max(coloring.num_colors),
            },
            ColorTreeNode::Basic {
                class_tag: class.tag(),
            },
        ));
    }

    if depth > 0 && g.n() <= caps.two_join_bound {
        if let Some(tj) = find_two_join(g) {
            let blocks = two_join_blocks(g, &tj)?;
            // Guard against non-decreasing recursion; a real 2-join
            // always shrinks both blocks because each side has at
            // least three vertices.
            if blocks.first.graph.n() < g.n() && blocks.second.graph.n() < g.n() {
                let (bc1, t1) = block_coloring_with(&blocks.first, omega, depth - 1, caps)?;
                let (bc2, t2) = block_coloring_with(&blocks.second, omega, depth - 1, caps)?;
                let combined = combine_colorings(g, &tj, &bc1, &bc2, omega)?;
                return Ok((
                    combined.coloring,
                    ColorTreeNode::TwoJoinSplit {
                        join: tj,
                        first: Box::new(t1),
                        second: Box::new(t2),
                    },
                ));
            }
        }
    }

    match k_color_raw(g, omega) {
        Some(assignment) => Ok((
            Coloring {
                assignment,
                num_colors: omega,
            },
            ColorTreeNode::Oracle,
        )),
        None => Err(Error::invalid(format!(
            "graph admits no {omega}-coloring; it cannot be perfect with this omega"
        ))),
    }
}
