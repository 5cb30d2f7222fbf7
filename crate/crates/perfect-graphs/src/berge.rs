//! Berge recognition, the Roussel–Rubio lemma checker, and executable
//! predicates for the decomposition theorems.
//!
//! The theorem predicates return the first witness in a fixed disjunct
//! order and also expose the full vector of disjuncts, so sweeps are
//! reproducible and analysis output can show everything that applies.
//! When a proved theorem's disjunction comes up empty the functions
//! return an internal-inconsistency error carrying an encoding of the
//! instance: at desk scale that always means an implementation bug.

use crate::basic::{line_of_bipartite_root, BasicClass, LineRoot};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, HoleParity, Path, VertexSet};
use crate::structure::{
    find_double_star_cutset, find_homogeneous_pair, find_skew_partition, find_star_cutset,
    find_two_join, DoubleStarCutset, HomogeneousPair, HomogeneousPairOptions, SkewPartition,
    StarCutset, TwoJoin,
};
use crate::Limits;

/// Offending structure when a graph is not Berge.
#[derive(Debug, Clone)]
pub enum OddHoleWitness {
    Hole(Path),
    /// An odd hole of the complement, listed in complement coordinates
    /// (which coincide with the graph's).
    Antihole(Path),
}

#[derive(Debug, Clone)]
pub struct BergeReport {
    pub berge: bool,
    pub witness: Option<OddHoleWitness>,
}

/// A graph is Berge iff neither it nor its complement has an odd hole.
pub fn is_berge(g: &Graph, limits: &Limits) -> Result<BergeReport> {
    if g.n() > limits.berge {
        return Err(Error::ResourceLimit {
            what: "Berge scan",
            n: g.n(),
            limit: limits.berge,
        });
    }
    if let Some(hole) = g.find_hole(HoleParity::Odd, 5) {
        return Ok(BergeReport {
            berge: false,
            witness: Some(OddHoleWitness::Hole(hole)),
        });
    }
    if let Some(hole) = g.complement().find_hole(HoleParity::Odd, 5) {
        return Ok(BergeReport {
            berge: false,
            witness: Some(OddHoleWitness::Antihole(hole)),
        });
    }
    Ok(BergeReport {
        berge: true,
        witness: None,
    })
}

// ---------------------------------------------------------------------
// The Wonderful Lemma
// ---------------------------------------------------------------------

/// Hypothesis package: the vertices split into `s` and an odd chordless
/// path of length at least 3 whose ends see all of `s`, with the
/// complement of `G(s)` connected.
#[derive(Debug, Clone)]
pub struct WonderfulInstance {
    pub graph: Graph,
    pub s: VertexSet,
    pub path: Path,
}

impl WonderfulInstance {
    pub fn validate(&self, limits: &Limits) -> Result<()> {
        let g = &self.graph;
        let n = g.n();
        if self.s.is_empty() {
            return Err(Error::invalid("S must be nonempty"));
        }
        let path_set = VertexSet::from_iter(n, self.path.vertices.iter().copied());
        if path_set.len() != self.path.vertices.len() || self.s.union(&path_set) != VertexSet::full(n)
            || self.s.intersects(&path_set)
        {
            return Err(Error::invalid("S and the path must partition the vertices"));
        }
        if self.path.len() < 3 || self.path.len() % 2 == 0 {
            return Err(Error::invalid("the path must be odd of length at least 3"));
        }
        if !self.path.is_chordless_path(g) {
            return Err(Error::invalid("the path must be chordless"));
        }
        for end in [self.path.first(), self.path.last()] {
            if !self.s.is_subset_of(g.neighbors(end)) {
                return Err(Error::invalid("both path ends must see all of S"));
            }
        }
        let (anti_s, _) = g.complement().induced(&self.s);
        if !anti_s.is_connected() {
            return Err(Error::invalid("the complement of G(S) must be connected"));
        }
        let report = is_berge(g, limits)?;
        if !report.berge {
            return Err(Error::invalid("the graph must be Berge"));
        }
        Ok(())
    }
}

/// Which of the lemma's three alternatives hold.
#[derive(Debug, Clone)]
pub struct WonderfulOutcome {
    /// Number of path edges whose two ends both see all of S.
    pub saturated_edges: usize,
    /// (i): that count is odd.
    pub parity_holds: bool,
    /// (ii): for length-3 paths, the complement of
    /// `G(S ∪ {u', v'})` has an odd chordless path between the two
    /// interior vertices.
    pub short_jump_holds: Option<bool>,
    /// (iii): for length >= 5, some nonadjacent pair of S together
    /// with the path's interior induces a path.
    pub long_pair_holds: Option<bool>,
}

impl WonderfulOutcome {
    pub fn any_holds(&self) -> bool {
        self.parity_holds
            || self.short_jump_holds == Some(true)
            || self.long_pair_holds == Some(true)
    }
}

/// Evaluates the three alternatives literally. An instance where none
/// holds contradicts the lemma and is reported as an internal
/// inconsistency with a full dump.
pub fn wonderful_check(inst: &WonderfulInstance, limits: &Limits) -> Result<WonderfulOutcome> {
    inst.validate(limits)?;
    let g = &inst.graph;
    let n = g.n();
    let vs = &inst.path.vertices;

    let sees_all = |v: usize| inst.s.is_subset_of(g.neighbors(v));
    let saturated_edges = vs
        .windows(2)
        .filter(|w| sees_all(w[0]) && sees_all(w[1]))
        .count();
    let parity_holds = saturated_edges % 2 == 1;

    let short_jump_holds = if inst.path.len() == 3 {
        let u_prime = vs[1];
        let v_prime = vs[2];
        let mut keep = inst.s.clone();
        keep.insert(u_prime);
        keep.insert(v_prime);
        let (anti, map) = g.complement().induced(&keep);
        let from = map.iter().position(|&p| p == u_prime).unwrap();
        let to = map.iter().position(|&p| p == v_prime).unwrap();
        Some(has_odd_chordless_path(&anti, from, to))
    } else {
        None
    };

    let long_pair_holds = if inst.path.len() >= 5 {
        let interior: Vec<usize> = vs[1..vs.len() - 1].to_vec();
        let mut found = false;
        'outer: for x in inst.s.iter() {
            for y in inst.s.iter() {
                if y <= x || g.has_edge(x, y) {
                    continue;
                }
                let mut set = VertexSet::from_iter(n, interior.iter().copied());
                set.insert(x);
                set.insert(y);
                let (sub, _) = g.induced(&set);
                if induces_path(&sub) {
                    found = true;
                    break 'outer;
                }
            }
        }
        Some(found)
    } else {
        None
    };

    let outcome = WonderfulOutcome {
        saturated_edges,
        parity_holds,
        short_jump_holds,
        long_pair_holds,
    };
    if !outcome.any_holds() {
        return Err(Error::InternalInconsistency {
            context: "wonderful lemma",
            detail: format!(
                "no alternative holds: saturated_edges={}, S={:?}, path={:?}",
                outcome.saturated_edges,
                inst.s.to_vec(),
                vs
            ),
            instance: g.encode(),
        });
    }
    Ok(outcome)
}

fn induces_path(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    g.edge_count() == n - 1 && g.is_connected() && (0..n).all(|v| g.degree(v) <= 2)
}

fn has_odd_chordless_path(g: &Graph, from: usize, to: usize) -> bool {
    let mut path = vec![from];
    chordless_path_dfs(g, to, &mut path)
}

fn chordless_path_dfs(g: &Graph, target: usize, path: &mut Vec<usize>) -> bool {
    let last = *path.last().unwrap();
    if last == target {
        return (path.len() - 1) % 2 == 1;
    }
    'next: for w in g.neighbors(last).iter() {
        if path.contains(&w) {
            continue;
        }
        for &p in &path[..path.len() - 1] {
            if g.has_edge(w, p) {
                continue 'next;
            }
        }
        path.push(w);
        // Even completions keep searching: a longer odd route may pass
        // through different vertices.
        if chordless_path_dfs(g, target, path) {
            path.pop();
            return true;
        }
        path.pop();
    }
    false
}

/// All hypothesis-satisfying `(S, P)` splits of a Berge graph, in
/// canonical path order.
pub fn wonderful_instances(g: &Graph, limits: &Limits) -> Result<Vec<WonderfulInstance>> {
    let report = is_berge(g, limits)?;
    if !report.berge {
        return Ok(Vec::new());
    }
    let n = g.n();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    for start in 0..n {
        path.clear();
        path.push(start);
        collect_odd_paths(g, &mut path, &mut |p| {
            let s = VertexSet::from_iter(n, p.iter().copied()).complement();
            if s.is_empty() {
                return;
            }
            let ends_see_all = s.is_subset_of(g.neighbors(p[0]))
                && s.is_subset_of(g.neighbors(*p.last().unwrap()));
            if !ends_see_all {
                return;
            }
            let (anti_s, _) = g.complement().induced(&s);
            if !anti_s.is_connected() {
                return;
            }
            out.push(WonderfulInstance {
                graph: g.clone(),
                s,
                path: Path::new(p.to_vec()),
            });
        });
    }
    Ok(out)
}

fn collect_odd_paths(g: &Graph, path: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    let last = *path.last().unwrap();
    if path.len() >= 4 && path.len() % 2 == 0 && path[0] < last {
        emit(path);
    }
    'next: for w in g.neighbors(last).iter() {
        if path.contains(&w) {
            continue;
        }
        for &p in &path[..path.len() - 1] {
            if g.has_edge(w, p) {
                continue 'next;
            }
        }
        path.push(w);
        collect_odd_paths(g, path, emit);
        path.pop();
    }
}

// ---------------------------------------------------------------------
// Decomposition predicates
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionCase {
    Basic,
    SkewPartition,
    HomogeneousPair,
    TwoJoinInGraph,
    TwoJoinInComplement,
    NoneFound,
}

impl DecompositionCase {
    pub fn tag(&self) -> &'static str {
        match self {
            DecompositionCase::Basic => "basic",
            DecompositionCase::SkewPartition => "skew_partition",
            DecompositionCase::HomogeneousPair => "homogeneous_pair",
            DecompositionCase::TwoJoinInGraph => "two_join_in_g",
            DecompositionCase::TwoJoinInComplement => "two_join_in_complement",
            DecompositionCase::NoneFound => "none_found",
        }
    }
}

/// Which cases of the Berge decomposition disjunction hold, with
/// witnesses. `case()` reports the first in the fixed order basic,
/// skew partition, homogeneous pair, 2-join, complement 2-join.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub basic: BasicClass,
    pub skew: Option<SkewPartition>,
    pub homogeneous: Option<HomogeneousPair>,
    pub two_join: Option<TwoJoin>,
    pub complement_two_join: Option<TwoJoin>,
}

impl DecompositionReport {
    pub fn case(&self) -> DecompositionCase {
        if self.basic.is_basic() {
            DecompositionCase::Basic
        } else if self.skew.is_some() {
            DecompositionCase::SkewPartition
        } else if self.homogeneous.is_some() {
            DecompositionCase::HomogeneousPair
        } else if self.two_join.is_some() {
            DecompositionCase::TwoJoinInGraph
        } else if self.complement_two_join.is_some() {
            DecompositionCase::TwoJoinInComplement
        } else {
            DecompositionCase::NoneFound
        }
    }
}

/// Evaluates the decomposition disjunction on a Berge graph.
pub fn decomposition_report(g: &Graph, limits: &Limits) -> Result<DecompositionReport> {
    let report = is_berge(g, limits)?;
    if !report.berge {
        return Err(Error::invalid("decomposition report requires a Berge graph"));
    }
    Ok(DecompositionReport {
        basic: crate::basic::recognize_basic(g),
        skew: find_skew_partition(g, limits)?,
        homogeneous: find_homogeneous_pair(g, limits, HomogeneousPairOptions::default())?,
        two_join: find_two_join(g),
        complement_two_join: find_two_join(&g.complement()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareFreeCase {
    Bipartite,
    LineOfBipartite,
    TwoJoin,
    StarCutset,
}

impl SquareFreeCase {
    pub fn tag(&self) -> &'static str {
        match self {
            SquareFreeCase::Bipartite => "bipartite",
            SquareFreeCase::LineOfBipartite => "line_of_bipartite",
            SquareFreeCase::TwoJoin => "two_join",
            SquareFreeCase::StarCutset => "star_cutset",
        }
    }
}

/// Disjunction for square-free Berge graphs: bipartite, line graph of
/// a bipartite graph, 2-join, or star cutset.
#[derive(Debug, Clone)]
pub struct SquareFreeReport {
    pub bipartite: Option<Bipartition>,
    pub line_of_bipartite: Option<LineRoot>,
    pub two_join: Option<TwoJoin>,
    pub star_cutset: Option<StarCutset>,
}

impl SquareFreeReport {
    pub fn case(&self) -> Option<SquareFreeCase> {
        if self.bipartite.is_some() {
            Some(SquareFreeCase::Bipartite)
        } else if self.line_of_bipartite.is_some() {
            Some(SquareFreeCase::LineOfBipartite)
        } else if self.two_join.is_some() {
            Some(SquareFreeCase::TwoJoin)
        } else if self.star_cutset.is_some() {
            Some(SquareFreeCase::StarCutset)
        } else {
            None
        }
    }
}

/// True iff `g` has a hole of length exactly four.
pub fn has_four_hole(g: &Graph) -> bool {
    let mut found = false;
    g.for_each_hole(|cycle| {
        if cycle.len() == 4 {
            found = true;
            false
        } else {
            true
        }
    });
    found
}

pub fn square_free_report(g: &Graph, limits: &Limits) -> Result<SquareFreeReport> {
    let report = is_berge(g, limits)?;
    if !report.berge {
        return Err(Error::invalid("square-free report requires a Berge graph"));
    }
    if has_four_hole(g) {
        return Err(Error::invalid("square-free report requires no 4-hole"));
    }
    let out = SquareFreeReport {
        bipartite: g.is_bipartite(),
        line_of_bipartite: line_of_bipartite_root(g),
        two_join: find_two_join(g),
        star_cutset: find_star_cutset(g),
    };
    if out.case().is_none() {
        return Err(Error::InternalInconsistency {
            context: "square-free decomposition",
            detail: "no disjunct holds for a square-free Berge graph".into(),
            instance: g.encode(),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OddHoleFreeCase {
    Bipartite,
    LineOfBipartite,
    ComplementOfLineOfBipartite,
    DoubleStarCutset,
    TwoJoin,
}

impl OddHoleFreeCase {
    pub fn tag(&self) -> &'static str {
        match self {
            OddHoleFreeCase::Bipartite => "bipartite",
            OddHoleFreeCase::LineOfBipartite => "line_of_bipartite",
            OddHoleFreeCase::ComplementOfLineOfBipartite => "complement_of_line_of_bipartite",
            OddHoleFreeCase::DoubleStarCutset => "double_star_cutset",
            OddHoleFreeCase::TwoJoin => "two_join",
        }
    }
}

/// Disjunction for odd-hole-free graphs (a strictly larger class than
/// Berge): bipartite, line of bipartite, complement of line of
/// bipartite, double star cutset, or 2-join.
#[derive(Debug, Clone)]
pub struct OddHoleFreeReport {
    pub bipartite: Option<Bipartition>,
    pub line_of_bipartite: Option<LineRoot>,
    pub complement_line_of_bipartite: Option<LineRoot>,
    pub double_star_cutset: Option<DoubleStarCutset>,
    pub two_join: Option<TwoJoin>,
}

impl OddHoleFreeReport {
    pub fn case(&self) -> Option<OddHoleFreeCase> {
        if self.bipartite.is_some() {
            Some(OddHoleFreeCase::Bipartite)
        } else if self.line_of_bipartite.is_some() {
            Some(OddHoleFreeCase::LineOfBipartite)
        } else if self.complement_line_of_bipartite.is_some() {
            Some(OddHoleFreeCase::ComplementOfLineOfBipartite)
        } else if self.double_star_cutset.is_some() {
            Some(OddHoleFreeCase::DoubleStarCutset)
        } else if self.two_join.is_some() {
            Some(OddHoleFreeCase::TwoJoin)
        } else {
            None
        }
    }
}

pub fn odd_hole_free_report(g: &Graph, limits: &Limits) -> Result<OddHoleFreeReport> {
    if g.n() > limits.berge {
        return Err(Error::ResourceLimit {
            what: "odd-hole-free scan",
            n: g.n(),
            limit: limits.berge,
        });
    }
    if let Some(hole) = g.find_hole(HoleParity::Odd, 5) {
        return Err(Error::invalid(format!(
            "graph has the odd hole {:?}",
            hole.vertices
        )));
    }
    let out = OddHoleFreeReport {
        bipartite: g.is_bipartite(),
        line_of_bipartite: line_of_bipartite_root(g),
        complement_line_of_bipartite: line_of_bipartite_root(&g.complement()),
        double_star_cutset: find_double_star_cutset(g),
        two_join: find_two_join(g),
    };
    if out.case().is_none() {
        return Err(Error::InternalInconsistency {
            context: "odd-hole-free decomposition",
            detail: "no disjunct holds for an odd-hole-free graph".into(),
            instance: g.encode(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn berge_cases() {
        let r = is_berge(&Graph::cycle(5), &limits()).unwrap();
        assert!(!r.berge);
        assert!(matches!(r.witness, Some(OddHoleWitness::Hole(_))));

        assert!(is_berge(&Graph::cycle(6), &limits()).unwrap().berge);

        let r = is_berge(&Graph::cycle(7).complement(), &limits()).unwrap();
        assert!(!r.berge);
        assert!(matches!(r.witness, Some(OddHoleWitness::Antihole(_))));
    }

    fn five_vertex_instance() -> WonderfulInstance {
        // Path u=0, u'=1, v'=2, v=3 plus s=4 adjacent to u, u', v.
        let mut g = Graph::empty(5);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 3)] {
            g.add_edge(u, v);
        }
        WonderfulInstance {
            graph: g,
            s: VertexSet::from_iter(5, [4]),
            path: Path::new(vec![0, 1, 2, 3]),
        }
    }

    #[test]
    fn wonderful_five_vertex_instance() {
        let inst = five_vertex_instance();
        let outcome = wonderful_check(&inst, &limits()).unwrap();
        // Exactly one saturated edge (u u'), so (i) holds.
        assert_eq!(outcome.saturated_edges, 1);
        assert!(outcome.parity_holds);
    }

    #[test]
    fn wonderful_rejects_non_berge() {
        // s adjacent only to the two ends turns the graph into C5.
        let mut g = Graph::empty(5);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (4, 0), (4, 3)] {
            g.add_edge(u, v);
        }
        let inst = WonderfulInstance {
            graph: g,
            s: VertexSet::from_iter(5, [4]),
            path: Path::new(vec![0, 1, 2, 3]),
        };
        assert!(wonderful_check(&inst, &limits()).is_err());
    }

    #[test]
    fn wonderful_instances_are_found_and_pass() {
        let inst = five_vertex_instance();
        let found = wonderful_instances(&inst.graph, &limits()).unwrap();
        assert!(!found.is_empty());
        for inst in &found {
            let outcome = wonderful_check(inst, &limits()).unwrap();
            assert!(outcome.any_holds());
        }
    }

    #[test]
    fn decomposition_cases() {
        let r = decomposition_report(&Graph::cycle(6), &limits()).unwrap();
        assert_eq!(r.case(), DecompositionCase::Basic);

        let (lg, _) = crate::basic::line_graph(&Graph::complete_bipartite(3, 3));
        let r = decomposition_report(&lg, &limits()).unwrap();
        assert_eq!(r.case(), DecompositionCase::Basic);

        assert!(decomposition_report(&Graph::cycle(5), &limits()).is_err());
    }

    #[test]
    fn square_free_cases() {
        // C6 has no 4-hole and is bipartite.
        let r = square_free_report(&Graph::cycle(6), &limits()).unwrap();
        assert_eq!(r.case(), Some(SquareFreeCase::Bipartite));

        assert!(square_free_report(&Graph::cycle(7), &limits()).is_err());

        // C4 itself is a square.
        assert!(square_free_report(&Graph::cycle(4), &limits()).is_err());
    }

    #[test]
    fn odd_hole_free_cases() {
        assert!(odd_hole_free_report(&Graph::cycle(5), &limits()).is_err());

        // The complement of C7 is odd-hole-free (its holes are even)
        // and has a double star cutset.
        let anti7 = Graph::cycle(7).complement();
        let r = odd_hole_free_report(&anti7, &limits()).unwrap();
        assert_eq!(r.case(), Some(OddHoleFreeCase::DoubleStarCutset));
    }

    #[test]
    fn four_hole_detection() {
        assert!(has_four_hole(&Graph::cycle(4)));
        assert!(!has_four_hole(&Graph::cycle(6)));
        assert!(has_four_hole(&Graph::cycle(7).complement()));
    }
}
