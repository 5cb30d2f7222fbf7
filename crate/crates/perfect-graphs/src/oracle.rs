//! Exact exponential-time solvers: clique number, stability number,
//! chromatic number, perfection tests, the Lovász bound, and
//! Gasparyan's certificate construction for minimally imperfect graphs.
//!
//! Two independent exact engines live here and cross-check each other
//! in the test suite:
//!
//! - branch-and-bound: maximum clique by pivoted Bron–Kerbosch, and
//!   k-colorability by DSATUR-ordered search seeded with a maximum
//!   clique (the clique forces distinct colors);
//! - per-subset dynamic programming over all induced subgraphs, which
//!   powers the all-subgraph scans (`is_perfect`, `lovasz_bound_holds`)
//!   in O(3^n) total instead of one solver call per subset.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Limits;

/// A proper vertex coloring; every vertex gets a color in `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Self {
        let num_colors = assignment.iter().copied().max().map_or(0, |m| m + 1);
        Coloring {
            assignment,
            num_colors,
        }
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.num_colors];
        for &c in &self.assignment {
            seen[c] = true;
        }
        seen.iter().filter(|&&b| b).count()
    }

    pub fn class(&self, color: usize) -> VertexSet {
        VertexSet::from_iter(
            self.assignment.len(),
            self.assignment
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c == color)
                .map(|(v, _)| v),
        )
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.assignment.len() != g.n() {
            return Err(Error::invalid("coloring does not cover every vertex"));
        }
        for (u, v) in g.edges() {
            if self.assignment[u] == self.assignment[v] {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) is monochromatic"
                )));
            }
        }
        if self.assignment.iter().any(|&c| c >= self.num_colors) {
            return Err(Error::invalid("color index out of range"));
        }
        Ok(())
    }
}

fn check_limit(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::ResourceLimit { what, n, limit })
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------
// Branch and bound engines
// ---------------------------------------------------------------------

/// Maximum clique by Bron–Kerbosch with pivoting. Deterministic: the
/// first maximum found under ascending candidate order wins.
pub(crate) fn max_clique_raw(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut best = VertexSet::empty(n);
    let mut current = VertexSet::empty(n);
    bron_kerbosch(
        g,
        &mut current,
        VertexSet::full(n),
        VertexSet::empty(n),
        &mut best,
    );
    best
}

fn bron_kerbosch(
    g: &Graph,
    current: &mut VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    best: &mut VertexSet,
) {
    if current.len() + candidates.len() <= best.len() {
        return;
    }
    if candidates.is_empty() {
        if excluded.is_empty() && current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    let pivot = candidates
        .union(&excluded)
        .iter()
        .max_by_key(|&u| (candidates.intersection_len(g.neighbors(u)), usize::MAX - u))
        .unwrap();
    let branch = candidates.difference(g.neighbors(pivot));
    for v in branch.iter() {
        current.insert(v);
        bron_kerbosch(
            g,
            current,
            candidates.intersection(g.neighbors(v)),
            excluded.intersection(g.neighbors(v)),
            best,
        );
        current.remove(v);
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// All maximal cliques, ascending discovery order.
pub(crate) fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut out = Vec::new();
    let mut current = VertexSet::empty(n);
    all_cliques(
        g,
        &mut current,
        VertexSet::full(n),
        VertexSet::empty(n),
        &mut out,
    );
    out
}

fn all_cliques(
    g: &Graph,
    current: &mut VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    let pivot = candidates
        .union(&excluded)
        .iter()
        .max_by_key(|&u| (candidates.intersection_len(g.neighbors(u)), usize::MAX - u))
        .unwrap();
    let branch = candidates.difference(g.neighbors(pivot));
    for v in branch.iter() {
        current.insert(v);
        all_cliques(
            g,
            current,
            candidates.intersection(g.neighbors(v)),
            excluded.intersection(g.neighbors(v)),
            out,
        );
        current.remove(v);
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// Proper coloring with at most `k` colors, or `None` if impossible.
/// DSATUR-ordered branch and bound seeded with a maximum clique.
pub(crate) fn k_color_raw(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let clique = max_clique_raw(g);
    if clique.len() > k {
        return None;
    }
    let mut colors = vec![usize::MAX; n];
    let mut used = 0;
    for (c, v) in clique.iter().enumerate() {
        colors[v] = c;
        used = used.max(c + 1);
    }
    if dsatur(g, &mut colors, k, used, n - clique.len()) {
        Some(colors)
    } else {
        None
    }
}

fn dsatur(g: &Graph, colors: &mut [usize], k: usize, used: usize, remaining: usize) -> bool {
    if remaining == 0 {
        return true;
    }
    // Most saturated uncolored vertex; ties by degree, then index.
    let mut pick = usize::MAX;
    let mut pick_key = (0usize, 0usize);
    let mut pick_mask = 0u128;
    for v in 0..g.n() {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut mask = 0u128;
        for u in g.neighbors(v).iter() {
            if colors[u] != usize::MAX {
                mask |= 1 << colors[u].min(127);
            }
        }
        let key = (mask.count_ones() as usize, g.degree(v));
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
            pick_mask = mask;
        }
    }
    let limit = k.min(used + 1);
    for c in 0..limit {
        if pick_mask >> c.min(127) & 1 == 1 {
            continue;
        }
        colors[pick] = c;
        if dsatur(g, colors, k, used.max(c + 1), remaining - 1) {
            return true;
        }
        colors[pick] = usize::MAX;
    }
    false
}

// ---------------------------------------------------------------------
// Public oracle operations
// ---------------------------------------------------------------------

/// Exact clique number with one maximum clique as witness.
pub fn clique_number(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    check_limit("exact solver", g.n(), limits.exact)?;
    let w = max_clique_raw(g);
    Ok((w.len(), w))
}

/// Exact stability number, computed on the complement.
pub fn stability_number(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    check_limit("exact solver", g.n(), limits.exact)?;
    let w = max_clique_raw(&g.complement());
    Ok((w.len(), w))
}

/// Exact chromatic number plus a witness coloring using exactly that
/// many colors.
pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<(usize, Coloring)> {
    check_limit("exact solver", g.n(), limits.exact)?;
    if g.n() == 0 {
        return Ok((0, Coloring::new(Vec::new())));
    }
    let lower = max_clique_raw(g).len();
    for k in lower..=g.n() {
        if let Some(assignment) = k_color_raw(g, k) {
            let coloring = Coloring::new(assignment);
            debug_assert!(coloring.validate(g).is_ok());
            return Ok((k, coloring));
        }
    }
    unreachable!("a graph on n vertices is always n-colorable")
}

/// Proper coloring with at most `k` colors if one exists.
pub fn color_with_k(g: &Graph, k: usize, limits: &Limits) -> Result<Option<Coloring>> {
    check_limit("exact solver", g.n(), limits.exact)?;
    Ok(k_color_raw(g, k).map(|a| {
        let c = Coloring::new(a);
        debug_assert!(c.validate(g).is_ok());
        c
    }))
}

// ---------------------------------------------------------------------
// Per-subset tables
// ---------------------------------------------------------------------

/// Exact omega and chi for every induced subgraph, indexed by vertex
/// bitmask. chi is computed by the stable-set cover recurrence
/// `chi(S) = 1 + min chi(S \ T)` over stable `T` containing the lowest
/// vertex of `S`; total work is O(3^n).
pub(crate) struct SubsetTables {
    pub n: usize,
    pub omega: Vec<u8>,
    pub chi: Vec<u8>,
}

impl SubsetTables {
    pub fn build(g: &Graph) -> SubsetTables {
        let n = g.n();
        assert!(n <= 26, "subset tables support at most 26 vertices");
        let nbr: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
            .collect();
        let size = 1usize << n;
        let mut omega = vec![0u8; size];
        let mut stable = vec![false; size];
        let mut chi = vec![0u8; size];
        stable[0] = true;
        for mask in 1..size {
            let v = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            omega[mask] = omega[rest].max(1 + omega[mask & nbr[v] as usize]);
            stable[mask] = stable[rest] && mask & nbr[v] as usize == 0;
            // Stable sets through v: subsets of v's non-neighbors in mask.
            let candidates = rest & !(nbr[v] as usize);
            let mut best = u8::MAX;
            let mut sub = candidates;
            loop {
                if stable[sub] {
                    let without = mask & !(sub | (1 << v));
                    best = best.min(1 + chi[without]);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & candidates;
            }
            chi[mask] = best;
        }
        SubsetTables { n, omega, chi }
    }

    /// Masks in (cardinality, lexicographic-vertex-list) order, so the
    /// first reported violator is minimal by size, then lexicographic.
    pub fn masks_by_size(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).flat_map(move |size| CombinationMasks::new(self.n, size))
    }
}

/// Iterator over all `size`-subsets of `0..n` as bitmasks, in
/// lexicographic order of the sorted vertex lists.
struct CombinationMasks {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl CombinationMasks {
    fn new(n: usize, size: usize) -> Self {
        CombinationMasks {
            n,
            idx: (0..size).collect(),
            done: size > n || size == 0,
        }
    }
}

impl Iterator for CombinationMasks {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0usize, |m, &i| m | 1 << i);
        // Advance to the next combination.
        let size = self.idx.len();
        let mut i = size;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - size + i {
                self.idx[i] += 1;
                for j in i + 1..size {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    }
}

/// Result of a perfection scan. When imperfect, the witness is the
/// smallest violating vertex set (by size, then lexicographic), so a
/// minimally imperfect graph is recognized by `witness == full set`.
#[derive(Debug, Clone)]
pub struct PerfectionReport {
    pub perfect: bool,
    pub witness: Option<VertexSet>,
}

/// True iff every induced subgraph `H` satisfies chi(H) = omega(H).
pub fn is_perfect(g: &Graph, limits: &Limits) -> Result<PerfectionReport> {
    check_limit("perfection scan", g.n(), limits.perfect)?;
    let t = SubsetTables::build(g);
    for mask in t.masks_by_size() {
        if t.chi[mask] != t.omega[mask] {
            let witness = VertexSet::from_iter(g.n(), (0..g.n()).filter(|&v| mask >> v & 1 == 1));
            return Ok(PerfectionReport {
                perfect: false,
                witness: Some(witness),
            });
        }
    }
    Ok(PerfectionReport {
        perfect: true,
        witness: None,
    })
}

/// True iff `g` is imperfect but every proper induced subgraph is
/// perfect; equivalently, the minimal violator is the whole vertex set.
pub fn is_minimally_imperfect(g: &Graph, limits: &Limits) -> Result<bool> {
    let report = is_perfect(g, limits)?;
    Ok(match report.witness {
        Some(w) => w.len() == g.n(),
        None => false,
    })
}

/// True iff every induced subgraph `H` satisfies |V(H)| <= alpha(H) * omega(H).
pub fn lovasz_bound_holds(g: &Graph, limits: &Limits) -> Result<bool> {
    check_limit("perfection scan", g.n(), limits.perfect)?;
    let t = SubsetTables::build(g);
    let tc = SubsetTables::build(&g.complement());
    let size = 1usize << g.n();
    for mask in 1..size {
        let vertices = mask.count_ones() as usize;
        let alpha = tc.omega[mask] as usize;
        let omega = t.omega[mask] as usize;
        if vertices > alpha * omega {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------
// Gasparyan certificate
// ---------------------------------------------------------------------

/// The stable-set and clique system from Gasparyan's proof of the
/// Lovász bound: `alpha*omega + 1` stable sets `A_i` and omega-cliques
/// `B_i` of a minimally imperfect graph with `A·Bᵀ = J − I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GasparyanCertificate {
    pub alpha: usize,
    pub omega: usize,
    pub stable_sets: Vec<VertexSet>,
    pub cliques: Vec<VertexSet>,
}

impl GasparyanCertificate {
    /// Re-checks every defining property against `g`, independently of
    /// how the certificate was produced.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let rows = self.alpha * self.omega + 1;
        if self.stable_sets.len() != rows || self.cliques.len() != rows {
            return Err(Error::invalid(format!(
                "expected {rows} stable sets and cliques, found {} and {}",
                self.stable_sets.len(),
                self.cliques.len()
            )));
        }
        if g.n() < rows {
            return Err(Error::invalid("graph has fewer vertices than alpha*omega + 1"));
        }
        for (i, a) in self.stable_sets.iter().enumerate() {
            for u in a.iter() {
                for v in a.iter() {
                    if u < v && g.has_edge(u, v) {
                        return Err(Error::invalid(format!("A_{i} is not stable")));
                    }
                }
            }
        }
        for (i, b) in self.cliques.iter().enumerate() {
            if b.len() != self.omega {
                return Err(Error::invalid(format!("B_{i} is not an omega-clique")));
            }
            for u in b.iter() {
                for v in b.iter() {
                    if u < v && !g.has_edge(u, v) {
                        return Err(Error::invalid(format!("B_{i} is not a clique")));
                    }
                }
            }
        }
        for (i, a) in self.stable_sets.iter().enumerate() {
            for (j, b) in self.cliques.iter().enumerate() {
                let want = if i == j { 0 } else { 1 };
                let got = a.intersection_len(b);
                if got != want {
                    return Err(Error::invalid(format!(
                        "matrix identity fails at ({i}, {j}): |A_i ∩ B_j| = {got}, expected {want}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Plain-text form, one record per line, checkable by hand or by an
    /// independent program.
    pub fn to_text(&self) -> String {
        let mut out = String::from("gasparyan-certificate v1\n");
        out.push_str(&format!("alpha {}\nomega {}\n", self.alpha, self.omega));
        for a in &self.stable_sets {
            let items: Vec<String> = a.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("stable {}\n", items.join(" ")));
        }
        for b in &self.cliques {
            let items: Vec<String> = b.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("clique {}\n", items.join(" ")));
        }
        out
    }

    /// Parses the output of [`GasparyanCertificate::to_text`]. `n` is
    /// the vertex count of the graph the certificate talks about.
    pub fn from_text(text: &str, n: usize) -> Result<Self> {
        let mut alpha = None;
        let mut omega = None;
        let mut stable_sets = Vec::new();
        let mut cliques = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with("gasparyan-certificate") {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let key = tokens.next().unwrap();
            let parse_set = |tokens: std::str::SplitWhitespace| -> Result<VertexSet> {
                let mut s = VertexSet::empty(n);
                for t in tokens {
                    let v: usize = t.parse().map_err(|_| Error::Parse {
                        line: lineno + 1,
                        msg: format!("bad vertex {t:?}"),
                    })?;
                    if v >= n {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: format!("vertex {v} out of range"),
                        });
                    }
                    s.insert(v);
                }
                Ok(s)
            };
            match key {
                "alpha" => alpha = tokens.next().and_then(|t| t.parse().ok()),
                "omega" => omega = tokens.next().and_then(|t| t.parse().ok()),
                "stable" => stable_sets.push(parse_set(tokens)?),
                "clique" => cliques.push(parse_set(tokens)?),
                other => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("unknown record {other:?}"),
                    })
                }
            }
        }
        match (alpha, omega) {
            (Some(alpha), Some(omega)) => Ok(GasparyanCertificate {
                alpha,
                omega,
                stable_sets,
                cliques,
            }),
            _ => Err(Error::invalid("certificate missing alpha or omega")),
        }
    }
}

/// Builds the certificate by following the proof recipe: fix a maximum
/// stable set `A_0`, omega-color each `g \ s` for `s` in `A_0` (the
/// color classes are `A_1..A_{alpha*omega}`), then pick an omega-clique
/// of `g \ A_i` for each `i`. Every asserted property is re-verified at
/// runtime; a failure means an oracle bug, not a property of the input.
pub fn gasparyan_certificate(g: &Graph, limits: &Limits) -> Result<GasparyanCertificate> {
    if !is_minimally_imperfect(g, limits)? {
        return Err(Error::invalid(
            "gasparyan certificate requires a minimally imperfect graph",
        ));
    }
    let n = g.n();
    let inconsistency = |detail: String| Error::InternalInconsistency {
        context: "gasparyan construction",
        detail,
        instance: g.encode(),
    };

    let (omega, _) = clique_number(g, limits)?;
    let (alpha, _) = stability_number(g, limits)?;

    // Lexicographically smallest maximum stable set.
    let tables = SubsetTables::build(&g.complement());
    let a0 = tables
        .masks_by_size()
        .find(|&mask| mask.count_ones() as usize == alpha && tables.omega[mask] as usize == alpha)
        .map(|mask| VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1)))
        .ok_or_else(|| inconsistency("no maximum stable set found".into()))?;

    let mut stable_sets = vec![a0.clone()];
    for s in a0.iter() {
        let mut keep = VertexSet::full(n);
        keep.remove(s);
        let (sub, map) = g.induced(&keep);
        let assignment = k_color_raw(&sub, omega)
            .ok_or_else(|| inconsistency(format!("g \\ {s} admits no {omega}-coloring")))?;
        for color in 0..omega {
            let class = VertexSet::from_iter(
                n,
                assignment
                    .iter()
                    .enumerate()
                    .filter(|&(_, &c)| c == color)
                    .map(|(i, _)| map[i]),
            );
            if class.is_empty() {
                return Err(inconsistency(format!(
                    "coloring of g \\ {s} left color {color} unused"
                )));
            }
            stable_sets.push(class);
        }
    }
    if stable_sets.len() != alpha * omega + 1 {
        return Err(inconsistency("wrong number of stable sets".into()));
    }

    let mut cliques = Vec::with_capacity(stable_sets.len());
    for (i, a) in stable_sets.iter().enumerate() {
        let keep = a.complement();
        let (sub, map) = g.induced(&keep);
        let clique = max_clique_raw(&sub);
        if clique.len() != omega {
            return Err(inconsistency(format!(
                "g \\ A_{i} has clique number {} instead of {omega}",
                clique.len()
            )));
        }
        cliques.push(VertexSet::from_iter(n, clique.iter().map(|v| map[v])));
    }

    let certificate = GasparyanCertificate {
        alpha,
        omega,
        stable_sets,
        cliques,
    };
    certificate
        .verify(g)
        .map_err(|e| inconsistency(format!("certificate failed verification: {e}")))?;

    // Every omega-clique of g must intersect all but exactly one A_i.
    for clique in maximal_cliques(g) {
        if clique.len() != omega {
            continue;
        }
        let missed = certificate
            .stable_sets
            .iter()
            .filter(|a| !a.intersects(&clique))
            .count();
        if missed != 1 {
            return Err(inconsistency(format!(
                "omega-clique {:?} misses {missed} stable sets instead of 1",
                clique.to_vec()
            )));
        }
    }
    Ok(certificate)
}
