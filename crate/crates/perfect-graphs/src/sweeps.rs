//! Theorem sweeps: seeded or exhaustive populations of small graphs
//! run against the executable theorem statements. The CLI `sweep`
//! subcommand and the acceptance suite both drive these functions.
//!
//! Sweeps fan out across worker threads; every sample derives its own
//! RNG from the master seed and its index, so results are identical
//! under any thread count and failures are reported in sample order.

use rand::Rng;

use crate::basic::{color_basic, line_graph, BasicClass};
use crate::berge::{
    decomposition_report, is_berge, odd_hole_free_report, square_free_report, wonderful_check,
    wonderful_instances, DecompositionCase,
};
use crate::decompose::{
    block_coloring, combine_colorings, perfect_color, replicate, replicate_minus_edge,
    two_join_blocks, PerfectionHandling,
};
use crate::error::Result;
use crate::generate::{random_berge, random_bipartite, random_graph, rng_for};
use crate::graph::{Graph, HoleParity};
use crate::oracle::{chromatic_number, clique_number, is_perfect, lovasz_bound_holds};
use crate::structure::{
    find_homogeneous_pair, find_six_join, find_skew_partition, find_two_join,
    HomogeneousPairOptions,
};
use crate::Limits;

/// Result of one sweep: how many graphs were examined, how many
/// individual checks ran, and an encoded description of every failure.
#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    pub samples: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: SweepOutcome) {
        self.samples += other.samples;
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |p| p.get())
}

/// Maps `f` over `0..count` on `threads` workers, preserving order.
fn parallel_map<T: Send>(count: usize, threads: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    let threads = threads.clamp(1, count.max(1));
    let chunk = count.div_ceil(threads);
    let mut results: Vec<Option<T>> = (0..count).map(|_| None).collect();
    std::thread::scope(|scope| {
        for (t, slice) in results.chunks_mut(chunk.max(1)).enumerate() {
            let f = &f;
            let base = t * chunk.max(1);
            scope.spawn(move || {
                for (i, slot) in slice.iter_mut().enumerate() {
                    *slot = Some(f(base + i));
                }
            });
        }
    });
    results.into_iter().map(|r| r.expect("worker filled slot")).collect()
}

fn gather(samples: usize, per_sample_checks: usize, failures: Vec<Vec<String>>) -> SweepOutcome {
    SweepOutcome {
        samples,
        checked: samples * per_sample_checks,
        failures: failures.into_iter().flatten().collect(),
    }
}

/// All labelled graphs on `n` vertices, one per edge bitmask.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

pub fn edge_slots(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

// ---------------------------------------------------------------------
// Perfect graph theorem and the Lovász bound
// ---------------------------------------------------------------------

fn pgt_check(g: &Graph, limits: &Limits) -> Result<Option<String>> {
    let direct = is_perfect(g, limits)?.perfect;
    let complement = is_perfect(&g.complement(), limits)?.perfect;
    let lovasz = lovasz_bound_holds(g, limits)?;
    if direct != complement || direct != lovasz {
        return Ok(Some(format!(
            "{}: perfect={direct}, complement_perfect={complement}, lovasz={lovasz}",
            g.encode()
        )));
    }
    Ok(None)
}

/// Exhaustive check of `perfect(g) == perfect(complement) ==
/// lovasz_bound(g)` over all labelled graphs on `n` vertices.
pub fn sweep_pgt_exhaustive(n: usize, limits: &Limits, threads: usize) -> SweepOutcome {
    let count = 1usize << edge_slots(n);
    let failures = parallel_map(count, threads, |mask| {
        let g = graph_from_mask(n, mask as u64);
        match pgt_check(&g, limits) {
            Ok(Some(f)) => vec![f],
            Ok(None) => vec![],
            Err(e) => vec![format!("{}: {e}", g.encode())],
        }
    });
    gather(count, 3, failures)
}

/// Seeded random version of the same equivalence at one size.
pub fn sweep_pgt_sampled(
    n: usize,
    samples: usize,
    seed: u64,
    limits: &Limits,
    threads: usize,
) -> SweepOutcome {
    let failures = parallel_map(samples, threads, |idx| {
        let mut rng = rng_for(seed, idx as u64);
        let density = [0.25, 0.5, 0.75][idx % 3];
        let g = random_graph(&mut rng, n, density);
        match pgt_check(&g, limits) {
            Ok(Some(f)) => vec![f],
            Ok(None) => vec![],
            Err(e) => vec![format!("{}: {e}", g.encode())],
        }
    });
    gather(samples, 3, failures)
}

// ---------------------------------------------------------------------
// Strong perfect graph theorem at desk scale
// ---------------------------------------------------------------------

fn spgt_check(g: &Graph, limits: &Limits) -> Result<Option<String>> {
    let perfect = is_perfect(g, limits)?.perfect;
    let berge = is_berge(g, limits)?.berge;
    if perfect != berge {
        return Ok(Some(format!(
            "{}: perfect={perfect} but berge={berge}",
            g.encode()
        )));
    }
    Ok(None)
}

pub fn sweep_spgt_exhaustive(n: usize, limits: &Limits, threads: usize) -> SweepOutcome {
    let count = 1usize << edge_slots(n);
    let failures = parallel_map(count, threads, |mask| {
        let g = graph_from_mask(n, mask as u64);
        match spgt_check(&g, limits) {
            Ok(Some(f)) => vec![f],
            Ok(None) => vec![],
            Err(e) => vec![format!("{}: {e}", g.encode())],
        }
    });
    gather(count, 1, failures)
}

pub fn sweep_spgt_sampled(
    n: usize,
    samples: usize,
    seed: u64,
    limits: &Limits,
    threads: usize,
) -> SweepOutcome {
    let failures = parallel_map(samples, threads, |idx| {
        let mut rng = rng_for(seed, idx as u64);
        let density = [0.25, 0.5, 0.75][idx % 3];
        let g = random_graph(&mut rng, n, density);
        match spgt_check(&g, limits) {
            Ok(Some(f)) => vec![f],
            Ok(None) => vec![],
            Err(e) => vec![format!("{}: {e}", g.encode())],
        }
    });
    gather(samples, 1, failures)
}

// ---------------------------------------------------------------------
// Decomposition theorem
// ---------------------------------------------------------------------

/// Sampled Berge graphs must never report `none_found`.
pub fn sweep_decomposition(
    sizes: &[usize],
    samples: usize,
    seed: u64,
    limits: &Limits,
    threads: usize,
) -> SweepOutcome {
    let failures = parallel_map(samples, threads, |idx| {
        let mut rng = rng_for(seed, idx as u64);
        let n = sizes[idx % sizes.len()];
        let density = [0.3, 0.5, 0.7][idx % 3];
        let g = match random_berge(&mut rng, n, density, limits) {
            Ok(g) => g,
            Err(e) => return vec![format!("sampling failed: {e}")],
        };
        match decomposition_report(&g, limits) {
            Ok(report) => {
                if report.case() == DecompositionCase::NoneFound {
                    vec![format!("{}: none_found", g.encode())]
                } else {
                    vec![]
                }
            }
            Err(e) => vec![format!("{}: {e}", g.encode())],
        }
    });
    gather(samples, 1, failures)
}

// ---------------------------------------------------------------------
// Wonderful lemma
// ---------------------------------------------------------------------

/// Scans sampled Berge graphs for hypothesis-satisfying instances and
/// checks every one, growing the sample until `min_instances` have
/// been seen (or `max_samples` graphs examined).
pub fn sweep_wonderful(
    sizes: &[usize],
    min_instances: usize,
    max_samples: usize,
    seed: u64,
    limits: &Limits,
    threads: usize,
) -> SweepOutcome {
    let batch = 256;
    let mut outcome = SweepOutcome::default();
    let mut offset = 0usize;
    while outcome.checked < min_instances && outcome.samples < max_samples {
        let this_batch = batch.min(max_samples - outcome.samples);
        let results = parallel_map(this_batch, threads, |i| {
            let idx = offset + i;
            let mut rng = rng_for(seed, idx as u64);
            let n = sizes[idx % sizes.len()];
            let density = [0.35, 0.5, 0.65][idx % 3];
            let g = match random_berge(&mut rng, n, density, limits) {
                Ok(g) => g,
                Err(e) => {
                    return SweepOutcome {
                        samples: 1,
                        checked: 0,
                        failures: vec![format!("sampling failed: {e}")],
                    }
                }
            };
            let mut local = SweepOutcome {
                samples: 1,
                ..Default::default()
            };
            match wonderful_instances(&g, limits) {
                Ok(instances) => {
                    for inst in instances {
                        local.checked += 1;
                        match wonderful_check(&inst, limits) {
                            Ok(out) if out.any_holds() => {}
                            Ok(_) => local.failures.push(format!(
                                "{}: no alternative holds",
                                g.encode()
                            )),
                            Err(e) => local.failures.push(format!("{}: {e}", g.encode())),
                        }
                    }
                }
                Err(e) => local.failures.push(format!("{}: {e}", g.encode())),
            }
            local
        });
        for r in results {
            outcome.absorb(r);
        }
        offset += this_batch;
    }
    outcome
}

// ---------------------------------------------------------------------
// Square-free and odd-hole-free decompositions
// ---------------------------------------------------------------------

pub fn sweep_square_free(
    sizes: &[usize],
    samples: usize,
    seed: u64,
    limits: &Limits,
    threads: usize,
) -> SweepOutcome {
    let failures = parallel_map(samples, threads, |idx| {
        let mut rng = rng_for(seed, idx as u64);
        let n = sizes[idx % sizes.len()];
        let density = [0.2, 0.35, 0.5][idx % 3];
        // Rejection sampling for square-free Berge graphs.
        let g = loop {
            let g = random_graph(&mut rng, n, density);
            let berge = match is_berge(&g, limits) {
                Ok(r) => r.berge,
                Err(e) => return vec![format!("sampling failed: {e}")],
            };
            if berge && !crate::berge::has_four_hole(&g) {
                break g;
            }
        };
        match square_free_report(&g, limits) {
            Ok(report) => {
                debug_assert!(report.case().is_some());
                vec![]
            }
            Err(e) => vec![format!("{}: {e}", g.encode())],
        }
    });
    gather(samples, 1, failures)
}

pub fn sweep_odd_hole_free(
    sizes: &[usize],
    samples: usize,
    seed: u64,
    limits: &Limits,
    threads: usize,
) -> SweepOutcome {
    let failures = parallel_map(samples, threads, |idx| {
        let mut rng = rng_for(seed, idx as u64);
        let n = sizes[idx % sizes.len()];
        let density = [0.3, 0.5, 0.7][idx % 3];
        let g = loop {
            let g = random_graph(&mut rng, n, density);
            if g.find_hole(HoleParity::Odd, 5).is_none() {
                break g;
            }
        };
        match odd_hole_free_report(&g, limits) {
            Ok(report) => {
                debug_assert!(report.case().is_some());
                vec![]
            }
            Err(e) => vec![format!("{}: {e}", g.encode())],
        }
    });
    gather(samples, 1, failures)
}

/// Berge graphs without proper wheels or stretchers (in the graph or
/// its complement) must be basic or have a skew partition. `checked`
/// counts the samples that satisfied the hypothesis.
pub fn sweep_no_proper_wheel(
    sizes: &[usize],
    samples: usize,
    seed: u64,
    limits: &Limits,
    threads: usize,
) -> SweepOutcome {
    let results = parallel_map(samples, threads, |idx| {
        let mut rng = rng_for(seed, idx as u64);
        let n = sizes[idx % sizes.len()];
        let density = [0.3, 0.5, 0.7][idx % 3];
        let mut local = SweepOutcome {
            samples: 1,
            ..Default::default()
        };
        let g = match random_berge(&mut rng, n, density, limits) {
            Ok(g) => g,
            Err(e) => {
                local.failures.push(format!("sampling failed: {e}"));
                return local;
            }
        };
        let hypothesis = (|| -> Result<bool> {
            let complement = g.complement();
            Ok(!crate::wheels::has_proper_wheel(&g, limits)?
                && !crate::wheels::has_proper_wheel(&complement, limits)?
                && crate::wheels::find_stretcher(&g, limits)?.is_none()
                && crate::wheels::find_stretcher(&complement, limits)?.is_none())
        })();
        match hypothesis {
            Ok(true) => {
                local.checked = 1;
                let basic = crate::basic::recognize_basic(&g).is_basic();
                let skew = match find_skew_partition(&g, limits) {
                    Ok(sp) => sp.is_some(),
                    Err(e) => {
                        local.failures.push(format!("{}: {e}", g.encode()));
                        return local;
                    }
                };
                if !basic && !skew {
                    local
                        .failures
                        .push(format!("{}: neither basic nor skew-partitioned", g.encode()));
                }
            }
            Ok(false) => {}
            Err(e) => local.failures.push(format!("{}: {e}", g.encode())),
        }
        local
    });
    let mut outcome = SweepOutcome::default();
    for r in results {
        outcome.absorb(r);
    }
    outcome
}

/// Both directions of the 2-join perfection theorem on random glued
/// graphs (sides of any perfection status): the composition is perfect
/// exactly when both blocks are.
pub fn sweep_theorem_three(
    samples: usize,
    max_side: usize,
    seed: u64,
    threads: usize,
) -> SweepOutcome {
    let failures = parallel_map(samples, threads, |idx| {
        let mut rng = rng_for(seed, idx as u64);
        let limits = Limits::at_least(2 * max_side);
        let n1 = rng.gen_range(3..=max_side);
        let n2 = rng.gen_range(3..=max_side);
        let density = rng.gen_range(0.2..0.8);
        let side1 = random_graph(&mut rng, n1, density);
        let side2 = random_graph(&mut rng, n2, density);
        let pick = |rng: &mut rand_chacha::ChaCha8Rng, n: usize| {
            let a = rng.gen_range(0..n);
            let b = (a + 1 + rng.gen_range(0..n - 1)) % n;
            (
                crate::graph::VertexSet::from_iter(n, [a]),
                crate::graph::VertexSet::from_iter(n, [b]),
            )
        };
        let (a1, b1) = pick(&mut rng, n1);
        let (a2, b2) = pick(&mut rng, n2);
        let (g, join) = match crate::generate::glue_two_join(&side1, &a1, &b1, &side2, &a2, &b2) {
            Ok(x) => x,
            Err(e) => return vec![format!("glue failed: {e}")],
        };
        let blocks = match two_join_blocks(&g, &join) {
            Ok(b) => b,
            Err(e) => return vec![format!("{}: {e}", g.encode())],
        };
        let whole = is_perfect(&g, &limits).map(|r| r.perfect);
        let first = is_perfect(&blocks.first.graph, &limits).map(|r| r.perfect);
        let second = is_perfect(&blocks.second.graph, &limits).map(|r| r.perfect);
        match (whole, first, second) {
            (Ok(w), Ok(f), Ok(s)) => {
                if w != (f && s) {
                    vec![format!(
                        "{}: perfect={w} but blocks are {f} and {s}",
                        g.encode()
                    )]
                } else {
                    vec![]
                }
            }
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
                vec![format!("{}: {e}", g.encode())]
            }
        }
    });
    gather(samples, 1, failures)
}

// ---------------------------------------------------------------------
// Minimally imperfect families: the Hoàng program
// ---------------------------------------------------------------------

/// Odd holes and antiholes up to `max_n`: no skew partition, no
/// homogeneous pair, no 6-join; 2-joins appear only on the holes.
pub fn sweep_hoang(max_n: usize, limits: &Limits) -> SweepOutcome {
    let mut outcome = SweepOutcome::default();
    let mut check = |g: &Graph, name: &str, expect_two_join: bool| {
        outcome.samples += 1;
        outcome.checked += 4;
        match find_skew_partition(g, limits) {
            Ok(None) => {}
            Ok(Some(sp)) => outcome
                .failures
                .push(format!("{name}: unexpected skew partition {sp:?}")),
            Err(e) => outcome.failures.push(format!("{name}: {e}")),
        }
        match find_homogeneous_pair(g, limits, HomogeneousPairOptions::default()) {
            Ok(None) => {}
            Ok(Some(hp)) => outcome
                .failures
                .push(format!("{name}: unexpected homogeneous pair {hp:?}")),
            Err(e) => outcome.failures.push(format!("{name}: {e}")),
        }
        if find_six_join(g).is_some() {
            outcome.failures.push(format!("{name}: unexpected 6-join"));
        }
        match (find_two_join(g), expect_two_join) {
            (Some(tj), true) => {
                if tj.validate(g).is_err() {
                    outcome.failures.push(format!("{name}: invalid 2-join witness"));
                }
            }
            (None, false) => {}
            (Some(_), false) => outcome.failures.push(format!("{name}: unexpected 2-join")),
            (None, true) => outcome.failures.push(format!("{name}: expected a 2-join")),
        }
    };
    for n in (5..=max_n).step_by(2) {
        let hole = Graph::cycle(n);
        check(&hole, &format!("C{n}"), n >= 7);
        if n >= 7 {
            let antihole = hole.complement();
            check(&antihole, &format!("anti-C{n}"), false);
        }
    }
    outcome
}

// ---------------------------------------------------------------------
// Replication lemma
// ---------------------------------------------------------------------

fn replication_checks(g: &Graph, limits: &Limits) -> SweepOutcome {
    let mut out = SweepOutcome {
        samples: 1,
        ..Default::default()
    };
    for v in 0..g.n() {
        for copies in 2..=3 {
            out.checked += 1;
            let r = replicate(g, v, copies);
            match is_perfect(&r, limits) {
                Ok(rep) if rep.perfect => {}
                Ok(_) => out.failures.push(format!(
                    "{}: replicating {v} x{copies} broke perfection",
                    g.encode()
                )),
                Err(e) => out.failures.push(format!("{}: {e}", g.encode())),
            }
        }
    }
    for u in 0..g.n() {
        for v in g.neighbors(u).iter() {
            if g.neighbors(u).intersects(g.neighbors(v)) {
                continue;
            }
            out.checked += 1;
            match replicate_minus_edge(g, u, v) {
                Ok((h, _)) => match is_perfect(&h, limits) {
                    Ok(rep) if rep.perfect => {}
                    Ok(_) => out.failures.push(format!(
                        "{}: edge-deleted replication of ({u}, {v}) broke perfection",
                        g.encode()
                    )),
                    Err(e) => out.failures.push(format!("{}: {e}", g.encode())),
                },
                Err(e) => out.failures.push(format!("{}: {e}", g.encode())),
            }
        }
    }
    out
}

/// Exhaustive over all perfect graphs on up to `exhaustive_max`
/// vertices, plus a seeded sample of perfect graphs at `sample_n`.
pub fn sweep_replication(
    exhaustive_max: usize,
    sample_n: usize,
    samples: usize,
    seed: u64,
    limits: &Limits,
    threads: usize,
) -> SweepOutcome {
    let mut outcome = SweepOutcome::default();
    for n in 1..=exhaustive_max {
        let count = 1usize << edge_slots(n);
        let results = parallel_map(count, threads, |mask| {
            let g = graph_from_mask(n, mask as u64);
            match is_perfect(&g, limits) {
                Ok(rep) if rep.perfect => replication_checks(&g, limits),
                Ok(_) => SweepOutcome::default(),
                Err(e) => SweepOutcome {
                    samples: 1,
                    checked: 0,
                    failures: vec![format!("{}: {e}", g.encode())],
                },
            }
        });
        for r in results {
            outcome.absorb(r);
        }
    }
    let sampled = parallel_map(samples, threads, |idx| {
        let mut rng = rng_for(seed, idx as u64);
        let density = [0.3, 0.5, 0.7][idx % 3];
        match crate::generate::random_perfect(&mut rng, sample_n, density, limits) {
            Ok(g) => replication_checks(&g, limits),
            Err(e) => SweepOutcome {
                samples: 1,
                checked: 0,
                failures: vec![format!("sampling failed: {e}")],
            },
        }
    });
    for r in sampled {
        outcome.absorb(r);
    }
    outcome
}

// ---------------------------------------------------------------------
// König edge coloring
// ---------------------------------------------------------------------

pub fn sweep_konig(
    samples: usize,
    max_side: usize,
    seed: u64,
    limits: &Limits,
    threads: usize,
) -> SweepOutcome {
    let line_limits = Limits {
        exact: 4 * limits.exact.max(max_side * max_side),
        ..limits.clone()
    };
    let failures = parallel_map(samples, threads, |idx| {
        let mut rng = rng_for(seed, idx as u64);
        let left = rng.gen_range(1..=max_side);
        let right = rng.gen_range(1..=max_side);
        let density = rng.gen_range(0.2..0.8);
        let g = random_bipartite(&mut rng, left, right, density);
        let mut fails = Vec::new();

        match crate::basic::konig_edge_coloring(&g) {
            Ok(ec) => {
                if ec.validate(&g).is_err() {
                    fails.push(format!("{}: improper edge coloring", g.encode()));
                }
                if ec.colors_used() != g.max_degree() {
                    fails.push(format!(
                        "{}: {} colors used, max degree {}",
                        g.encode(),
                        ec.colors_used(),
                        g.max_degree()
                    ));
                }
            }
            Err(e) => fails.push(format!("{}: {e}", g.encode())),
        }

        // Line graph coloring must hit omega exactly.
        let (lg, edges) = line_graph(&g);
        let root = crate::basic::LineRoot {
            root: g.clone(),
            vertex_edges: edges,
        };
        match color_basic(&lg, &BasicClass::LineOfBipartite(root)) {
            Ok(coloring) => match clique_number(&lg, &line_limits) {
                Ok((omega, _)) => {
                    if coloring.colors_used() != omega {
                        fails.push(format!(
                            "line graph of {}: {} colors vs omega {omega}",
                            g.encode(),
                            coloring.colors_used()
                        ));
                    }
                }
                Err(e) => fails.push(format!("line graph of {}: {e}", g.encode())),
            },
            Err(e) => fails.push(format!("line graph of {}: {e}", g.encode())),
        }
        fails
    });
    gather(samples, 2, failures)
}

// ---------------------------------------------------------------------
// 2-join coloring pipeline
// ---------------------------------------------------------------------

/// Seeded compositions of perfect blocks: block colorings must satisfy
/// the parity contracts (asserted inside `block_coloring`), the
/// combined coloring must be proper with omega colors, and the full
/// `perfect_color` pipeline must match the oracle's chromatic number.
pub fn sweep_two_join_coloring(
    samples: usize,
    max_side: usize,
    max_block: usize,
    seed: u64,
    limits: &Limits,
    threads: usize,
) -> SweepOutcome {
    let big = Limits::at_least(2 * max_side);
    let failures = parallel_map(samples, threads, |idx| {
        let mut rng = rng_for(seed, idx as u64);
        let comp = match crate::generate::random_two_join_composition(
            &mut rng, max_side, max_block, limits,
        ) {
            Ok(c) => c,
            Err(e) => return vec![format!("sampling failed: {e}")],
        };
        let g = &comp.graph;
        let mut fails = Vec::new();

        let (omega, _) = match clique_number(g, &big) {
            Ok(x) => x,
            Err(e) => return vec![format!("{}: {e}", g.encode())],
        };
        // Direct block colorings on the generator's witness join.
        match two_join_blocks(g, &comp.join) {
            Ok(blocks) => {
                let bc1 = block_coloring(&blocks.first, omega, g.n());
                let bc2 = block_coloring(&blocks.second, omega, g.n());
                match (bc1, bc2) {
                    (Ok((bc1, _)), Ok((bc2, _))) => {
                        match combine_colorings(g, &comp.join, &bc1, &bc2, omega) {
                            Ok(combined) => {
                                if combined.coloring.validate(g).is_err()
                                    || combined.coloring.colors_used() != omega
                                {
                                    fails.push(format!(
                                        "{}: bad combined coloring",
                                        g.encode()
                                    ));
                                }
                            }
                            Err(e) => fails.push(format!("{}: combine: {e}", g.encode())),
                        }
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        fails.push(format!("{}: block coloring: {e}", g.encode()))
                    }
                }
            }
            Err(e) => fails.push(format!("{}: blocks: {e}", g.encode())),
        }

        // Full pipeline against the oracle.
        match perfect_color(g, &big, PerfectionHandling::Trust) {
            Ok(pc) => match chromatic_number(g, &big) {
                Ok((chi, _)) => {
                    if pc.coloring.colors_used() != chi {
                        fails.push(format!(
                            "{}: pipeline used {} colors, oracle chi {chi}",
                            g.encode(),
                            pc.coloring.colors_used()
                        ));
                    }
                }
                Err(e) => fails.push(format!("{}: {e}", g.encode())),
            },
            Err(e) => fails.push(format!("{}: pipeline: {e}", g.encode())),
        }
        fails
    });
    gather(samples, 2, failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_pgt_exhaustive_is_clean() {
        let out = sweep_pgt_exhaustive(4, &Limits::default(), 2);
        assert_eq!(out.samples, 64);
        assert!(out.passed(), "{:?}", out.failures);
    }

    #[test]
    fn tiny_spgt_sample_is_clean() {
        let out = sweep_spgt_sampled(6, 50, 11, &Limits::default(), 2);
        assert!(out.passed(), "{:?}", out.failures);
    }

    #[test]
    fn hoang_families_up_to_nine() {
        let out = sweep_hoang(9, &Limits::default());
        assert!(out.passed(), "{:?}", out.failures);
    }

    #[test]
    fn small_decomposition_sweep() {
        let out = sweep_decomposition(&[6, 7], 40, 3, &Limits::default(), 2);
        assert!(out.passed(), "{:?}", out.failures);
    }

    #[test]
    fn small_two_join_coloring_sweep() {
        let out = sweep_two_join_coloring(10, 5, 10, 5, &Limits::default(), 2);
        assert!(out.passed(), "{:?}", out.failures);
        assert_eq!(out.samples, 10);
    }

    #[test]
    fn parallelism_does_not_change_results() {
        let a = sweep_decomposition(&[6], 30, 9, &Limits::default(), 1);
        let b = sweep_decomposition(&[6], 30, 9, &Limits::default(), 4);
        assert_eq!(a.samples, b.samples);
        assert_eq!(a.failures, b.failures);
    }

    #[test]
    fn no_proper_wheel_graphs_are_basic_or_skew() {
        let out = sweep_no_proper_wheel(&[6, 7, 8, 9], 300, 13, &Limits::default(), 4);
        assert!(out.passed(), "{:?}", out.failures);
        assert!(out.checked > 0, "hypothesis never satisfied");
    }

    #[test]
    fn two_join_preserves_perfection_both_ways() {
        let out = sweep_theorem_three(300, 6, 17, 4);
        assert!(out.passed(), "{:?}", out.failures);
        assert_eq!(out.samples, 300);
    }
}
