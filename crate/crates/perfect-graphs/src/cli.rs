//! The `pgraph` command line: analysis, coloring, certification,
//! generation, theorem sweeps, and hole listing over edge-list and
//! DIMACS files.
//!
//! Exit codes: 0 success, 1 negative finding on an assertion-style
//! check (`--expect`, `certify`), 2 input error, 3 internal
//! inconsistency (a proved theorem failed — an implementation bug).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::basic::recognize_basic;
use crate::berge::{is_berge, OddHoleWitness};
use crate::decompose::{perfect_color, PerfectionHandling};
use crate::error::{Error, Result};
use crate::generate::{generate, parse_recipe};
use crate::graph::{HoleParity, VertexSet};
use crate::io::{emit, parse_graph, Format, GraphDocument};
use crate::oracle::{
    chromatic_number, clique_number, gasparyan_certificate, is_minimally_imperfect, is_perfect,
    stability_number, GasparyanCertificate,
};
use crate::structure::{
    classify_cutset, find_homogeneous_pair, find_six_join, find_skew_partition, find_two_join,
};
use crate::sweeps;
use crate::wheels::{find_stretcher, find_wheels};
use crate::Limits;

#[derive(Parser)]
#[command(name = "pgraph", version, about = "Perfect graph structure laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Input graph file.
    #[arg(long = "in")]
    input: PathBuf,
    /// Input format: edge-list or dimacs (guessed from the extension
    /// when omitted).
    #[arg(long)]
    format: Option<String>,
}

impl InputArgs {
    fn load(&self) -> Result<GraphDocument> {
        let format = match &self.format {
            Some(name) => Format::from_name(name)?,
            None => Format::from_path(&self.input.to_string_lossy()),
        };
        let bytes = std::fs::read(&self.input)
            .map_err(|e| Error::invalid(format!("cannot read {}: {e}", self.input.display())))?;
        let mut doc = parse_graph(&bytes, format)?;
        doc.source = self.input.display().to_string();
        Ok(doc)
    }
}

#[derive(Args, Clone)]
struct LimitArgs {
    /// Cap for the exact clique/coloring solvers.
    #[arg(long = "limit-exact")]
    exact: Option<usize>,
    /// Cap for the all-subgraph perfection scans.
    #[arg(long = "limit-perfect")]
    perfect: Option<usize>,
    /// Cap for the skew partition search (also gates the 2-join and
    /// 6-join scans in `analyze`).
    #[arg(long = "limit-skew")]
    skew: Option<usize>,
    /// Cap for the homogeneous pair search.
    #[arg(long = "limit-pair")]
    pair: Option<usize>,
    /// Cap for wheel enumeration.
    #[arg(long = "limit-wheel")]
    wheel: Option<usize>,
    /// Cap for the stretcher search.
    #[arg(long = "limit-stretcher")]
    stretcher: Option<usize>,
    /// Cap for Berge recognition.
    #[arg(long = "limit-berge")]
    berge: Option<usize>,
}

impl LimitArgs {
    fn to_limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            exact: self.exact.unwrap_or(d.exact),
            perfect: self.perfect.unwrap_or(d.perfect),
            skew: self.skew.unwrap_or(d.skew),
            homogeneous: self.pair.unwrap_or(d.homogeneous),
            wheel: self.wheel.unwrap_or(d.wheel),
            stretcher: self.stretcher.unwrap_or(d.stretcher),
            berge: self.berge.unwrap_or(d.berge),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full structural report: invariants, Berge/perfection status,
    /// basic class, and every detected structure.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Write machine-readable JSON records here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated assertions: perfect, imperfect, berge,
        /// not-berge, basic, not-basic. Violations exit 1.
        #[arg(long)]
        expect: Option<String>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Color a perfect graph with exactly omega colors.
    Color {
        #[command(flatten)]
        input: InputArgs,
        /// Write the coloring as JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Emit or verify a Gasparyan certificate for a minimally
    /// imperfect graph.
    Certify {
        #[command(flatten)]
        input: InputArgs,
        /// Write the certificate here (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Verify this certificate file against the graph instead of
        /// emitting one.
        #[arg(long)]
        verify: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Generate a graph from a recipe (see README for the grammar).
    Generate {
        #[arg(long)]
        recipe: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format: edge-list (default) or dimacs.
        #[arg(long)]
        format: Option<String>,
    },
    /// Run a theorem sweep; any counterexample exits 3.
    Sweep {
        /// pgt, spgt, decomposition, wonderful, square-free,
        /// odd-hole-free, hoang, replication, konig, two-join-coloring,
        /// theorem-three, no-proper-wheel.
        #[arg(long)]
        theorem: String,
        /// Graph size (or family bound / bipartite side, per theorem).
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Sample count; 0 selects the exhaustive population where one
        /// exists (pgt, spgt).
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// List holes with the requested parity.
    Holes {
        #[command(flatten)]
        input: InputArgs,
        /// odd, even, or any.
        #[arg(long, default_value = "any")]
        parity: String,
        #[arg(long = "min-length", default_value_t = 4)]
        min_length: usize,
    },
}

/// Entry point shared by the binary and the integration tests.
pub fn cli_main(args: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes, anything else
            // is an input error.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Analyze {
            input,
            out,
            expect,
            limits,
        } => run_analyze(&input.load()?, &limits.to_limits(), out, expect),
        Command::Color { input, out, limits } => {
            run_color(&input.load()?, &limits.to_limits(), out)
        }
        Command::Certify {
            input,
            out,
            verify,
            limits,
        } => run_certify(&input.load()?, &limits.to_limits(), out, verify),
        Command::Generate {
            recipe,
            seed,
            out,
            format,
        } => {
            let recipe = parse_recipe(&recipe)?;
            let doc = generate(&recipe, seed)?;
            let format = match format {
                Some(name) => Format::from_name(&name)?,
                None => Format::EdgeList,
            };
            write_output(&out, &emit(&doc, format))?;
            Ok(0)
        }
        Command::Sweep {
            theorem,
            n,
            samples,
            seed,
            threads,
            limits,
        } => run_sweep(
            &theorem,
            n,
            samples,
            seed,
            threads.unwrap_or_else(sweeps::default_threads),
            &limits.to_limits(),
        ),
        Command::Holes {
            input,
            parity,
            min_length,
        } => {
            let doc = input.load()?;
            let parity = match parity.as_str() {
                "odd" => HoleParity::Odd,
                "even" => HoleParity::Even,
                "any" => HoleParity::Any,
                other => {
                    return Err(Error::invalid(format!(
                        "unknown parity {other:?} (expected odd, even, any)"
                    )))
                }
            };
            if min_length < 4 {
                return Err(Error::invalid("holes have length at least 4"));
            }
            let mut count = 0usize;
            doc.graph.for_each_hole(|cycle| {
                let len = cycle.len();
                let keep = len >= min_length
                    && match parity {
                        HoleParity::Odd => len % 2 == 1,
                        HoleParity::Even => len % 2 == 0,
                        HoleParity::Any => true,
                    };
                if keep {
                    count += 1;
                    let labels: Vec<String> = cycle.iter().map(|&v| doc.label(v)).collect();
                    println!("hole length {len}: {}", labels.join(" "));
                }
                true
            });
            println!("{count} hole(s)");
            Ok(0)
        }
    }
}

fn write_output(path: &Option<PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn set_json(s: &VertexSet) -> serde_json::Value {
    json!(s.to_vec())
}

/// Runs a bounded search, turning a resource-limit error into a
/// "skipped" marker instead of a failure.
fn gated<T>(result: Result<T>) -> Result<(Option<T>, Option<String>)> {
    match result {
        Ok(v) => Ok((Some(v), None)),
        Err(Error::ResourceLimit { what, n, limit }) => {
            Ok((None, Some(format!("{what} skipped ({n} > {limit})"))))
        }
        Err(e) => Err(e),
    }
}

fn run_analyze(
    doc: &GraphDocument,
    limits: &Limits,
    out: Option<PathBuf>,
    expect: Option<String>,
) -> Result<i32> {
    let g = &doc.graph;
    let mut records: Vec<serde_json::Value> = Vec::new();
    println!("graph: {} ({} vertices, {} edges)", doc.source, g.n(), g.edge_count());

    let mut summary = json!({
        "record": "summary",
        "vertices": g.n(),
        "edges": g.edge_count(),
    });

    let (invariants, skipped) = gated(
        clique_number(g, limits).and_then(|(omega, _)| {
            let (alpha, _) = stability_number(g, limits)?;
            let (chi, _) = chromatic_number(g, limits)?;
            Ok((omega, alpha, chi))
        }),
    )?;
    if let Some((omega, alpha, chi)) = invariants {
        println!("omega = {omega}, alpha = {alpha}, chi = {chi}");
        summary["omega"] = json!(omega);
        summary["alpha"] = json!(alpha);
        summary["chi"] = json!(chi);
    } else {
        println!("{}", skipped.unwrap());
    }

    let mut facts = Facts::default();
    let (berge, skipped) = gated(is_berge(g, limits))?;
    match berge {
        Some(report) => {
            facts.berge = Some(report.berge);
            summary["berge"] = json!(report.berge);
            match &report.witness {
                Some(OddHoleWitness::Hole(h)) => {
                    println!("not Berge: odd hole {:?}", h.vertices);
                    summary["odd_hole"] = json!(h.vertices);
                }
                Some(OddHoleWitness::Antihole(h)) => {
                    println!("not Berge: odd antihole on {:?}", h.vertices);
                    summary["odd_antihole"] = json!(h.vertices);
                }
                None => println!("Berge: no odd hole in the graph or its complement"),
            }
        }
        None => println!("{}", skipped.unwrap()),
    }

    let (perfection, skipped) = gated(is_perfect(g, limits))?;
    match perfection {
        Some(report) => {
            facts.perfect = Some(report.perfect);
            summary["perfect"] = json!(report.perfect);
            if let Some(w) = &report.witness {
                let minimal = w.len() == g.n();
                summary["minimally_imperfect"] = json!(minimal);
                println!(
                    "imperfect; minimal violating set {:?}{}",
                    w.to_vec(),
                    if minimal { " (the whole graph)" } else { "" }
                );
            } else {
                println!("perfect");
            }
        }
        None => println!("{}", skipped.unwrap()),
    }

    let class = recognize_basic(g);
    facts.basic = Some(class.is_basic());
    println!("basic class: {}", class.tag());
    summary["basic_class"] = json!(class.tag());
    records.push(summary);

    // Structure census. The 2-join and 6-join scans are exhaustive
    // over bipartitions, so they share the skew-partition gate.
    if g.n() <= limits.skew {
        match find_two_join(g) {
            Some(tj) => {
                println!(
                    "two-join: v1 {:?} (a1 {:?}, b1 {:?}) | v2 {:?} (a2 {:?}, b2 {:?})",
                    tj.v1.to_vec(), tj.a1.to_vec(), tj.b1.to_vec(),
                    tj.v2.to_vec(), tj.a2.to_vec(), tj.b2.to_vec()
                );
                records.push(json!({
                    "record": "structure", "structure": "two_join",
                    "v1": set_json(&tj.v1), "v2": set_json(&tj.v2),
                    "a1": set_json(&tj.a1), "b1": set_json(&tj.b1),
                    "a2": set_json(&tj.a2), "b2": set_json(&tj.b2),
                }));
            }
            None => println!("two-join: none"),
        }
        match find_six_join(g) {
            Some(sj) => {
                println!("six-join: x {:?} | y {:?}",
                    sj.x.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
                    sj.y.iter().map(|s| s.to_vec()).collect::<Vec<_>>());
                records.push(json!({
                    "record": "structure", "structure": "six_join",
                    "x": sj.x.iter().map(set_json).collect::<Vec<_>>(),
                    "y": sj.y.iter().map(set_json).collect::<Vec<_>>(),
                }));
            }
            None => println!("six-join: none"),
        }
    } else {
        println!("two-join/six-join scans skipped ({} > {})", g.n(), limits.skew);
    }

    let (skew, skipped) = gated(find_skew_partition(g, limits))?;
    match (skew, skipped) {
        (Some(Some(sp)), _) => {
            let kinds = classify_cutset(g, &sp)?;
            let tags: Vec<&str> = kinds.kinds().iter().map(|k| k.tag()).collect();
            println!(
                "skew partition: a {:?}, b {:?}, c {:?}, d {:?}; cutset kinds: {}",
                sp.a.to_vec(), sp.b.to_vec(), sp.c.to_vec(), sp.d.to_vec(),
                tags.join(", ")
            );
            records.push(json!({
                "record": "structure", "structure": "skew_partition",
                "a": set_json(&sp.a), "b": set_json(&sp.b),
                "c": set_json(&sp.c), "d": set_json(&sp.d),
                "kinds": tags,
                "star_centers": kinds.star_centers,
                "t_pairs": kinds.t_pairs,
                "u_pairs": kinds.u_pairs,
                "double_star_pairs": kinds.double_star_pairs,
            }));
        }
        (Some(None), _) => println!("skew partition: none"),
        (None, Some(note)) => println!("{note}"),
        (None, None) => unreachable!(),
    }

    let (pair, skipped) = gated(find_homogeneous_pair(
        g,
        limits,
        crate::structure::HomogeneousPairOptions::default(),
    ))?;
    match (pair, skipped) {
        (Some(Some(hp)), _) => {
            println!(
                "homogeneous pair: a1 {:?}, a2 {:?}, b {:?}",
                hp.a1.to_vec(), hp.a2.to_vec(), hp.b.to_vec()
            );
            records.push(json!({
                "record": "structure", "structure": "homogeneous_pair",
                "a1": set_json(&hp.a1), "a2": set_json(&hp.a2), "b": set_json(&hp.b),
            }));
        }
        (Some(None), _) => println!("homogeneous pair: none"),
        (None, Some(note)) => println!("{note}"),
        (None, None) => unreachable!(),
    }

    match crate::structure::find_star_cutset(g) {
        Some(sc) => {
            println!("star cutset: {:?} centered at {}", sc.cutset.to_vec(), sc.center);
            records.push(json!({
                "record": "structure", "structure": "star_cutset",
                "cutset": set_json(&sc.cutset), "center": sc.center,
            }));
        }
        None => println!("star cutset: none"),
    }
    match crate::structure::find_double_star_cutset(g) {
        Some(ds) => {
            println!(
                "double star cutset: {:?} on edge ({}, {})",
                ds.cutset.to_vec(), ds.u, ds.v
            );
            records.push(json!({
                "record": "structure", "structure": "double_star_cutset",
                "cutset": set_json(&ds.cutset), "u": ds.u, "v": ds.v,
            }));
        }
        None => println!("double star cutset: none"),
    }

    let (wheels, skipped) = gated(find_wheels(g, &[], limits))?;
    match wheels {
        Some(wheels) => {
            if wheels.is_empty() {
                println!("wheels: none");
            }
            for w in &wheels {
                println!(
                    "wheel ({}): hole {:?}, center {}, {} spokes",
                    w.kind.tag(), w.hole.vertices, w.center, w.arity
                );
                records.push(json!({
                    "record": "structure", "structure": "wheel",
                    "kind": w.kind.tag(), "hole": w.hole.vertices,
                    "center": w.center, "arity": w.arity,
                }));
            }
        }
        None => println!("{}", skipped.unwrap()),
    }

    let (stretcher, skipped) = gated(find_stretcher(g, limits))?;
    match (stretcher, skipped) {
        (Some(Some(s)), _) => {
            println!(
                "stretcher: triangles {:?} / {:?}, paths {:?}",
                s.triangle_a(), s.triangle_b(),
                s.paths.iter().map(|p| p.vertices.clone()).collect::<Vec<_>>()
            );
            records.push(json!({
                "record": "structure", "structure": "stretcher",
                "triangle_a": s.triangle_a(), "triangle_b": s.triangle_b(),
                "paths": s.paths.iter().map(|p| p.vertices.clone()).collect::<Vec<_>>(),
            }));
        }
        (Some(None), _) => println!("stretcher: none"),
        (None, Some(note)) => println!("{note}"),
        (None, None) => unreachable!(),
    }

    if let Some(path) = out {
        let mut text = String::new();
        for r in &records {
            text.push_str(&r.to_string());
            text.push('\n');
        }
        std::fs::write(&path, text)
            .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?;
    }

    if let Some(expect) = expect {
        let violations = facts.check(&expect)?;
        if !violations.is_empty() {
            for v in violations {
                eprintln!("expectation failed: {v}");
            }
            return Ok(1);
        }
    }
    Ok(0)
}

#[derive(Default)]
struct Facts {
    perfect: Option<bool>,
    berge: Option<bool>,
    basic: Option<bool>,
}

impl Facts {
    fn check(&self, expect: &str) -> Result<Vec<String>> {
        let mut violations = Vec::new();
        for token in expect.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (fact, wanted) = match token {
                "perfect" => (self.perfect, true),
                "imperfect" => (self.perfect, false),
                "berge" => (self.berge, true),
                "not-berge" => (self.berge, false),
                "basic" => (self.basic, true),
                "not-basic" => (self.basic, false),
                other => {
                    return Err(Error::invalid(format!("unknown expectation {other:?}")))
                }
            };
            match fact {
                Some(actual) if actual == wanted => {}
                Some(_) => violations.push(token.to_string()),
                None => violations.push(format!("{token} (check skipped by limits)")),
            }
        }
        Ok(violations)
    }
}

fn run_color(doc: &GraphDocument, limits: &Limits, out: Option<PathBuf>) -> Result<i32> {
    let pc = perfect_color(&doc.graph, limits, PerfectionHandling::Verify)?;
    println!(
        "colored with {} colors via {}",
        pc.coloring.colors_used(),
        pc.tree.tag()
    );
    let record = json!({
        "record": "coloring",
        "colors": pc.coloring.assignment,
        "num_colors": pc.coloring.colors_used(),
        "method": pc.tree.tag(),
    });
    match out {
        Some(path) => std::fs::write(&path, format!("{record}\n"))
            .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?,
        None => println!("{record}"),
    }
    Ok(0)
}

fn run_certify(
    doc: &GraphDocument,
    limits: &Limits,
    out: Option<PathBuf>,
    verify: Option<PathBuf>,
) -> Result<i32> {
    let g = &doc.graph;
    if let Some(cert_path) = verify {
        let text = std::fs::read_to_string(&cert_path)
            .map_err(|e| Error::invalid(format!("cannot read {}: {e}", cert_path.display())))?;
        let cert = GasparyanCertificate::from_text(&text, g.n())?;
        return match cert.verify(g) {
            Ok(()) => {
                println!(
                    "certificate valid: {} stable sets and cliques, alpha {}, omega {}",
                    cert.stable_sets.len(),
                    cert.alpha,
                    cert.omega
                );
                Ok(0)
            }
            Err(e) => {
                println!("certificate INVALID: {e}");
                Ok(1)
            }
        };
    }
    if !is_minimally_imperfect(g, limits)? {
        println!("not minimally imperfect; no certificate exists");
        return Ok(1);
    }
    let cert = gasparyan_certificate(g, limits)?;
    write_output(&out, &cert.to_text())?;
    Ok(0)
}

fn run_sweep(
    theorem: &str,
    n: usize,
    samples: usize,
    seed: u64,
    threads: usize,
    limits: &Limits,
) -> Result<i32> {
    let outcome = match theorem {
        "pgt" => {
            if samples == 0 {
                sweeps::sweep_pgt_exhaustive(n, limits, threads)
            } else {
                sweeps::sweep_pgt_sampled(n, samples, seed, limits, threads)
            }
        }
        "spgt" => {
            if samples == 0 {
                sweeps::sweep_spgt_exhaustive(n, limits, threads)
            } else {
                sweeps::sweep_spgt_sampled(n, samples, seed, limits, threads)
            }
        }
        "decomposition" => sweeps::sweep_decomposition(&[n], samples, seed, limits, threads),
        "wonderful" => sweeps::sweep_wonderful(
            &[5, 6, 7, 8, 9],
            100,
            samples.max(100),
            seed,
            limits,
            threads,
        ),
        "square-free" => sweeps::sweep_square_free(&[n], samples, seed, limits, threads),
        "odd-hole-free" => sweeps::sweep_odd_hole_free(&[n], samples, seed, limits, threads),
        "hoang" => sweeps::sweep_hoang(n.max(5), limits),
        "replication" => sweeps::sweep_replication(4, n.min(7), samples, seed, limits, threads),
        "two-join-coloring" => {
            sweeps::sweep_two_join_coloring(samples, n.clamp(3, 7), 10, seed, limits, threads)
        }
        "theorem-three" => sweeps::sweep_theorem_three(samples, n.clamp(3, 7), seed, threads),
        "no-proper-wheel" => {
            sweeps::sweep_no_proper_wheel(&[n.min(9)], samples, seed, limits, threads)
        }
        "konig" => sweeps::sweep_konig(samples, n.clamp(1, 15), seed, limits, threads),
        other => {
            return Err(Error::invalid(format!(
                "unknown theorem {other:?}; see --help for the list"
            )))
        }
    };
    println!(
        "sweep {theorem}: {} graphs, {} checks, {} failure(s)",
        outcome.samples,
        outcome.checked,
        outcome.failures.len()
    );
    if outcome.passed() {
        Ok(0)
    } else {
        for f in outcome.failures.iter().take(10) {
            eprintln!("counterexample: {f}");
        }
        Err(Error::InternalInconsistency {
            context: "theorem sweep",
            detail: format!("{theorem} sweep found {} failure(s)", outcome.failures.len()),
            instance: outcome.failures.first().cloned().unwrap_or_default(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn run_args(args: &[&str]) -> i32 {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        cli_main(&args)
    }

    #[test]
    fn help_exits_zero() {
        assert_eq!(run_args(&["pgraph", "--help"]), 0);
    }

    #[test]
    fn unknown_subcommand_exits_two() {
        assert_eq!(run_args(&["pgraph", "frobnicate"]), 2);
    }

    #[test]
    fn generate_and_analyze_round_trip() {
        let dir = std::env::temp_dir().join(format!("pgraph-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c5.col");
        let doc = GraphDocument::bare(Graph::cycle(5), "test");
        std::fs::write(&path, emit(&doc, Format::Dimacs)).unwrap();
        let code = run_args(&[
            "pgraph",
            "analyze",
            "--in",
            path.to_str().unwrap(),
            "--expect",
            "not-berge,imperfect,not-basic",
        ]);
        assert_eq!(code, 0);
        let code = run_args(&[
            "pgraph",
            "analyze",
            "--in",
            path.to_str().unwrap(),
            "--expect",
            "perfect",
        ]);
        assert_eq!(code, 1);
        std::fs::remove_dir_all(&dir).ok();
    }
}
