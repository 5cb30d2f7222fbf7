//! End-to-end runs of the `pgraph` command line through `cli_main`,
//! exercising the file formats, exit codes, and machine output.

use perfect_graphs::cli::cli_main;
use perfect_graphs::graph::Graph;
use perfect_graphs::io::{emit, parse_graph, Format, GraphDocument};

fn run(args: &[&str]) -> i32 {
    let args: Vec<String> = std::iter::once("pgraph")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    cli_main(&args)
}

fn write_graph(dir: &tempfile::TempDir, name: &str, g: Graph, format: Format) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, emit(&GraphDocument::bare(g, "test"), format)).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn analyze_reports_and_expectations() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_graph(&dir, "c5.col", Graph::cycle(5), Format::Dimacs);

    assert_eq!(run(&["analyze", "--in", &c5]), 0);
    assert_eq!(
        run(&["analyze", "--in", &c5, "--expect", "not-berge,imperfect,not-basic"]),
        0
    );
    assert_eq!(run(&["analyze", "--in", &c5, "--expect", "perfect"]), 1);
    assert_eq!(run(&["analyze", "--in", &c5, "--expect", "sparkly"]), 2);
}

#[test]
fn analyze_machine_records() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write_graph(&dir, "c6.txt", Graph::cycle(6), Format::EdgeList);
    let records = dir.path().join("records.jsonl");

    assert_eq!(
        run(&["analyze", "--in", &c6, "--out", records.to_str().unwrap()]),
        0
    );
    let text = std::fs::read_to_string(&records).unwrap();
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(!lines.is_empty());
    let summary = &lines[0];
    assert_eq!(summary["record"], "summary");
    assert_eq!(summary["vertices"], 6);
    assert_eq!(summary["omega"], 2);
    assert_eq!(summary["chi"], 2);
    assert_eq!(summary["berge"], true);
    assert_eq!(summary["perfect"], true);
    assert_eq!(summary["basic_class"], "bipartite");
    // C6 has a 2-join and a homogeneous pair; both must be reported.
    let structures: Vec<&str> = lines[1..]
        .iter()
        .map(|r| r["structure"].as_str().unwrap())
        .collect();
    assert!(structures.contains(&"two_join"));
    assert!(structures.contains(&"homogeneous_pair"));
}

#[test]
fn color_perfect_graphs_only() {
    let dir = tempfile::tempdir().unwrap();
    let bip = write_graph(&dir, "bip.col", Graph::complete_bipartite(3, 4), Format::Dimacs);
    assert_eq!(run(&["color", "--in", &bip]), 0);

    let c5 = write_graph(&dir, "c5.col", Graph::cycle(5), Format::Dimacs);
    assert_eq!(run(&["color", "--in", &c5]), 2);
}

#[test]
fn certify_round_trip_and_tamper_detection() {
    let dir = tempfile::tempdir().unwrap();
    let c7 = write_graph(&dir, "c7.col", Graph::cycle(7), Format::Dimacs);
    let cert = dir.path().join("c7.cert");

    assert_eq!(
        run(&["certify", "--in", &c7, "--out", cert.to_str().unwrap()]),
        0
    );
    assert_eq!(
        run(&["certify", "--in", &c7, "--verify", cert.to_str().unwrap()]),
        0
    );

    // Swapping one stable-set vertex must be caught.
    let text = std::fs::read_to_string(&cert).unwrap();
    let tampered = text.replacen("stable 0 2", "stable 0 3", 1);
    std::fs::write(&cert, tampered).unwrap();
    assert_eq!(
        run(&["certify", "--in", &c7, "--verify", cert.to_str().unwrap()]),
        1
    );

    // Perfect graphs have no certificate: negative finding.
    let c6 = write_graph(&dir, "c6.col", Graph::cycle(6), Format::Dimacs);
    assert_eq!(run(&["certify", "--in", &c6]), 1);
}

#[test]
fn generate_parse_and_holes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("anti7.col");
    assert_eq!(
        run(&[
            "generate",
            "--recipe",
            "antihole:7",
            "--format",
            "dimacs",
            "--out",
            out.to_str().unwrap(),
        ]),
        0
    );
    let doc = parse_graph(&std::fs::read(&out).unwrap(), Format::Dimacs).unwrap();
    assert_eq!(doc.graph, Graph::cycle(7).complement());

    assert_eq!(run(&["holes", "--in", out.to_str().unwrap(), "--parity", "even"]), 0);
    assert_eq!(run(&["holes", "--in", out.to_str().unwrap(), "--parity", "sideways"]), 2);
}

#[test]
fn sweep_exit_codes() {
    // Tiny exhaustive population keeps this fast.
    assert_eq!(run(&["sweep", "--theorem", "pgt", "--n", "4", "--samples", "0"]), 0);
    assert_eq!(run(&["sweep", "--theorem", "hoang", "--n", "7"]), 0);
    assert_eq!(run(&["sweep", "--theorem", "flat-earth"]), 2);
}

#[test]
fn malformed_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.col");
    std::fs::write(&bad, "p edge 2 1\ne 1 1\n").unwrap();
    assert_eq!(run(&["analyze", "--in", bad.to_str().unwrap()]), 2);
    assert_eq!(run(&["analyze", "--in", "/nonexistent/nope.col"]), 2);
}
