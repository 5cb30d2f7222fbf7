//! Miniature theorem sweeps: the perfect graph theorem and the Berge
//! decomposition disjunction over seeded random populations. The full
//! populations live in the acceptance suite; this is the same engine
//! at demo scale.
//!
//! Run with `cargo run --release --example theorem_sweeps`.

use perfect_graphs::sweeps::{
    default_threads, sweep_decomposition, sweep_pgt_exhaustive, sweep_spgt_sampled,
    sweep_wonderful,
};
use perfect_graphs::Limits;

fn main() {
    let limits = Limits::default();
    let threads = default_threads();

    let pgt = sweep_pgt_exhaustive(5, &limits, threads);
    println!(
        "perfect graph theorem, all {} graphs on 5 vertices: {} failures",
        pgt.samples,
        pgt.failures.len()
    );

    let spgt = sweep_spgt_sampled(8, 500, 1, &limits, threads);
    println!(
        "perfect == Berge over {} samples at n=8: {} failures",
        spgt.samples,
        spgt.failures.len()
    );

    let decomp = sweep_decomposition(&[6, 7, 8], 300, 2, &limits, threads);
    println!(
        "decomposition disjunction over {} Berge samples: {} failures",
        decomp.samples,
        decomp.failures.len()
    );

    let wonderful = sweep_wonderful(&[5, 6, 7], 25, 5000, 3, &limits, threads);
    println!(
        "wonderful lemma: {} instances inside {} samples: {} failures",
        wonderful.checked,
        wonderful.samples,
        wonderful.failures.len()
    );

    assert!(pgt.passed() && spgt.passed() && decomp.passed() && wonderful.passed());
    println!("\nall demo sweeps clean");
}
