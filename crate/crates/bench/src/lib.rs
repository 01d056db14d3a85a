//! Benchmark fixtures. The benchmarks themselves live in `benches/`.

use gb_core::graph::{cycle, petersen, random_graph};
use gb_core::rational::parse;
use gb_core::Graph;

/// Seed shared by every random fixture.
pub const SEED: u64 = 17;

/// Named graphs of increasing size: a cycle, Petersen and `G(n, 1/3)`.
pub fn fixtures() -> Vec<(String, Graph)> {
    let p = parse("1/3").expect("literal");
    let mut out = vec![("c12".to_string(), cycle(12)), ("petersen".to_string(), petersen())];
    for n in [15, 30] {
        out.push((format!("gnp{n}"), random_graph(n, &p, SEED).expect("valid probability")));
    }
    out
}
