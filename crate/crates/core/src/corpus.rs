//! Graph collections used by the verification harness.

use std::collections::HashSet;

use crate::error::Result;
use crate::graph::{random_graph, Graph};
use crate::rational::{format, Rational};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Graph,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn pair_bits(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Smallest edge bitmask over all relabellings.
fn canonical_key(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>], pairs: &[(usize, usize)]) -> u64 {
    perms
        .iter()
        .map(|p| {
            edges.iter().fold(0u64, |acc, &(a, b)| {
                let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                acc | 1 << pairs.iter().position(|&e| e == (x, y)).expect("pair")
            })
        })
        .min()
        .unwrap_or(0)
        | (n as u64) << 56
}

/// Every connected graph on `1..=max_n` vertices, one per isomorphism class.
/// Practical for `max_n ≤ 6`.
pub fn small_corpus(max_n: usize) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs = pair_bits(n);
        let perms = permutations(n);
        let mut seen = HashSet::new();
        let mut index = 0;
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::new(n, edges.iter().copied()).expect("simple");
            if !g.is_connected() || !seen.insert(canonical_key(n, &edges, &perms, &pairs)) {
                continue;
            }
            out.push(CorpusEntry { id: format!("small:n={n}:#{index}"), graph: g });
            index += 1;
        }
    }
    out
}

/// Size of the `k`-th of `count` random graphs: spread evenly from
/// `min(3, n)` up to `n`.
pub fn random_corpus_size(k: usize, count: usize, n: usize) -> usize {
    let lo = n.min(3);
    if count <= 1 {
        return n;
    }
    lo + k * (n - lo) / (count - 1)
}

/// `count` graphs `G(n_k, p)` with `n_k` from [`random_corpus_size`] and
/// seed `seed ⊕ k`.
pub fn random_corpus(count: usize, n: usize, p: &Rational, seed: u64) -> Result<Vec<CorpusEntry>> {
    (0..count)
        .map(|k| {
            let nk = random_corpus_size(k, count, n);
            let s = seed ^ k as u64;
            Ok(CorpusEntry { id: format!("er:{nk}:{}:{s}", format(p)), graph: random_graph(nk, p, s)? })
        })
        .collect()
}
