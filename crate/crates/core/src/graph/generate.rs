//! Named graph families and the seeded Erdős–Rényi generator.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};
use crate::rational::{one, Rational};

/// Samples `G(n, p)`.
///
/// The generator is ChaCha8 seeded with `seed_from_u64(seed)`. Pairs
/// `(i, j)`, `i < j`, are visited in lexicographic order and each consumes
/// one draw: an integer uniform in `[0, q)`, where `p = a/q` in lowest terms.
/// The edge is kept when the draw is below `a`. Output depends only on
/// `(n, p, seed)`.
pub fn random_graph(n: usize, p: &Rational, seed: u64) -> Result<Graph> {
    if *p < Rational::from_integer(0.into()) || *p > one() {
        return Err(Error::InvalidProbability(p.to_string()));
    }
    let (numer, denom) = match (p.numer().to_u64(), p.denom().to_u64()) {
        (Some(a), Some(q)) => (a, q),
        _ => return Err(Error::InvalidProbability(p.to_string())),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..denom) < numer {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

pub fn edgeless(n: usize) -> Graph {
    Graph::edgeless(n)
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("complete graph")
}

/// Cycle `0 – 1 – … – (n-1) – 0`; needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
}

/// Path `0 – 1 – … – (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|j| (0, j))).expect("star")
}

/// The Petersen graph: outer 5-cycle 0..4, spokes i – i+5, inner pentagram.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen")
}

/// Disjoint union; vertices of `b` are shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let edges = a.edges().iter().copied().chain(b.edges().iter().map(|&(i, j)| (i + shift, j + shift)));
    Graph::new(a.n() + b.n(), edges).expect("disjoint union")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse;

    #[test]
    fn extreme_probabilities() {
        for seed in [0, 1, 99] {
            assert!(random_graph(4, &parse("1").unwrap(), seed).unwrap().same_structure(&complete(4)));
            assert_eq!(random_graph(4, &parse("0").unwrap(), seed).unwrap().edge_count(), 0);
        }
    }

    #[test]
    fn deterministic() {
        let p = parse("1/4").unwrap();
        let a = random_graph(30, &p, 42).unwrap();
        let b = random_graph(30, &p, 42).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert_ne!(a.edges(), random_graph(30, &p, 43).unwrap().edges());
    }

    #[test]
    fn bad_probability() {
        assert!(matches!(random_graph(3, &parse("3/2").unwrap(), 0), Err(Error::InvalidProbability(_))));
        assert!(matches!(random_graph(3, &parse("-1/2").unwrap(), 0), Err(Error::InvalidProbability(_))));
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.edge_count(), 15);
        assert!(g.degree_sequence().iter().all(|&d| d == 3));
    }
}
