//! Finite simple graphs with canonical 0-based vertex indexing.

pub(crate) mod export;
mod generate;
mod parse;

use std::collections::VecDeque;

pub use export::GraphJson;
pub use generate::{complete, cycle, disjoint_union, edgeless, path, petersen, random_graph, star};
pub use parse::parse_edge_list;

use crate::error::{Error, Result};
use crate::rational::{zero, Rational};

/// A finite simple graph.
///
/// Edges are stored once as `(i, j)` with `i < j`, sorted lexicographically.
/// Neighbour lists are strictly increasing. Labels, when present, are only
/// used for output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from unordered vertex pairs, rejecting self-loops,
    /// duplicates and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for (line, (a, b)) in edges.into_iter().enumerate() {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { line: line + 1, label: a.to_string() });
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for (i, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (i.min(w[0]), i.max(w[0]));
                return Err(Error::DuplicateEdge { line: 0, a: a.to_string(), b: b.to_string() });
            }
        }
        Ok(Self::from_sorted_adjacency(adjacency))
    }

    pub fn edgeless(n: usize) -> Self {
        Self::from_sorted_adjacency(vec![Vec::new(); n])
    }

    /// Trusted constructor: neighbour lists must already be symmetric,
    /// strictly increasing and loop-free.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        debug_assert!(adjacency
            .iter()
            .enumerate()
            .all(|(i, nb)| { nb.windows(2).all(|w| w[0] < w[1]) && nb.iter().all(|&j| j != i) }));
        let edges = adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, nb)| nb.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect();
        Self { n: adjacency.len(), edges, adjacency, labels: None }
    }

    /// Attaches output labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Output label of a vertex; the index itself when unlabeled.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    /// Same vertex count and edge set, ignoring labels.
    pub fn same_structure(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges == other.edges
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// `(Af)(i) = Σ_{j ~ i} f(j)`.
    pub fn adjacency_apply(&self, f: &[Rational]) -> Result<Vec<Rational>> {
        if f.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: f.len() });
        }
        Ok(self.adjacency.iter().map(|nb| nb.iter().fold(zero(), |acc, &j| acc + &f[j])).collect())
    }

    /// `A·deg` as integers.
    pub fn adjacency_degree(&self) -> Vec<usize> {
        self.adjacency.iter().map(|nb| nb.iter().map(|&j| self.degree(j)).sum()).collect()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let next = dist[v].map(|d| d + 1);
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-walk length, `Ok(None)` when no walk joins the two vertices.
    pub fn walk_distance(&self, i: usize, j: usize) -> Result<Option<usize>> {
        for v in [i, j] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        Ok(self.distances_from(i)[j])
    }

    pub fn all_pairs_distances(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n).map(|i| self.distances_from(i)).collect()
    }

    /// Components ordered by least member, each sorted ascending.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Component index of every vertex, numbered as in [`Self::connected_components`].
    pub fn component_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.n];
        for (c, comp) in self.connected_components().iter().enumerate() {
            for &v in comp {
                ids[v] = c;
            }
        }
        ids
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// True when the graph is `K_{1,n}` for some `n >= 1`.
    pub fn is_star(&self) -> bool {
        self.n >= 2 && self.edges.len() == self.n - 1 && self.adjacency.iter().any(|nb| nb.len() == self.n - 1)
    }

    /// True when every component is a star `K_{1,m}` (m >= 1) or an isolated vertex.
    pub fn is_star_forest(&self) -> bool {
        self.connected_components().iter().all(|comp| {
            comp.len() == 1 || {
                let edges: usize = comp.iter().map(|&v| self.degree(v)).sum::<usize>() / 2;
                edges == comp.len() - 1 && comp.iter().any(|&v| self.degree(v) == comp.len() - 1)
            }
        })
    }

    /// Components consisting of a single vertex or a single edge.
    pub fn degenerate_components(&self) -> Vec<Vec<usize>> {
        self.connected_components().into_iter().filter(|c| c.len() <= 2).collect()
    }
}

/// A map between vertex sets, `image[v]` being the image of domain vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMap {
    pub image: Vec<usize>,
}

impl VertexMap {
    pub fn new(image: Vec<usize>) -> Self {
        Self { image }
    }

    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &VertexMap) -> VertexMap {
        VertexMap { image: self.image.iter().map(|&v| next.image[v]).collect() }
    }

    /// First edge of `from` not carried onto an edge of `to`.
    pub fn homomorphism_violation(&self, from: &Graph, to: &Graph) -> Result<Option<(usize, usize)>> {
        if self.image.len() != from.n() {
            return Err(Error::DimensionMismatch { expected: from.n(), found: self.image.len() });
        }
        if let Some(&v) = self.image.iter().find(|&&v| v >= to.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: to.n() });
        }
        Ok(from.edges().iter().copied().find(|&(a, b)| !to.has_edge(self.image[a], self.image[b])))
    }
}

/// True iff every edge of `from` maps to an edge of `to`.
pub fn is_homomorphism(h: &VertexMap, from: &Graph, to: &Graph) -> Result<bool> {
    Ok(h.homomorphism_violation(from, to)?.is_none())
}
