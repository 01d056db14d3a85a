use std::ops::Range;

use crate::graph::Graph;

/// The directed edges `V_*` of a graph in lexicographic `(i, j)` order,
/// together with the reversal `σ` and the projections `π` (base point) and
/// `π₊` (end point).
///
/// Edges based at `i` occupy the contiguous index range [`Self::based_at`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedEdgeTable {
    base_n: usize,
    edges: Vec<(usize, usize)>,
    sigma: Vec<usize>,
    pi: Vec<usize>,
    pi_plus: Vec<usize>,
    offsets: Vec<usize>,
}

impl DirectedEdgeTable {
    pub fn new(g: &Graph) -> Self {
        let mut offsets = Vec::with_capacity(g.n() + 1);
        let mut edges = Vec::with_capacity(2 * g.edge_count());
        offsets.push(0);
        for i in 0..g.n() {
            edges.extend(g.neighbors(i).iter().map(|&j| (i, j)));
            offsets.push(edges.len());
        }
        let pi = edges.iter().map(|e| e.0).collect();
        let pi_plus = edges.iter().map(|e| e.1).collect();
        let mut table = Self { base_n: g.n(), edges, sigma: Vec::new(), pi, pi_plus, offsets };
        table.sigma = (0..table.len())
            .map(|u| {
                let (i, j) = table.edges[u];
                table.index_of(j, i).expect("reverse edge present")
            })
            .collect();
        table
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertex count of the graph the edges belong to.
    pub fn base_n(&self) -> usize {
        self.base_n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, u: usize) -> (usize, usize) {
        self.edges[u]
    }

    pub fn sigma(&self, u: usize) -> usize {
        self.sigma[u]
    }

    pub fn sigmas(&self) -> &[usize] {
        &self.sigma
    }

    pub fn pi(&self, u: usize) -> usize {
        self.pi[u]
    }

    pub fn pis(&self) -> &[usize] {
        &self.pi
    }

    pub fn pi_plus(&self, u: usize) -> usize {
        self.pi_plus[u]
    }

    pub fn pi_pluses(&self) -> &[usize] {
        &self.pi_plus
    }

    /// Indices of the directed edges with base point `i`.
    pub fn based_at(&self, i: usize) -> Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }

    /// Indices of the directed edges with end point `i`, ascending.
    pub fn ending_at(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        // (k, i) indices increase with k.
        self.based_at(i).map(move |u| self.sigma[u])
    }

    pub fn index_of(&self, i: usize, j: usize) -> Option<usize> {
        if i >= self.base_n {
            return None;
        }
        let range = self.based_at(i);
        self.edges[range.clone()].binary_search(&(i, j)).ok().map(|k| range.start + k)
    }
}
