use std::fmt;

use serde::Serialize;

use super::edges::DirectedEdgeTable;
use crate::error::{Error, Result};
use crate::graph::export::write_dot;
use crate::graph::Graph;

/// Which tangent construction produced a [`TangentGraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Flavor {
    /// `G_*`: edges `{ij, jk}`.
    #[serde(rename = "gstar")]
    Gstar,
    /// `tG`: end point of one directed edge is the base point of the other.
    #[serde(rename = "t")]
    T,
    /// `τG`: base points adjacent in `G`.
    #[serde(rename = "tau")]
    Tau,
    /// `t²G = t(tG)`.
    #[serde(rename = "t2")]
    T2,
    /// `tτG = t(τG)`.
    #[serde(rename = "t_tau")]
    TTau,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Gstar => "gstar",
            Flavor::T => "t",
            Flavor::Tau => "tau",
            Flavor::T2 => "t2",
            Flavor::TTau => "t_tau",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a vertex `α = uv` of an iterated tangent graph moves `u` to `v`.
///
/// With `u = ij` and `v = kl`: a forward translation has `j = k`, a backward
/// translation has `i = l`, and a reflection has `v = σ(u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Orientation {
    Forward,
    Reflection,
    Backward,
}

impl Orientation {
    /// `ω ∈ {+1, 0, −1}`.
    pub fn omega(self) -> i8 {
        match self {
            Orientation::Forward => 1,
            Orientation::Reflection => 0,
            Orientation::Backward => -1,
        }
    }
}

/// A vertex of `t²G` or `tτG`, i.e. a directed edge `u → v` of `tG` or `τG`,
/// written `ij/kl` in base vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tangent2Vertex {
    pub u: usize,
    pub v: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    /// Always present on `t²G`; on `tτG` only for pairs that are also `tG` edges.
    pub orientation: Option<Orientation>,
}

#[derive(Clone, Debug)]
struct Iterated {
    inner: TangentGraph,
    table: DirectedEdgeTable,
    vertices: Vec<Tangent2Vertex>,
}

/// A tangent graph of a base graph `G`.
///
/// For first-level flavors the vertices are the directed edges of `G`
/// (indices into [`Self::table`]). For iterated flavors they are the
/// directed edges of the inner tangent graph (indices into
/// [`Self::outer_table`]).
#[derive(Clone, Debug)]
pub struct TangentGraph {
    flavor: Flavor,
    base: Graph,
    table: DirectedEdgeTable,
    graph: Graph,
    iterated: Option<Box<Iterated>>,
}

/// `tG` adjacency: `u = ij` is adjacent to every `jk` and every `ki`.
pub(crate) fn t_adjacency(table: &DirectedEdgeTable) -> Vec<Vec<usize>> {
    (0..table.len())
        .map(|u| {
            let (i, j) = table.edge(u);
            let mut nb: Vec<usize> = table.based_at(j).chain(table.ending_at(i)).collect();
            nb.sort_unstable();
            nb.dedup();
            nb
        })
        .collect()
}

/// `τG` adjacency: `u` is adjacent to every directed edge based at a neighbour of `π(u)`.
pub(crate) fn tau_adjacency(g: &Graph, table: &DirectedEdgeTable) -> Vec<Vec<usize>> {
    (0..table.len()).map(|u| g.neighbors(table.pi(u)).iter().flat_map(|&k| table.based_at(k)).collect()).collect()
}

/// `G_*` adjacency from the literal rule `{ij, jk}`.
fn gstar_adjacency(table: &DirectedEdgeTable) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); table.len()];
    for u in 0..table.len() {
        for v in table.based_at(table.pi_plus(u)) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for nb in &mut adj {
        nb.sort_unstable();
        nb.dedup();
    }
    adj
}

impl TangentGraph {
    fn first_level(g: &Graph, flavor: Flavor) -> Self {
        let table = DirectedEdgeTable::new(g);
        let adjacency = match flavor {
            Flavor::Gstar => gstar_adjacency(&table),
            Flavor::T => t_adjacency(&table),
            Flavor::Tau => tau_adjacency(g, &table),
            Flavor::T2 | Flavor::TTau => unreachable!("iterated flavors are built by iterate"),
        };
        Self { flavor, base: g.clone(), table, graph: Graph::from_sorted_adjacency(adjacency), iterated: None }
    }

    /// The tangent graph `tG`.
    pub fn t(g: &Graph) -> Self {
        Self::first_level(g, Flavor::T)
    }

    /// The complete tangent graph `τG`.
    pub fn tau(g: &Graph) -> Self {
        Self::first_level(g, Flavor::Tau)
    }

    pub fn gstar(g: &Graph) -> Self {
        Self::first_level(g, Flavor::Gstar)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// The original graph `G`.
    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Directed edges of `G`.
    pub fn table(&self) -> &DirectedEdgeTable {
        &self.table
    }

    /// The tangent graph itself.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// For iterated flavors, the first-level graph (`tG` or `τG`).
    pub fn inner(&self) -> Option<&TangentGraph> {
        self.iterated.as_ref().map(|it| &it.inner)
    }

    /// For iterated flavors, the directed edges of the inner graph.
    pub fn outer_table(&self) -> Option<&DirectedEdgeTable> {
        self.iterated.as_ref().map(|it| &it.table)
    }

    /// For iterated flavors, the `ij/kl` decoration of every vertex.
    pub fn second_vertices(&self) -> Option<&[Tangent2Vertex]> {
        self.iterated.as_ref().map(|it| it.vertices.as_slice())
    }

    /// `i->j` for first-level vertices, `i->j/k->l` for iterated ones.
    pub fn vertex_name(&self, v: usize) -> String {
        let b = &self.base;
        match &self.iterated {
            None => {
                let (i, j) = self.table.edge(v);
                format!("{}->{}", b.label(i), b.label(j))
            }
            Some(it) => {
                let a = it.vertices[v];
                format!("{}->{}/{}->{}", b.label(a.i), b.label(a.j), b.label(a.k), b.label(a.l))
            }
        }
    }

    pub fn vertex_names(&self) -> Vec<String> {
        (0..self.graph.n()).map(|v| self.vertex_name(v)).collect()
    }

    pub fn to_json(&self) -> TangentGraphJson {
        TangentGraphJson {
            flavor: self.flavor,
            vertices: self.vertex_names(),
            edges: self.graph.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        let name = match self.flavor {
            Flavor::Gstar => "Gstar",
            Flavor::T => "tG",
            Flavor::Tau => "tauG",
            Flavor::T2 => "t2G",
            Flavor::TTau => "ttauG",
        };
        write_dot(name, &self.vertex_names(), self.graph.edges())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TangentGraphJson {
    pub flavor: Flavor,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

/// Builds a first-level tangent graph (`gstar`, `t` or `tau`).
pub fn build_tangent(g: &Graph, flavor: Flavor) -> Result<TangentGraph> {
    match flavor {
        Flavor::Gstar | Flavor::T | Flavor::Tau => Ok(TangentGraph::first_level(g, flavor)),
        other => Err(Error::UnsupportedIteration(other)),
    }
}

fn classify(u: usize, v: usize, table: &DirectedEdgeTable) -> Tangent2Vertex {
    let (i, j) = table.edge(u);
    let (k, l) = table.edge(v);
    let orientation = if v == table.sigma(u) {
        Some(Orientation::Reflection)
    } else if j == k {
        Some(Orientation::Forward)
    } else if i == l {
        Some(Orientation::Backward)
    } else {
        None
    };
    Tangent2Vertex { u, v, i, j, k, l, orientation }
}

/// Applies `t` to a first-level tangent graph: `t(tG) = t²G`, `t(τG) = tτG`.
pub fn iterate_tangent(tg: &TangentGraph) -> Result<TangentGraph> {
    let flavor = match tg.flavor {
        Flavor::T => Flavor::T2,
        Flavor::Tau => Flavor::TTau,
        other => return Err(Error::UnsupportedIteration(other)),
    };
    let outer = DirectedEdgeTable::new(&tg.graph);
    let graph = Graph::from_sorted_adjacency(t_adjacency(&outer));
    let vertices = (0..outer.len()).map(|a| classify(outer.pi(a), outer.pi_plus(a), &tg.table)).collect();
    Ok(TangentGraph {
        flavor,
        base: tg.base.clone(),
        table: tg.table.clone(),
        graph,
        iterated: Some(Box::new(Iterated { inner: tg.clone(), table: outer, vertices })),
    })
}

/// The `ω` decoration of every vertex of `t²G`.
pub fn orientation_classify(t2: &TangentGraph) -> Result<Vec<Tangent2Vertex>> {
    if t2.flavor != Flavor::T2 {
        return Err(Error::WrongFlavor { expected: Flavor::T2, found: t2.flavor });
    }
    Ok(t2.second_vertices().expect("iterated").to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, parse_edge_list, path};

    #[test]
    fn star_k13_is_k33() {
        let g = parse_edge_list("1 2\n1 3\n1 4").unwrap();
        let tg = TangentGraph::t(&g);
        let names = tg.vertex_names();
        let a: Vec<usize> =
            ["1->2", "1->3", "1->4"].iter().map(|s| names.iter().position(|n| n == s).unwrap()).collect();
        let b: Vec<usize> =
            ["2->1", "3->1", "4->1"].iter().map(|s| names.iter().position(|n| n == s).unwrap()).collect();
        assert_eq!(tg.graph().edge_count(), 9);
        for &x in &a {
            for &y in &a {
                assert!(!tg.graph().has_edge(x, y));
            }
            for &y in &b {
                assert!(tg.graph().has_edge(x, y));
            }
        }
        for &x in &b {
            for &y in &b {
                assert!(!tg.graph().has_edge(x, y));
            }
        }
    }

    #[test]
    fn triangle_counts() {
        let c3 = cycle(3);
        let t = TangentGraph::t(&c3);
        let tau = TangentGraph::tau(&c3);
        assert_eq!((t.graph().n(), t.graph().edge_count()), (6, 9));
        assert_eq!((tau.graph().n(), tau.graph().edge_count()), (6, 12));
        assert!(t.graph().same_structure(TangentGraph::gstar(&c3).graph()));
    }

    #[test]
    fn single_edge_is_fixed() {
        let k2 = complete(2);
        let t = TangentGraph::t(&k2);
        let tau = TangentGraph::tau(&k2);
        assert!(t.graph().same_structure(tau.graph()));
        assert_eq!(t.graph().edges(), &[(0, 1)]);
        let t2 = iterate_tangent(&t).unwrap();
        assert_eq!(t2.graph().n(), 2);
        assert_eq!(t2.graph().edge_count(), 1);
        assert_eq!(t2.vertex_names(), vec!["0->1/1->0", "1->0/0->1"]);
        let omegas: Vec<_> = orientation_classify(&t2).unwrap().iter().map(|a| a.orientation).collect();
        assert_eq!(omegas, vec![Some(Orientation::Reflection); 2]);
    }

    #[test]
    fn iterated_vertex_counts() {
        let c3 = cycle(3);
        assert_eq!(iterate_tangent(&TangentGraph::t(&c3)).unwrap().graph().n(), 18);
        assert_eq!(iterate_tangent(&TangentGraph::tau(&c3)).unwrap().graph().n(), 24);
    }

    #[test]
    fn triangle_orientations_at_12() {
        let g = parse_edge_list("1 2\n2 3\n3 1").unwrap();
        let t2 = iterate_tangent(&TangentGraph::t(&g)).unwrap();
        let u = t2.table().index_of(0, 1).unwrap();
        let mut seen: Vec<(String, i8)> = orientation_classify(&t2)
            .unwrap()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.u == u)
            .map(|(idx, a)| (t2.vertex_name(idx), a.orientation.unwrap().omega()))
            .collect();
        seen.sort();
        assert_eq!(
            seen,
            vec![("1->2/2->1".to_string(), 0), ("1->2/2->3".to_string(), 1), ("1->2/3->1".to_string(), -1)]
        );
    }

    #[test]
    fn iteration_errors() {
        let p = path(3);
        let t2 = iterate_tangent(&TangentGraph::t(&p)).unwrap();
        assert!(matches!(iterate_tangent(&t2), Err(Error::UnsupportedIteration(Flavor::T2))));
        assert!(matches!(iterate_tangent(&TangentGraph::gstar(&p)), Err(Error::UnsupportedIteration(_))));
        assert!(matches!(build_tangent(&p, Flavor::T2), Err(Error::UnsupportedIteration(_))));
        let tt = iterate_tangent(&TangentGraph::tau(&p)).unwrap();
        assert!(matches!(orientation_classify(&tt), Err(Error::WrongFlavor { .. })));
    }

    #[test]
    fn json_shape() {
        let t = TangentGraph::t(&complete(2));
        let j = serde_json::to_string(&t.to_json()).unwrap();
        assert_eq!(j, r#"{"flavor":"t","vertices":["0->1","1->0"],"edges":[[0,1]]}"#);
        assert!(t.to_dot().contains("\"0->1\" -- \"1->0\""));
    }
}
