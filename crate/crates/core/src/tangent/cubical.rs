use std::collections::BTreeSet;

use serde::Serialize;

use super::build::{Flavor, TangentGraph};
use crate::error::{Error, Result};
use crate::gf2::{rank, row_from};
use crate::graph::Graph;
use crate::report::Report;

/// `tG` as a 2-dimensional cubical complex over GF(2).
///
/// Faces are unordered pairs `{u, v}` with `π(u) = π(v)`; the face `C(u, v)`
/// is the 4-cycle `u – ū – v – v̄ – u`.
#[derive(Clone, Debug)]
pub struct CubicalComplex {
    tangent: TangentGraph,
    faces: Vec<(usize, usize)>,
    rank_boundary1: usize,
    rank_boundary2: usize,
    boundary_squared_zero: bool,
}

fn check_hypothesis(tg: &TangentGraph) -> Result<()> {
    if tg.flavor() != Flavor::T {
        return Err(Error::WrongFlavor { expected: Flavor::T, found: tg.flavor() });
    }
    match tg.base().degenerate_components().into_iter().next() {
        Some(component) => Err(Error::HypothesisViolated { component }),
        None => Ok(()),
    }
}

fn faces_of(tg: &TangentGraph) -> Vec<(usize, usize)> {
    let table = tg.table();
    (0..table.base_n())
        .flat_map(|i| {
            let r = table.based_at(i);
            r.clone().flat_map(move |u| (u + 1..r.end).map(move |v| (u, v)))
        })
        .collect()
}

impl CubicalComplex {
    pub fn tangent(&self) -> &TangentGraph {
        &self.tangent
    }

    pub fn faces(&self) -> &[(usize, usize)] {
        &self.faces
    }

    /// The four edges of `C(u, v)`: `{u,ū}`, `{v,v̄}`, `{ū,v}`, `{u,v̄}`.
    pub fn face_boundary(&self, face: (usize, usize)) -> [(usize, usize); 4] {
        let table = self.tangent.table();
        let (u, v) = face;
        let (ub, vb) = (table.sigma(u), table.sigma(v));
        let e = |a: usize, b: usize| (a.min(b), a.max(b));
        [e(u, ub), e(v, vb), e(ub, v), e(u, vb)]
    }

    pub fn rank_boundary1(&self) -> usize {
        self.rank_boundary1
    }

    pub fn rank_boundary2(&self) -> usize {
        self.rank_boundary2
    }

    pub fn boundary_squared_zero(&self) -> bool {
        self.boundary_squared_zero
    }

    /// `rank ∂₁ + rank ∂₂ = |E_tG|`.
    pub fn is_exact(&self) -> bool {
        self.rank_boundary1 + self.rank_boundary2 == self.tangent.graph().edge_count()
    }

    /// `dim H₁ = |E_tG| − rank ∂₁ − rank ∂₂` over GF(2).
    pub fn homology_dim(&self) -> usize {
        self.tangent.graph().edge_count() - self.rank_boundary1 - self.rank_boundary2
    }

    pub fn report(&self) -> Report {
        let g = self.tangent.graph();
        let mut r = Report::new();
        let not_cycle = self.faces.iter().find(|&&f| {
            let b = self.face_boundary(f);
            let distinct: BTreeSet<_> = b.iter().collect();
            distinct.len() != 4 || !b.iter().all(|&(a, c)| g.has_edge(a, c))
        });
        r.record_opt("faces_are_4_cycles", not_cycle.map(|&(u, v)| self.face_name(u, v)));

        let covered: BTreeSet<(usize, usize)> = self.faces.iter().flat_map(|&f| self.face_boundary(f)).collect();
        let uncovered = g.edges().iter().find(|e| !covered.contains(e));
        r.record_opt(
            "union_of_faces_is_tangent_graph",
            uncovered.map(|&(a, b)| format!("{{{}, {}}}", self.tangent.vertex_name(a), self.tangent.vertex_name(b))),
        );
        r.record("boundary_squared_zero", self.boundary_squared_zero, || "d1 d2 != 0".into());
        r.record("exact_at_1_chains", self.is_exact(), || {
            format!(
                "rank d1={} rank d2={} |E_tG|={} dim H1={}",
                self.rank_boundary1,
                self.rank_boundary2,
                g.edge_count(),
                self.homology_dim()
            )
        });
        r
    }

    fn face_name(&self, u: usize, v: usize) -> String {
        format!("{{{}, {}}}", self.tangent.vertex_name(u), self.tangent.vertex_name(v))
    }

    pub fn to_json(&self) -> CubicalJson {
        CubicalJson {
            vertices: self.tangent.graph().n(),
            edges: self.tangent.graph().edge_count(),
            faces: self
                .faces
                .iter()
                .map(|&(u, v)| [self.tangent.vertex_name(u), self.tangent.vertex_name(v)])
                .collect(),
            rank_boundary1: self.rank_boundary1,
            rank_boundary2: self.rank_boundary2,
            boundary_squared_zero: self.boundary_squared_zero,
            exact: self.is_exact(),
            homology_dim: self.homology_dim(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CubicalJson {
    pub vertices: usize,
    pub edges: usize,
    pub faces: Vec<[String; 2]>,
    pub rank_boundary1: usize,
    pub rank_boundary2: usize,
    pub boundary_squared_zero: bool,
    pub exact: bool,
    pub homology_dim: usize,
}

/// Builds the cubical complex of `tG`. No component of the base graph may
/// be a single edge or an isolated vertex.
pub fn build_cubical(tg: &TangentGraph) -> Result<CubicalComplex> {
    check_hypothesis(tg)?;
    let g = tg.graph();
    let (nv, ne) = (g.n(), g.edge_count());
    let d1: Vec<_> = g.edges().iter().map(|&(a, b)| row_from(nv, [a, b])).collect();
    let edge_index = |e: (usize, usize)| g.edges().binary_search(&e).expect("face edge in tG");

    let mut cx = CubicalComplex {
        tangent: tg.clone(),
        faces: faces_of(tg),
        rank_boundary1: 0,
        rank_boundary2: 0,
        boundary_squared_zero: true,
    };
    let mut d2 = Vec::with_capacity(cx.faces.len());
    for &f in &cx.faces {
        let edges = cx.face_boundary(f).map(edge_index);
        let mut image = row_from(nv, []);
        for &e in &edges {
            image.xor_assign(&d1[e]);
        }
        cx.boundary_squared_zero &= image.is_zero();
        d2.push(row_from(ne, edges));
    }
    cx.rank_boundary1 = rank(d1);
    cx.rank_boundary2 = rank(d2);
    Ok(cx)
}

/// `λG` (reflection pairs `{u, ū}` joined along faces) beside the line graph `lG`.
#[derive(Clone, Debug)]
pub struct LambdaLine {
    /// Vertices are reflection pairs, indexed by their smaller directed edge.
    pub lambda: Graph,
    pub line: Graph,
    /// `λG` vertex to base edge index under `{u, ū} ↦ {π(u), π₊(u)}`.
    pub bijection: Vec<usize>,
    pub matched: bool,
}

/// The line graph: base edges adjacent when they share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut pairs = Vec::new();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            let (x, y) = (edges[a], edges[b]);
            if x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1 {
                pairs.push((a, b));
            }
        }
    }
    Graph::new(edges.len(), pairs).expect("line graph is simple")
}

/// Builds `λG` from the faces of `tG` and compares it with `lG` under the
/// canonical bijection.
pub fn lambda_line_graph(tg: &TangentGraph) -> Result<LambdaLine> {
    check_hypothesis(tg)?;
    let table = tg.table();
    let reps: Vec<usize> = (0..table.len()).filter(|&u| u < table.sigma(u)).collect();
    let rep_index = |u: usize| reps.binary_search(&u.min(table.sigma(u))).expect("representative");
    let lambda_edges: BTreeSet<(usize, usize)> = faces_of(tg)
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (rep_index(u), rep_index(v));
            (a.min(b), a.max(b))
        })
        .collect();
    let lambda = Graph::new(reps.len(), lambda_edges).expect("λG is simple");

    let base = tg.base();
    let bijection: Vec<usize> = reps
        .iter()
        .map(|&u| {
            let (i, j) = table.edge(u);
            base.edges().binary_search(&(i.min(j), i.max(j))).expect("base edge")
        })
        .collect();
    let line = line_graph(base);
    let mapped: BTreeSet<(usize, usize)> = lambda
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (bijection[a], bijection[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    let matched = mapped.into_iter().eq(line.edges().iter().copied());
    Ok(LambdaLine { lambda, line, bijection, matched })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, parse_edge_list, path, random_graph};
    use crate::rational::parse;
    use crate::tangent::iterate_tangent;

    #[test]
    fn triangle_faces() {
        let cx = build_cubical(&TangentGraph::t(&cycle(3))).unwrap();
        assert_eq!(cx.faces().len(), 3);
        let r = cx.report();
        assert!(r.check_passed("faces_are_4_cycles"));
        assert!(r.check_passed("union_of_faces_is_tangent_graph"));
        assert!(r.check_passed("boundary_squared_zero"));
        assert_eq!((cx.rank_boundary1(), cx.rank_boundary2()), (5, 3));
        assert_eq!(cx.homology_dim(), 1);
    }

    #[test]
    fn star_faces_at_centre() {
        let k13 = parse_edge_list("1 2\n1 3\n1 4").unwrap();
        let cx = build_cubical(&TangentGraph::t(&k13)).unwrap();
        let names: Vec<_> = cx.to_json().faces;
        assert_eq!(names.len(), 3);
        assert!(names.iter().all(|f| f[0].starts_with("1->") && f[1].starts_with("1->")));
        assert!(cx.boundary_squared_zero());
    }

    #[test]
    fn paths_are_exact() {
        for n in [3, 4, 5] {
            let cx = build_cubical(&TangentGraph::t(&path(n))).unwrap();
            assert!(cx.report().passed(), "P{n}");
        }
    }

    #[test]
    fn hypothesis() {
        let err = build_cubical(&TangentGraph::t(&complete(2))).unwrap_err();
        assert_eq!(err, Error::HypothesisViolated { component: vec![0, 1] });
        assert!(matches!(build_cubical(&TangentGraph::t(&Graph::edgeless(1))), Err(Error::HypothesisViolated { .. })));
        assert!(build_cubical(&TangentGraph::t(&Graph::edgeless(0))).is_ok());
        assert!(matches!(lambda_line_graph(&TangentGraph::t(&complete(2))), Err(Error::HypothesisViolated { .. })));
        let t2 = iterate_tangent(&TangentGraph::t(&cycle(3))).unwrap();
        assert!(matches!(build_cubical(&t2), Err(Error::WrongFlavor { .. })));
    }

    #[test]
    fn lambda_is_line_graph() {
        let c3 = lambda_line_graph(&TangentGraph::t(&cycle(3))).unwrap();
        assert!(c3.matched && c3.lambda.same_structure(&cycle(3)));
        let k13 = parse_edge_list("1 2\n1 3\n1 4").unwrap();
        let s = lambda_line_graph(&TangentGraph::t(&k13)).unwrap();
        assert!(s.matched && s.line.same_structure(&cycle(3)));
        let g = random_graph(8, &parse("1/2").unwrap(), 11).unwrap();
        if g.degenerate_components().is_empty() {
            assert!(lambda_line_graph(&TangentGraph::t(&g)).unwrap().matched);
        }
    }
}
