use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{expect_len, Space};
use super::linop::LinOp;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{dot, random_ints, Rational};
use crate::report::Report;
use crate::tangent::{DirectedEdgeTable, Flavor, TangentGraph};

/// The first-order calculus of a graph as integer matrices.
///
/// * `d`: `dφ(u) = φ(π₊u) − φ(πu)`, also the gradient `∇`
/// * `pi_push`: `(πf)(i) = Σ_{π(u)=i} f(u)`
/// * `pi_plus_push`: `(π₊f)(i) = Σ_{π₊(u)=i} f(u)`
/// * `div = π₊ − π`, the adjoint of `∇`
/// * `lap = div ∘ grad`
///
/// The Laplacian is normalised as `Δφ(i) = −2 Σ_{π(u)=i} dφ(u)`: twice the
/// combinatorial Laplacian, positive semidefinite. Every constant downstream
/// depends on this factor.
#[derive(Clone, Debug)]
pub struct OperatorSuite {
    pub graph: Graph,
    pub table: DirectedEdgeTable,
    pub d: LinOp,
    pub pi_push: LinOp,
    pub pi_plus_push: LinOp,
    pub grad: LinOp,
    pub div: LinOp,
    pub lap: LinOp,
}

impl OperatorSuite {
    fn on(g: &Graph, vertex_space: Space, edge_space: Space) -> Self {
        let table = DirectedEdgeTable::new(g);
        let (vs, es) = ((vertex_space, g.n()), (edge_space, table.len()));
        let d = LinOp::from_triplets(
            vs,
            es,
            (0..table.len()).flat_map(|u| [(u, table.pi_plus(u), 1), (u, table.pi(u), -1)]),
        )
        .expect("indices in range");
        let push = |proj: &[usize]| {
            LinOp::from_triplets(es, vs, proj.iter().enumerate().map(|(u, &i)| (i, u, 1))).expect("indices in range")
        };
        let pi_push = push(table.pis());
        let pi_plus_push = push(table.pi_pluses());
        let div = pi_plus_push.sub(&pi_push).expect("same shape");
        let lap = div.compose(&d).expect("composable");
        Self { graph: g.clone(), grad: d.clone(), d, pi_push, pi_plus_push, div, lap, table }
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `∇φ`, one coefficient per directed edge.
    pub fn gradient(&self, phi: &[Rational]) -> Result<Vec<Rational>> {
        self.grad.apply(phi)
    }

    pub fn divergence(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.div.apply(x)
    }

    pub fn laplacian(&self, phi: &[Rational]) -> Result<Vec<Rational>> {
        self.lap.apply(phi)
    }

    /// Fibrewise sum `(πf)(i)`.
    pub fn push(&self, f: &[Rational]) -> Result<Vec<Rational>> {
        self.pi_push.apply(f)
    }
}

/// Operators on `G` and `X(G) ≅ C(tG)`.
pub fn build_operators(g: &Graph) -> OperatorSuite {
    OperatorSuite::on(g, Space::G, Space::TG)
}

/// The operator suite of `tG` or `τG`. Its vertex functions are vector
/// fields on the base graph, in [`DirectedEdgeTable`] order; its directed
/// edges are the vertices of `t²G` or `tτG`.
#[derive(Clone, Debug)]
pub struct LiftedSuite {
    pub tangent: TangentGraph,
    pub suite: OperatorSuite,
}

pub fn lifted_suite(g: &Graph, flavor: Flavor) -> Result<LiftedSuite> {
    let (tangent, vs, es) = match flavor {
        Flavor::T => (TangentGraph::t(g), Space::TG, Space::T2G),
        Flavor::Tau => (TangentGraph::tau(g), Space::TauG, Space::TTauG),
        other => return Err(Error::WrongFlavor { expected: Flavor::T, found: other }),
    };
    let suite = OperatorSuite::on(tangent.graph(), vs, es);
    Ok(LiftedSuite { tangent, suite })
}

/// `∇ᵀ = Div` as integer matrices, plus `⟨dφ, f⟩ = ⟨φ, (π₊ − π)f⟩` on
/// random integer pairs. Trial `k` draws from seed `seed + k`.
pub fn check_adjointness(suite: &OperatorSuite, trials: usize, seed: u64) -> Report {
    let mut r = Report::new();
    r.record("transpose", suite.grad.transpose().same_entries(&suite.div), || "grad^T != div".into());
    let bad = (0..trials).find_map(|k| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        let phi = random_ints(&mut rng, suite.n());
        let f = random_ints(&mut rng, suite.table.len());
        let lhs = dot(&suite.d.apply(&phi).expect("dims"), &f);
        let rhs = dot(&phi, &suite.div.apply(&f).expect("dims"));
        (lhs != rhs).then(|| format!("trial {k}: deviation {}", lhs - rhs))
    });
    r.record_opt("random_pairs", bad);
    r
}

/// Outcome of [`harmonic_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicCheck {
    /// `Δφ = 0`.
    pub harmonic: bool,
    /// `φ` is constant on every component.
    pub locally_constant: bool,
    /// An edge across which `φ` changes, if any.
    pub witness: Option<(usize, usize)>,
}

impl HarmonicCheck {
    /// The biconditional `Δφ = 0 ⇔ φ locally constant`.
    pub fn consistent(&self) -> bool {
        self.harmonic == self.locally_constant
    }
}

pub fn harmonic_check(suite: &OperatorSuite, phi: &[Rational]) -> Result<HarmonicCheck> {
    expect_len(phi, suite.n())?;
    let harmonic = suite.laplacian(phi)?.iter().all(Zero::is_zero);
    let witness = suite.graph.edges().iter().copied().find(|&(a, b)| phi[a] != phi[b]);
    Ok(HarmonicCheck { harmonic, locally_constant: witness.is_none(), witness })
}
