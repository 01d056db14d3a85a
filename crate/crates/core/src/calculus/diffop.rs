use super::field::{expect_len, Space};
use super::linop::LinOp;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{zero, Rational};
use crate::tangent::DirectedEdgeTable;

/// `Xφ(i) = Σ_{π(u)=i} X(u) dφ(u)`.
pub fn field_apply(table: &DirectedEdgeTable, x: &[Rational], phi: &[Rational]) -> Result<Vec<Rational>> {
    expect_len(x, table.len())?;
    expect_len(phi, table.base_n())?;
    Ok((0..table.base_n())
        .map(|i| table.based_at(i).fold(zero(), |acc, u| acc + &x[u] * (&phi[table.pi_plus(u)] - &phi[i])))
        .collect())
}

/// The operator of an integer field: `L(i,j) = X(ij)`, `L(i,i) = −Σ_{π(u)=i} X(u)`.
pub fn operator_of_field(table: &DirectedEdgeTable, x: &[i64]) -> Result<LinOp> {
    if x.len() != table.len() {
        return Err(Error::DimensionMismatch { expected: table.len(), found: x.len() });
    }
    let n = table.base_n();
    LinOp::from_triplets(
        (Space::G, n),
        (Space::G, n),
        (0..table.len()).flat_map(|u| [(table.pi(u), table.pi_plus(u), x[u]), (table.pi(u), table.pi(u), -x[u])]),
    )
}

/// Result of [`field_operator_bijection`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FirstOrder {
    /// `X(u) = L(π(u), π₊(u))`.
    Field(Vec<i64>),
    NotFirstOrder {
        witness: String,
    },
}

/// Result of [`diffop_order`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffOrder {
    Order(usize),
    NotDiffOp,
}

fn check_square(g: &Graph, l: &LinOp) -> Result<()> {
    let n = g.n();
    if l.domain().1 != n || l.codomain().1 != n {
        return Err(Error::DimensionMismatch { expected: n, found: l.domain().1.max(l.codomain().1) });
    }
    Ok(())
}

/// First row `i` and component `C` with `(L·1_C)(i) ≠ 0`.
fn constant_violation(g: &Graph, l: &LinOp) -> Option<(usize, Vec<usize>)> {
    let ids = g.component_ids();
    let comps = g.connected_components();
    for i in 0..g.n() {
        let mut sums = vec![0i64; comps.len()];
        for (j, v) in l.row(i) {
            sums[ids[j]] += v;
        }
        if let Some(c) = sums.iter().position(|&s| s != 0) {
            return Some((i, comps[c].clone()));
        }
    }
    None
}

/// Recovers the vector field of a first-order operator `C(G) → C(G)`.
///
/// First order means `L(i,j) = 0` when `d(i,j) > 1` and `L` annihilates
/// every function that is constant on each component.
pub fn field_operator_bijection(g: &Graph, l: &LinOp) -> Result<FirstOrder> {
    check_square(g, l)?;
    if let Some((i, j, v)) = l.entries().find(|&(i, j, _)| i != j && !g.has_edge(i, j)) {
        return Ok(FirstOrder::NotFirstOrder { witness: format!("L({i},{j})={v} outside distance 1") });
    }
    if let Some((i, comp)) = constant_violation(g, l) {
        return Ok(FirstOrder::NotFirstOrder {
            witness: format!("L does not annihilate the indicator of {comp:?} at vertex {i}"),
        });
    }
    let table = DirectedEdgeTable::new(g);
    Ok(FirstOrder::Field(table.edges().iter().map(|&(i, j)| l.get(i, j)).collect()))
}

/// Smallest `k` with `L(i,j) = 0` whenever `d(i,j) > k`, for operators that
/// annihilate componentwise constants. Entries between components rule out
/// every order.
pub fn diffop_order(g: &Graph, l: &LinOp) -> Result<DiffOrder> {
    check_square(g, l)?;
    if constant_violation(g, l).is_some() {
        return Ok(DiffOrder::NotDiffOp);
    }
    let dist = g.all_pairs_distances();
    let mut order = 0;
    for (i, j, _) in l.entries() {
        match dist[i][j] {
            Some(d) => order = order.max(d),
            None => return Ok(DiffOrder::NotDiffOp),
        }
    }
    Ok(DiffOrder::Order(order))
}
