use nalgebra::{DMatrix, SymmetricEigen};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::terms::{b_pointwise, BochnerContext};
use crate::calculus::{build_operators, deg_fields, operator_of_field, LinOp, Space};
use crate::graph::Graph;
use crate::rational::{dot, format, int, random_ints, to_f64, zero, Rational};
use crate::report::Report;
use crate::tangent::DirectedEdgeTable;

/// The operator `B` on `C(G)` with `⟨φ, Bψ⟩ = Σ_i B(∇φ, ∇ψ)(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureMatrix {
    pub graph: Graph,
    /// Dense, row-major.
    pub entries: Vec<Vec<Rational>>,
}

fn quarter_of(op: &LinOp, n: usize) -> Vec<Vec<Rational>> {
    let mut m = vec![vec![zero(); n]; n];
    for (r, c, v) in op.entries() {
        m[r][c] = Rational::new(v.into(), 4.into());
    }
    m
}

/// Integer matrix of `4B = −Δ³ + 2Δ·deg·Δ + 8L_{D_A} − 4Δ²`, where `L_{D_A}`
/// is the first-order operator of the field `D_A`.
///
/// This is `−4(Div Δ_τG ∇ + Δ²)` written with base-graph data only.
pub fn curvature_operator_times_4(g: &Graph) -> LinOp {
    let s = build_operators(g);
    let table = DirectedEdgeTable::new(g);
    let deg: Vec<i64> = g.degree_sequence().iter().map(|&d| d as i64).collect();
    let l_da = operator_of_field(&table, &deg_fields(g).d_a).expect("field length");
    let lap = &s.lap;
    let lap2 = lap.compose(lap).expect("square");
    let lap3 = lap.compose(&lap2).expect("square");
    let weighted = lap.compose(&LinOp::diagonal(Space::G, &deg)).and_then(|m| m.compose(lap)).expect("square");
    lap3.scale(-1)
        .add(&weighted.scale(2))
        .and_then(|m| m.add(&l_da.scale(8)))
        .and_then(|m| m.sub(&lap2.scale(4)))
        .expect("same shape")
}

/// Integer matrix of `4B' = Δ·Adeg·Δ² − 2Δ·(deg·Adeg)·Δ − 4Δ² + 8L_{D_A}`,
/// the operator obtained from the Adeg-weighted third-order formula.
/// It is not symmetric in general and does not represent the curvature form.
pub fn adeg_weighted_curvature_operator_times_4(g: &Graph) -> LinOp {
    let s = build_operators(g);
    let table = DirectedEdgeTable::new(g);
    let deg: Vec<i64> = g.degree_sequence().iter().map(|&d| d as i64).collect();
    let adeg: Vec<i64> = g.adjacency_degree().iter().map(|&d| d as i64).collect();
    let both: Vec<i64> = deg.iter().zip(&adeg).map(|(a, b)| a * b).collect();
    let l_da = operator_of_field(&table, &deg_fields(g).d_a).expect("field length");
    let lap = &s.lap;
    let lap2 = lap.compose(lap).expect("square");
    let first = lap.compose(&LinOp::diagonal(Space::G, &adeg)).and_then(|m| m.compose(&lap2)).expect("square");
    let second = lap.compose(&LinOp::diagonal(Space::G, &both)).and_then(|m| m.compose(lap)).expect("square");
    first
        .sub(&second.scale(2))
        .and_then(|m| m.sub(&lap2.scale(4)))
        .and_then(|m| m.add(&l_da.scale(8)))
        .expect("same shape")
}

pub fn b_matrix(g: &Graph) -> CurvatureMatrix {
    CurvatureMatrix { graph: g.clone(), entries: quarter_of(&curvature_operator_times_4(g), g.n()) }
}

impl CurvatureMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn apply(&self, psi: &[Rational]) -> Vec<Rational> {
        self.entries.iter().map(|row| dot(row, psi)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn trace(&self) -> Rational {
        (0..self.n()).fold(zero(), |acc, i| acc + &self.entries[i][i])
    }

    /// Dense CSV, rationals as `p/q`.
    pub fn to_csv(&self) -> String {
        self.entries.iter().map(|row| row.iter().map(format).collect::<Vec<_>>().join(",") + "\n").collect()
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        let n = self.n();
        DMatrix::from_fn(n, n, |i, j| to_f64(&self.entries[i][j]))
    }
}

/// Checks symmetry, that every component indicator lies in the kernel,
/// and `⟨φ, Bψ⟩ = Σ_i B(∇φ, ∇ψ)(i)` on random integer pairs
/// (trial `k` uses seed `seed + k`).
pub fn verify_b_matrix(cx: &BochnerContext, cm: &CurvatureMatrix, trials: usize, seed: u64) -> Report {
    let g = cx.graph();
    let mut r = Report::new();
    r.record("symmetric", cm.is_symmetric(), || "B(i,j) != B(j,i)".into());
    let bad = g.connected_components().into_iter().find(|comp| {
        let mut ind = vec![int(0); g.n()];
        for &i in comp {
            ind[i] = int(1);
        }
        cm.apply(&ind).iter().any(|v| *v != zero())
    });
    r.record_opt("kernel_contains_component_indicators", bad.map(|c| format!("component {c:?}")));
    let bad = (0..trials).find_map(|k| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        let phi = random_ints(&mut rng, g.n());
        let psi = random_ints(&mut rng, g.n());
        let quad = dot(&phi, &cm.apply(&psi));
        let (gp, gq) = (cx.base.gradient(&phi).expect("dims"), cx.base.gradient(&psi).expect("dims"));
        let summed = b_pointwise(cx, &gp, &gq).expect("dims").into_iter().fold(zero(), |a, b| a + b);
        (quad != summed).then(|| format!("trial {k}: {quad} vs {summed}"))
    });
    r.record_opt("quadratic_form", bad);
    r
}

/// Relative tolerance for [`curvature_spectrum`] residuals `‖Bv − λv‖ / ‖v‖`,
/// scaled by `max(1, ‖B‖)`.
pub const SPECTRUM_TOLERANCE: f64 = 1e-9;

/// Eigenvalues of `B` in floating point, ascending.
pub fn curvature_spectrum(cm: &CurvatureMatrix) -> Vec<f64> {
    if cm.n() == 0 {
        return Vec::new();
    }
    let mut ev: Vec<f64> = SymmetricEigen::new(cm.to_f64()).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Largest `‖Bv − λv‖ / ‖v‖` over the computed eigenpairs.
pub fn spectrum_residual(cm: &CurvatureMatrix) -> f64 {
    if cm.n() == 0 {
        return 0.0;
    }
    let m = cm.to_f64();
    let eig = SymmetricEigen::new(m.clone());
    (0..cm.n())
        .map(|k| {
            let v = eig.eigenvectors.column(k);
            (&m * v - v * eig.eigenvalues[k]).norm() / v.norm()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, disjoint_union, random_graph};
    use crate::rational::parse;

    #[test]
    fn small_matrices() {
        for g in [cycle(3), complete(2), disjoint_union(&complete(3), &complete(2))] {
            let cx = BochnerContext::new(&g);
            let cm = b_matrix(&g);
            let r = verify_b_matrix(&cx, &cm, 20, 1);
            assert!(r.passed(), "{r:?}");
        }
        let cm = b_matrix(&cycle(3));
        assert!(cm.apply(&vec![int(1); 3]).iter().all(|v| *v == zero()));
    }

    #[test]
    fn adeg_weighted_operator_is_not_the_form() {
        let g = random_graph(7, &parse("1/2").unwrap(), 3).unwrap();
        let printed = adeg_weighted_curvature_operator_times_4(&g);
        assert!(!printed.same_entries(&curvature_operator_times_4(&g)));
        assert!(!printed.is_symmetric());
        assert!(curvature_operator_times_4(&g).is_symmetric());
    }

    #[test]
    fn spectra() {
        assert!(curvature_spectrum(&b_matrix(&Graph::edgeless(0))).is_empty());
        let z = curvature_spectrum(&b_matrix(&Graph::edgeless(3)));
        assert_eq!(z, vec![0.0; 3]);
        let cm = b_matrix(&cycle(3));
        let ev = curvature_spectrum(&cm);
        assert_eq!(ev.len(), 3);
        assert!(ev.iter().any(|v| v.abs() < 1e-9));
        let g = random_graph(9, &parse("1/2").unwrap(), 4).unwrap();
        let cm = b_matrix(&g);
        let ev = curvature_spectrum(&cm);
        let norm = cm.to_f64().norm().max(1.0);
        assert!((ev.iter().sum::<f64>() - to_f64(&cm.trace())).abs() <= SPECTRUM_TOLERANCE * norm);
        assert!(spectrum_residual(&cm) <= SPECTRUM_TOLERANCE * norm);
    }
}
