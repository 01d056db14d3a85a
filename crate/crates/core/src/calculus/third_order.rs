use super::diffop::field_apply;
use super::field::expect_len;
use super::suite::{build_operators, lifted_suite, LiftedSuite, OperatorSuite};
use crate::error::Result;
use crate::graph::Graph;
use crate::rational::{int, Rational};
use crate::report::Report;
use crate::tangent::{DirectedEdgeTable, Flavor};

/// `D(u) = deg(π₊u) + deg(πu)` and `D_A(u) = Adeg(π₊u) + Adeg(πu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegFields {
    pub d: Vec<i64>,
    pub d_a: Vec<i64>,
}

pub fn deg_fields(g: &Graph) -> DegFields {
    deg_fields_on(g, &DirectedEdgeTable::new(g))
}

pub(crate) fn deg_fields_on(g: &Graph, table: &DirectedEdgeTable) -> DegFields {
    let deg = g.degree_sequence();
    let adeg = g.adjacency_degree();
    let sum = |f: &[usize], u: usize| (f[table.pi_plus(u)] + f[table.pi(u)]) as i64;
    DegFields {
        d: (0..table.len()).map(|u| sum(&deg, u)).collect(),
        d_a: (0..table.len()).map(|u| sum(&adeg, u)).collect(),
    }
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

fn lin(terms: &[(Rational, &[Rational])]) -> Vec<Rational> {
    let n = terms.first().map_or(0, |t| t.1.len());
    (0..n).map(|i| terms.iter().fold(int(0), |acc, (c, v)| acc + c * &v[i])).collect()
}

fn mismatch(lhs: &[Rational], rhs: &[Rational], name: impl Fn(usize) -> String) -> Option<String> {
    lhs.iter().zip(rhs).position(|(a, b)| a != b).map(|k| format!("at {}: {} vs {}", name(k), lhs[k], rhs[k]))
}

/// Precomputed operators for repeated [`third_order_check`] calls on one graph.
#[derive(Clone, Debug)]
pub struct ThirdOrderContext {
    pub base: OperatorSuite,
    pub t: LiftedSuite,
    pub tau: LiftedSuite,
    pub fields: DegFields,
}

impl ThirdOrderContext {
    pub fn new(g: &Graph) -> Self {
        let base = build_operators(g);
        let fields = deg_fields_on(g, &base.table);
        Self {
            t: lifted_suite(g, Flavor::T).expect("t lifts"),
            tau: lifted_suite(g, Flavor::Tau).expect("tau lifts"),
            base,
            fields,
        }
    }
}

/// Checks the third-order identities for one `φ`:
///
/// * `closed_form_t`: `Div Δ_tG ∇φ = Δ²φ − 4Δφ − 4Dφ`
/// * `intermediate_t`: `Δ_tG ∇φ(u) = dΔφ(u) + (2D(u) − 4) dφ(u)`
/// * `closed_form_tau`: `Div Δ_τG ∇φ = −¼Δ(Adeg·Δ²φ) + ½Δ(deg·Adeg·Δφ) − 2D_Aφ`
/// * `closed_form_tau_corrected`: `Div Δ_τG ∇φ = ¼Δ³φ − ½Δ(deg·Δφ) − 2D_Aφ`
/// * `intermediate_tau`: `Δ_τG ∇φ(u) = AΔφ(πu) + 2 Adeg(πu) dφ(u)`
///
/// `closed_form_tau` is the Adeg-weighted form; it fails already on `K₂`.
/// The corrected form follows from `intermediate_tau`.
pub fn third_order_check(g: &Graph, phi: &[Rational]) -> Result<Report> {
    third_order_check_with(&ThirdOrderContext::new(g), phi)
}

pub fn third_order_check_with(cx: &ThirdOrderContext, phi: &[Rational]) -> Result<Report> {
    let s = &cx.base;
    let g = &s.graph;
    let table = &s.table;
    expect_len(phi, g.n())?;
    let deg: Vec<Rational> = g.degree_sequence().iter().map(|&d| int(d as i64)).collect();
    let adeg: Vec<Rational> = g.adjacency_degree().iter().map(|&d| int(d as i64)).collect();
    let vname = |i: usize| format!("vertex {}", g.label(i));
    let ename = |u: usize| {
        let (i, j) = table.edge(u);
        format!("{}->{}", g.label(i), g.label(j))
    };
    let quarter = Rational::new(1.into(), 4.into());
    let half = Rational::new(1.into(), 2.into());

    let grad = s.gradient(phi)?;
    let l1 = s.laplacian(phi)?;
    let l2 = s.laplacian(&l1)?;
    let l3 = s.laplacian(&l2)?;
    let d_phi = field_apply(table, &ints(&cx.fields.d), phi)?;
    let da_phi = field_apply(table, &ints(&cx.fields.d_a), phi)?;
    let mut r = Report::new();

    let lt = cx.t.suite.laplacian(&grad)?;
    let lhs = s.divergence(&lt)?;
    let rhs = lin(&[(int(1), &l2), (int(-4), &l1), (int(-4), &d_phi)]);
    r.record_opt("closed_form_t", mismatch(&lhs, &rhs, vname));

    let dl1 = s.gradient(&l1)?;
    let rhs: Vec<Rational> = (0..table.len()).map(|u| &dl1[u] + int(2 * cx.fields.d[u] - 4) * &grad[u]).collect();
    r.record_opt("intermediate_t", mismatch(&lt, &rhs, ename));

    let ltau = cx.tau.suite.laplacian(&grad)?;
    let lhs = s.divergence(&ltau)?;
    let w1 = s.laplacian(&mul(&adeg, &l2))?;
    let w2 = s.laplacian(&mul(&mul(&deg, &adeg), &l1))?;
    let rhs = lin(&[(-quarter.clone(), &w1), (half.clone(), &w2), (int(-2), &da_phi)]);
    r.record_opt("closed_form_tau", mismatch(&lhs, &rhs, vname));

    let w = s.laplacian(&mul(&deg, &l1))?;
    let rhs = lin(&[(quarter, &l3), (-half, &w), (int(-2), &da_phi)]);
    r.record_opt("closed_form_tau_corrected", mismatch(&lhs, &rhs, vname));

    let a_l1 = g.adjacency_apply(&l1)?;
    let rhs: Vec<Rational> = (0..table.len())
        .map(|u| {
            let i = table.pi(u);
            &a_l1[i] + int(2) * &adeg[i] * &grad[u]
        })
        .collect();
    r.record_opt("intermediate_tau", mismatch(&ltau, &rhs, ename));
    Ok(r)
}
