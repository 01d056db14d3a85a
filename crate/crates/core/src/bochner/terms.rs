use serde::Serialize;

use crate::calculus::{
    build_operators, colon, hessian_norm, hessian_with, lifted_suite, LiftedSuite, OperatorSuite, SecondSection,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{format_vec, int, zero, Rational};
use crate::report::Report;
use crate::tangent::Flavor;

/// Base and `τG` operator suites shared by the curvature computations.
#[derive(Clone, Debug)]
pub struct BochnerContext {
    pub base: OperatorSuite,
    pub tau: LiftedSuite,
}

impl BochnerContext {
    pub fn new(g: &Graph) -> Self {
        Self { base: build_operators(g), tau: lifted_suite(g, Flavor::Tau).expect("tau lifts") }
    }

    pub fn graph(&self) -> &Graph {
        &self.base.graph
    }

    fn check_field(&self, x: &[Rational]) -> Result<()> {
        let n = self.base.table.len();
        if x.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: x.len() });
        }
        Ok(())
    }
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// `|∇φ|²(i) = Σ_{π(u)=i} |dφ(u)|²`.
pub fn grad_norm_sq(g: &Graph, phi: &[Rational]) -> Result<Vec<Rational>> {
    let s = build_operators(g);
    let d = s.gradient(phi)?;
    s.push(&colon(&d, &d)?)
}

/// `⟨X, Y⟩_{T_i}` for every `i`.
fn fiber_inner(cx: &BochnerContext, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    cx.base.push(&colon(x, y).expect("dims")).expect("dims")
}

/// `(Δ_τG − ∇Div) X`.
fn hodge_difference(cx: &BochnerContext, x: &[Rational]) -> Result<Vec<Rational>> {
    let a = cx.tau.suite.laplacian(x)?;
    let b = cx.base.gradient(&cx.base.divergence(x)?)?;
    Ok(sub(&a, &b))
}

/// The curvature form
///
/// `B(X,Y)(i) = ½⟨X,(Δ_τG − ∇Div)Y⟩_{T_i} + ½⟨Y,(Δ_τG − ∇Div)X⟩_{T_i} − 2⟨∇_τG X, ∇_τG Y⟩_{𝒯²_i}`
///
/// with the last product over the fibre `{a ∈ V_tτG : π²(a) = i}`.
pub fn b_pointwise(cx: &BochnerContext, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
    cx.check_field(x)?;
    cx.check_field(y)?;
    let xy = fiber_inner(cx, x, &hodge_difference(cx, y)?);
    let yx = fiber_inner(cx, y, &hodge_difference(cx, x)?);
    let gx = cx.tau.suite.gradient(x)?;
    let gy = cx.tau.suite.gradient(y)?;
    let inner = &cx.tau.suite.table;
    let table = &cx.base.table;
    let mut second = vec![zero(); cx.graph().n()];
    for a in 0..inner.len() {
        second[table.pi(inner.pi(a))] += &gx[a] * &gy[a];
    }
    Ok((0..cx.graph().n()).map(|i| half() * (&xy[i] + &yx[i]) - int(2) * &second[i]).collect())
}

/// All terms of `½Δ|∇φ|² = ⟨∇Δφ, ∇φ⟩ + |Hess_τG φ|² + B(∇φ, ∇φ)`, each
/// evaluated independently, with `residual = lhs − grad − hess − B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BochnerReport {
    pub lhs: Vec<Rational>,
    pub term_grad: Vec<Rational>,
    pub term_hess: Vec<Rational>,
    pub term_b: Vec<Rational>,
    pub residual: Vec<Rational>,
    /// `½[Δ|∇φ|² − π(Δ_τG(∇φ:∇φ))]`.
    pub transfer_defect: Vec<Rational>,
    pub report: Report,
}

#[derive(Clone, Debug, Serialize)]
pub struct BochnerReportJson {
    pub lhs: Vec<String>,
    pub term_grad: Vec<String>,
    pub term_hess: Vec<String>,
    pub term_b: Vec<String>,
    pub residual: Vec<String>,
    pub transfer_defect: Vec<String>,
    pub passed: bool,
    pub report: Report,
}

impl BochnerReport {
    pub fn to_json(&self) -> BochnerReportJson {
        BochnerReportJson {
            lhs: format_vec(&self.lhs),
            term_grad: format_vec(&self.term_grad),
            term_hess: format_vec(&self.term_hess),
            term_b: format_vec(&self.term_b),
            residual: format_vec(&self.residual),
            transfer_defect: format_vec(&self.transfer_defect),
            passed: self.report.passed(),
            report: self.report.clone(),
        }
    }
}

fn first_difference(a: &[Rational], b: &[Rational]) -> Option<String> {
    a.iter().zip(b).position(|(x, y)| x != y).map(|k| format!("index {k}: {} vs {}", a[k], b[k]))
}

/// Evaluates every term and checks:
///
/// * `residual_zero`: the identity itself
/// * `transfer_identity`: `Δ|∇φ|² = π(Δ_τG(∇φ:∇φ))`
/// * `tau_product_rule`: `Δ_τG(dφ)² = 2 dφ Δ_τG dφ − 2 Σ_{π(a)=u} |d²φ(a)|²`
/// * `residual_equals_transfer_defect`
/// * `transfer_defect_closed_form`: the defect equals `(deg − 1)·A|∇φ|² + (deg − Adeg)·|∇φ|²`
///
/// The second check fails whenever the defect is nonzero, which makes the
/// first fail too: `Δ_τG` sees all `Adeg(i)` neighbours of a fibre element,
/// while `Δ` on `|∇φ|²` sees the `deg(i)` neighbours of `i`.
pub fn bochner_terms(cx: &BochnerContext, phi: &[Rational]) -> Result<BochnerReport> {
    let s = &cx.base;
    let g = cx.graph();
    let grad = s.gradient(phi)?;
    let sq = colon(&grad, &grad)?;
    let norm = s.push(&sq)?;
    let lap_norm = s.laplacian(&norm)?;
    let lhs: Vec<Rational> = lap_norm.iter().map(|v| half() * v).collect();

    let term_grad = fiber_inner(cx, &s.gradient(&s.laplacian(phi)?)?, &grad);
    let hess: SecondSection = hessian_with(g, &cx.tau, phi)?;
    let term_hess = hessian_norm(&hess);
    let term_b = b_pointwise(cx, &grad, &grad)?;
    let residual: Vec<Rational> = (0..g.n()).map(|i| &lhs[i] - &term_grad[i] - &term_hess[i] - &term_b[i]).collect();

    let mut r = Report::new();
    r.record_opt(
        "residual_zero",
        residual.iter().position(|v| *v != zero()).map(|i| format!("vertex {}: {}", g.label(i), residual[i])),
    );

    let lap_tau_sq = cx.tau.suite.laplacian(&sq)?;
    let transferred = s.push(&lap_tau_sq)?;
    r.record_opt("transfer_identity", first_difference(&lap_norm, &transferred));

    let lap_tau_grad = cx.tau.suite.laplacian(&grad)?;
    let inner = &cx.tau.suite.table;
    let mut hess_fiber = vec![zero(); grad.len()];
    for a in 0..inner.len() {
        hess_fiber[inner.pi(a)] += &hess.values[a] * &hess.values[a];
    }
    let rhs: Vec<Rational> =
        (0..grad.len()).map(|u| int(2) * &grad[u] * &lap_tau_grad[u] - int(2) * &hess_fiber[u]).collect();
    r.record_opt("tau_product_rule", first_difference(&lap_tau_sq, &rhs));

    let transfer_defect: Vec<Rational> = lap_norm.iter().zip(&transferred).map(|(a, b)| half() * (a - b)).collect();
    r.record_opt("residual_equals_transfer_defect", first_difference(&residual, &transfer_defect));

    let a_norm = g.adjacency_apply(&norm)?;
    let adeg = g.adjacency_degree();
    let closed: Vec<Rational> = (0..g.n())
        .map(|i| {
            let d = g.degree(i) as i64;
            int(d - 1) * &a_norm[i] + int(d - adeg[i] as i64) * &norm[i]
        })
        .collect();
    r.record_opt("transfer_defect_closed_form", first_difference(&transfer_defect, &closed));

    Ok(BochnerReport { lhs, term_grad, term_hess, term_b, residual, transfer_defect, report: r })
}

/// `Σ_i B(X,Y)(i)` with its two cross-checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegratedB {
    pub value: Rational,
    pub report: Report,
}

/// Sums [`b_pointwise`] and checks it against `−⟨X, (Δ_τG + ∇Div) Y⟩`,
/// and `Δ_τG = Div_τG ∇_τG` as integer matrices.
pub fn b_integrated(cx: &BochnerContext, x: &[Rational], y: &[Rational]) -> Result<IntegratedB> {
    let value = b_pointwise(cx, x, y)?.into_iter().fold(zero(), |a, b| a + b);
    let hodge: Vec<Rational> = {
        let a = cx.tau.suite.laplacian(y)?;
        let b = cx.base.gradient(&cx.base.divergence(y)?)?;
        a.iter().zip(&b).map(|(p, q)| p + q).collect()
    };
    let other = -crate::rational::dot(x, &hodge);
    let mut r = Report::new();
    r.record("hodge_form", value == other, || format!("{value} vs {other}"));
    let t = &cx.tau.suite;
    let dd = t.grad.transpose().compose(&t.grad).expect("composable");
    r.record("tau_laplacian_is_div_grad", dd.same_entries(&t.lap), || "Div_tau grad_tau != Delta_tau".into());
    Ok(IntegratedB { value, report: r })
}
