use super::terms::{b_pointwise, BochnerContext};
use crate::calculus::{colon, hessian_norm, hessian_with};
use crate::error::Result;
use crate::graph::Graph;
use crate::rational::{int, Rational};
use crate::report::Report;

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// `Γ(φ,ψ) = ½[Δ(φψ) − φΔψ − ψΔφ]`, with its check against `−⟨∇φ, ∇ψ⟩_{T_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gamma {
    pub values: Vec<Rational>,
    pub report: Report,
}

pub fn gamma(cx: &BochnerContext, phi: &[Rational], psi: &[Rational]) -> Result<Gamma> {
    let s = &cx.base;
    let prod: Vec<Rational> = phi.iter().zip(psi).map(|(a, b)| a * b).collect();
    let (lp, lq, lpq) = (s.laplacian(phi)?, s.laplacian(psi)?, s.laplacian(&prod)?);
    let values: Vec<Rational> =
        (0..phi.len()).map(|i| half() * (&lpq[i] - &phi[i] * &lq[i] - &psi[i] * &lp[i])).collect();
    let inner = s.push(&colon(&s.gradient(phi)?, &s.gradient(psi)?)?)?;
    let mut r = Report::new();
    let bad = (0..values.len()).find(|&i| values[i] != -&inner[i]);
    r.record_opt("gradient_form", bad.map(|i| format!("vertex {i}: {} vs {}", values[i], -&inner[i])));
    Ok(Gamma { values, report: r })
}

/// `Γ₂(φ,ψ) = ½[ΔΓ(φ,ψ) − Γ(φ,Δψ) − Γ(ψ,Δφ)]`.
pub fn gamma2(cx: &BochnerContext, phi: &[Rational], psi: &[Rational]) -> Result<Vec<Rational>> {
    let s = &cx.base;
    let g = gamma(cx, phi, psi)?.values;
    let lg = s.laplacian(&g)?;
    let a = gamma(cx, phi, &s.laplacian(psi)?)?.values;
    let b = gamma(cx, psi, &s.laplacian(phi)?)?.values;
    Ok((0..g.len()).map(|i| half() * (&lg[i] - &a[i] - &b[i])).collect())
}

/// Compares `Γ₂(φ,φ)` with the curvature terms:
///
/// * `bochner_equivalence`: `Γ₂(φ,φ) = −|Hess_τG φ|² − B(∇φ,∇φ)`
/// * `equivalence_up_to_transfer_defect`: `Γ₂(φ,φ) = −|Hess_τG φ|² − B(∇φ,∇φ) − δ`
///   with `δ = (deg − 1)·A|∇φ|² + (deg − Adeg)·|∇φ|²`
/// * `gamma_gradient_form`: `Γ(φ,φ) = −|∇φ|²`
///
/// The first holds exactly when `δ` vanishes.
pub fn gamma2_check(cx: &BochnerContext, phi: &[Rational]) -> Result<Report> {
    let g: &Graph = cx.graph();
    let g2 = gamma2(cx, phi, phi)?;
    let grad = cx.base.gradient(phi)?;
    let hess = hessian_norm(&hessian_with(g, &cx.tau, phi)?);
    let b = b_pointwise(cx, &grad, &grad)?;
    let norm = cx.base.push(&colon(&grad, &grad)?)?;
    let a_norm = g.adjacency_apply(&norm)?;
    let adeg = g.adjacency_degree();
    let delta: Vec<Rational> = (0..g.n())
        .map(|i| {
            let d = g.degree(i) as i64;
            int(d - 1) * &a_norm[i] + int(d - adeg[i] as i64) * &norm[i]
        })
        .collect();

    let mut r = Report::new();
    let bad = (0..g.n()).find(|&i| g2[i] != -&hess[i] - &b[i]);
    r.record_opt(
        "bochner_equivalence",
        bad.map(|i| format!("vertex {}: {} vs {}", g.label(i), g2[i], -&hess[i] - &b[i])),
    );
    let bad = (0..g.n()).find(|&i| g2[i] != -&hess[i] - &b[i] - &delta[i]);
    r.record_opt("equivalence_up_to_transfer_defect", bad.map(|i| format!("vertex {}", g.label(i))));
    let gm = gamma(cx, phi, phi)?;
    let bad = (0..g.n()).find(|&i| gm.values[i] != -&norm[i]);
    r.record_opt("gamma_gradient_form", bad.map(|i| format!("vertex {}", g.label(i))));
    Ok(r)
}
