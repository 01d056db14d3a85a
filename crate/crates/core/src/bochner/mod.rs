//! The graph Bochner identity
//! `½Δ|∇φ|² = ⟨∇Δφ, ∇φ⟩ + |Hess_τG φ|² + B(∇φ, ∇φ)`:
//! its terms, the curvature form `B` pointwise, integrated and as an
//! operator on `C(G)`, and the Bakry–Émery forms `Γ`, `Γ₂`.

mod curvature;
mod gamma;
mod terms;

pub use curvature::{
    adeg_weighted_curvature_operator_times_4, b_matrix, curvature_operator_times_4, curvature_spectrum,
    spectrum_residual, verify_b_matrix, CurvatureMatrix, SPECTRUM_TOLERANCE,
};
pub use gamma::{gamma, gamma2, gamma2_check, Gamma};
pub use terms::{
    b_integrated, b_pointwise, bochner_terms, grad_norm_sq, BochnerContext, BochnerReport, BochnerReportJson,
    IntegratedB,
};
