use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::diffop::field_apply;
use super::field::{colon, scale_field};
use super::suite::{build_operators, OperatorSuite};
use crate::graph::Graph;
use crate::rational::{int, random_ints, Rational};
use crate::report::Report;

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn first_difference(a: &[Rational], b: &[Rational]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// The product rules for one triple `(φ, ψ, X)`, as `(name, first bad index)`.
pub fn product_rules_for(
    s: &OperatorSuite,
    phi: &[Rational],
    psi: &[Rational],
    x: &[Rational],
) -> [(&'static str, Option<usize>); 4] {
    let t = &s.table;
    let prod: Vec<Rational> = phi.iter().zip(psi).map(|(a, b)| a * b).collect();

    // Edgewise, straight from the definitions.
    let d = |f: &[Rational], u: usize| &f[t.pi_plus(u)] - &f[t.pi(u)];
    let leibniz = (0..t.len()).position(|u| {
        let i = t.pi(u);
        d(&prod, u) != &phi[i] * d(psi, u) + &psi[i] * d(phi, u) + d(phi, u) * d(psi, u)
    });

    let (gphi, gpsi) = (s.gradient(phi).expect("dims"), s.gradient(psi).expect("dims"));
    let rhs = add(
        &add(&scale_field(t, phi, &gpsi).expect("dims"), &scale_field(t, psi, &gphi).expect("dims")),
        &colon(&gphi, &gpsi).expect("dims"),
    );
    let gradient = first_difference(&s.gradient(&prod).expect("dims"), &rhs);

    let xpsi = field_apply(t, x, psi).expect("dims");
    let xphi = field_apply(t, x, phi).expect("dims");
    let triple = colon(&colon(x, &gphi).expect("dims"), &gpsi).expect("dims");
    let rhs: Vec<Rational> = (0..s.n())
        .map(|i| &phi[i] * &xpsi[i] + &psi[i] * &xphi[i])
        .zip(s.push(&triple).expect("dims"))
        .map(|(a, b)| a + b)
        .collect();
    let quadratic = first_difference(&field_apply(t, x, &prod).expect("dims"), &rhs);

    let sq: Vec<Rational> = phi.iter().map(|a| a * a).collect();
    let lphi = s.laplacian(phi).expect("dims");
    let grad_sq = s.push(&colon(&gphi, &gphi).expect("dims")).expect("dims");
    let rhs: Vec<Rational> = (0..s.n()).map(|i| int(2) * &phi[i] * &lphi[i] - int(2) * &grad_sq[i]).collect();
    let square = first_difference(&s.laplacian(&sq).expect("dims"), &rhs);

    [
        ("leibniz_edgewise", leibniz),
        ("gradient_product", gradient),
        ("quadratic_leibniz", quadratic),
        ("laplacian_of_square", square),
    ]
}

/// Checks, on random integer `φ, ψ, X`:
///
/// * `d(φψ)(u) = φ(πu)dψ(u) + ψ(πu)dφ(u) + dφ(u)dψ(u)`
/// * `∇(φψ) = φ·∇ψ + ψ·∇φ + ∇φ:∇ψ`
/// * `X(φψ) = φXψ + ψXφ + π(X:∇φ:∇ψ)`
/// * `Δ(φ²) = 2φΔφ − 2 Σ_{π(u)=i} |dφ(u)|²`
///
/// Trial `k` draws from seed `seed + k`.
pub fn product_rule_check(g: &Graph, trials: usize, seed: u64) -> Report {
    let s = build_operators(g);
    let mut bad: [Option<String>; 4] = Default::default();
    for k in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        let phi = random_ints(&mut rng, g.n());
        let psi = random_ints(&mut rng, g.n());
        let x = random_ints(&mut rng, s.table.len());
        for (slot, (_, pos)) in bad.iter_mut().zip(product_rules_for(&s, &phi, &psi, &x)) {
            if slot.is_none() {
                *slot = pos.map(|p| format!("trial {k}, index {p}"));
            }
        }
    }
    let names = ["leibniz_edgewise", "gradient_product", "quadratic_leibniz", "laplacian_of_square"];
    let mut r = Report::new();
    for (name, witness) in names.into_iter().zip(bad) {
        r.record_opt(name, witness);
    }
    r
}
