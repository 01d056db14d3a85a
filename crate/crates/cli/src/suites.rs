use clap::ValueEnum;
use gb_core::bochner::{b_integrated, b_matrix, bochner_terms, gamma2_check, verify_b_matrix, BochnerContext};
use gb_core::calculus::{
    build_operators, check_adjointness, product_rule_check, third_order_check_with, ThirdOrderContext,
};
use gb_core::rational::seeded_ints;
use gb_core::tangent::{build_cubical, lambda_line_graph, verify_counting, verify_extremal, verify_second_order};
use gb_core::{Check, Graph, Rational, Report, TangentGraph};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Counting,
    Extremal,
    Cubical,
    Calculus,
    Prop37,
    Bochner,
    Gamma2,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Counting,
        Suite::Extremal,
        Suite::Cubical,
        Suite::Calculus,
        Suite::Prop37,
        Suite::Bochner,
        Suite::Gamma2,
    ];

    pub fn expand(self) -> Vec<Suite> {
        if self == Suite::All {
            Self::EACH.to_vec()
        } else {
            vec![self]
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counting => "counting",
            Suite::Extremal => "extremal",
            Suite::Cubical => "cubical",
            Suite::Calculus => "calculus",
            Suite::Prop37 => "prop37",
            Suite::Bochner => "bochner",
            Suite::Gamma2 => "gamma2",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub check: String,
    pub witness: String,
}

/// One line of `check` output.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub suite: &'static str,
    pub graph: String,
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl CheckOutcome {
    pub fn new(suite: Suite, graph: String, checks: Report, elapsed_ms: u128) -> Self {
        let failures: Vec<Failure> = checks
            .failures()
            .map(|c| Failure { check: c.name.clone(), witness: c.witness.clone().unwrap_or_default() })
            .collect();
        Self { suite: suite.name(), graph, passed: failures.is_empty(), failures, checks: checks.checks, elapsed_ms }
    }
}

/// Trial `t` on graph `index` is seeded with `(seed ⊕ index) + t`.
fn field(seed: u64, index: usize, trial: usize, n: usize) -> Vec<Rational> {
    seeded_ints((seed ^ index as u64).wrapping_add(trial as u64), n)
}

fn error_report(name: &str, e: impl ToString) -> Report {
    let mut r = Report::new();
    r.record(name, false, || e.to_string());
    r
}

pub fn run_suite(suite: Suite, g: &Graph, index: usize, trials: usize, seed: u64) -> Report {
    let graph_seed = seed ^ index as u64;
    match suite {
        Suite::Counting => verify_counting(g),
        Suite::Extremal => {
            let mut r = verify_extremal(g).report;
            r.absorb("second_order", verify_second_order(g));
            r
        }
        Suite::Cubical => {
            let t = TangentGraph::t(g);
            let mut r = match build_cubical(&t) {
                Ok(cx) => cx.report(),
                Err(e) => return error_report("hypothesis", e),
            };
            match lambda_line_graph(&t) {
                Ok(l) => r.record("lambda_is_line_graph", l.matched, || "edge sets differ".into()),
                Err(e) => r.record("lambda_is_line_graph", false, || e.to_string()),
            }
            r
        }
        Suite::Calculus => {
            let mut r = Report::new();
            r.absorb("adjointness", check_adjointness(&build_operators(g), trials, graph_seed));
            r.absorb("product_rules", product_rule_check(g, trials, graph_seed));
            r
        }
        Suite::Prop37 => {
            let cx = ThirdOrderContext::new(g);
            per_trial(trials, |t| third_order_check_with(&cx, &field(seed, index, t, g.n())).map_err(|e| e.to_string()))
        }
        Suite::Bochner => {
            let cx = BochnerContext::new(g);
            let mut r = per_trial(trials, |t| {
                let phi = field(seed, index, t, g.n());
                let mut r = bochner_terms(&cx, &phi).map_err(|e| e.to_string())?.report;
                let psi = field(seed, index, t + trials, g.n());
                let (x, y) = (
                    cx.base.gradient(&phi).map_err(|e| e.to_string())?,
                    cx.base.gradient(&psi).map_err(|e| e.to_string())?,
                );
                r.absorb("integrated", b_integrated(&cx, &x, &y).map_err(|e| e.to_string())?.report);
                Ok(r)
            });
            r.absorb("b_matrix", verify_b_matrix(&cx, &b_matrix(g), trials, graph_seed));
            r
        }
        Suite::Gamma2 => {
            let cx = BochnerContext::new(g);
            per_trial(trials, |t| gamma2_check(&cx, &field(seed, index, t, g.n())).map_err(|e| e.to_string()))
        }
        Suite::All => unreachable!("expanded before dispatch"),
    }
}

fn per_trial(trials: usize, f: impl Fn(usize) -> Result<Report, String>) -> Report {
    let mut r = Report::new();
    for t in 0..trials {
        match f(t) {
            Ok(rep) => r.absorb(&format!("trial{t}"), rep),
            Err(e) => r.record(&format!("trial{t}"), false, || e),
        }
    }
    r
}
