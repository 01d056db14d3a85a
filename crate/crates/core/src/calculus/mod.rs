//! Exact discrete calculus: scalar and vector fields, the operators
//! `d`, `π`, `π₊`, `∇`, `Div`, `Δ` as sparse integer matrices, first-order
//! operators and their fields, product rules, third-order identities and
//! Hessians.

mod diffop;
mod field;
mod hessian;
mod linop;
mod rules;
mod suite;
mod third_order;

pub use diffop::{diffop_order, field_apply, field_operator_bijection, operator_of_field, DiffOrder, FirstOrder};
pub use field::{algebra_ops, bar, colon, scale_field, AlgebraOps, FieldJson, ScalarField, Space, VectorField};
pub use hessian::{hessian, hessian_norm, hessian_with, SecondSection};
pub use linop::LinOp;
pub use rules::{product_rule_check, product_rules_for};
pub use suite::{
    build_operators, check_adjointness, harmonic_check, lifted_suite, HarmonicCheck, LiftedSuite, OperatorSuite,
};
pub use third_order::{deg_fields, third_order_check, third_order_check_with, DegFields, ThirdOrderContext};
