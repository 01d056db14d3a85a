//! Tangent graphs and an exact discrete calculus on finite simple graphs.
//!
//! * [`graph`]: simple graphs, parsing, generators, homomorphisms
//! * [`tangent`]: `G_*`, `tG`, `τG`, `t²G`, `tτG`, sections, differentials,
//!   the cubical complex of `tG`
//! * [`calculus`]: fields and the operators `d`, `∇`, `Div`, `Δ` as sparse
//!   integer matrices, first-order operators, Hessians
//! * [`bochner`]: the Bochner identity terms and the curvature form `B`
//!
//! All identities are checked in exact rational arithmetic.

pub mod bochner;
pub mod calculus;
pub mod corpus;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod rational;
pub mod report;
pub mod tangent;

pub use error::{Error, Result};
pub use graph::{Graph, VertexMap};
pub use rational::Rational;
pub use report::{Check, Report};
pub use tangent::{DirectedEdgeTable, Flavor, TangentGraph};
