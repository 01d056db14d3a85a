use thiserror::Error;

use crate::tangent::Flavor;

/// Errors raised by graph construction, tangent constructions and the
/// calculus operators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: self-loop on vertex {label:?}")]
    SelfLoop { line: usize, label: String },

    #[error("line {line}: duplicate edge {{{a}, {b}}}")]
    DuplicateEdge { line: usize, a: String, b: String },

    #[error("line {line}: expected 2 vertex tokens, found {found}")]
    MalformedLine { line: usize, found: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid probability {0}; expected a rational in [0, 1]")]
    InvalidProbability(String),

    #[error("cannot iterate a tangent graph of flavor {0}")]
    UnsupportedIteration(Flavor),

    #[error("expected a tangent graph of flavor {expected}, found {found}")]
    WrongFlavor { expected: Flavor, found: Flavor },

    #[error("not a homomorphism: edge {{{0}, {1}}} is not mapped to an edge")]
    NotAHomomorphism(usize, usize),

    #[error("vertex {0} is isolated, so no vertex section exists")]
    IsolatedVertex(usize),

    #[error("{count} vertex sections exceed the enumeration limit {limit}; sample or force")]
    TooManySections { count: String, limit: u64 },

    #[error("hypothesis violated: component {component:?} is a single edge or an isolated vertex")]
    HypothesisViolated { component: Vec<usize> },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
