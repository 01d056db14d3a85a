use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_vec, parse, Rational};
use crate::tangent::DirectedEdgeTable;

/// The graph a field or operator lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Space {
    #[serde(rename = "G")]
    G,
    #[serde(rename = "tG")]
    TG,
    #[serde(rename = "tauG")]
    TauG,
    #[serde(rename = "t2G")]
    T2G,
    #[serde(rename = "ttauG")]
    TTauG,
}

impl Space {
    pub fn as_str(self) -> &'static str {
        match self {
            Space::G => "G",
            Space::TG => "tG",
            Space::TauG => "tauG",
            Space::T2G => "t2G",
            Space::TTauG => "ttauG",
        }
    }

    /// `tG` and `τG` share the vertex set `V_*`, so operators between them compose.
    pub fn same_vertices(self, other: Space) -> bool {
        let shared = |s: Space| if s == Space::TauG { Space::TG } else { s };
        shared(self) == shared(other)
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A function on the vertices of some graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarField {
    pub space: Space,
    pub values: Vec<Rational>,
}

/// A vector field on `G`: one coefficient per directed edge, in
/// [`DirectedEdgeTable`] order. Identified with a function on `tG`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    pub values: Vec<Rational>,
}

/// `{"space": label, "values": ["p/q", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub space: Space,
    pub values: Vec<String>,
}

fn parse_values(values: &[String]) -> Result<Vec<Rational>> {
    values.iter().map(|v| parse(v)).collect()
}

impl ScalarField {
    pub fn new(space: Space, values: Vec<Rational>) -> Self {
        Self { space, values }
    }

    pub fn to_json(&self) -> FieldJson {
        FieldJson { space: self.space, values: format_vec(&self.values) }
    }

    pub fn from_json(json: &FieldJson) -> Result<Self> {
        Ok(Self { space: json.space, values: parse_values(&json.values)? })
    }
}

impl VectorField {
    pub fn new(values: Vec<Rational>) -> Self {
        Self { values }
    }

    pub fn to_json(&self) -> FieldJson {
        FieldJson { space: Space::TG, values: format_vec(&self.values) }
    }

    pub fn from_json(json: &FieldJson) -> Result<Self> {
        if json.space != Space::TG {
            return Err(Error::Parse(format!("vector field must live on tG, not {}", json.space)));
        }
        Ok(Self { values: parse_values(&json.values)? })
    }
}

pub(crate) fn expect_len(values: &[Rational], expected: usize) -> Result<()> {
    if values.len() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found: values.len() })
    }
}

/// `(φ·X)(u) = φ(π(u)) X(u)`.
pub fn scale_field(table: &DirectedEdgeTable, phi: &[Rational], x: &[Rational]) -> Result<Vec<Rational>> {
    expect_len(phi, table.base_n())?;
    expect_len(x, table.len())?;
    Ok(x.iter().enumerate().map(|(u, xu)| &phi[table.pi(u)] * xu).collect())
}

/// `(X:Y)(u) = X(u) Y(u)`.
pub fn colon(x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
    expect_len(y, x.len())?;
    Ok(x.iter().zip(y).map(|(a, b)| a * b).collect())
}

/// `X̄(u) = X(σ(u))`.
pub fn bar(table: &DirectedEdgeTable, x: &[Rational]) -> Result<Vec<Rational>> {
    expect_len(x, table.len())?;
    Ok((0..table.len()).map(|u| x[table.sigma(u)].clone()).collect())
}

/// `φ·X`, `X:Y` and `X̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraOps {
    pub scaled: Vec<Rational>,
    pub colon: Vec<Rational>,
    pub bar: Vec<Rational>,
}

pub fn algebra_ops(table: &DirectedEdgeTable, phi: &[Rational], x: &[Rational], y: &[Rational]) -> Result<AlgebraOps> {
    Ok(AlgebraOps { scaled: scale_field(table, phi, x)?, colon: colon(x, y)?, bar: bar(table, x)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;
    use crate::rational::vec_from_ints;

    #[test]
    fn single_edge_algebra() {
        let table = DirectedEdgeTable::new(&complete(2));
        let ops =
            algebra_ops(&table, &vec_from_ints(&[2, 5]), &vec_from_ints(&[1, 1]), &vec_from_ints(&[0, 0])).unwrap();
        assert_eq!(ops.scaled, vec_from_ints(&[2, 5]));
        assert_eq!(ops.colon, vec_from_ints(&[0, 0]));
        assert_eq!(bar(&table, &vec_from_ints(&[3, 4])).unwrap(), vec_from_ints(&[4, 3]));
        assert!(matches!(colon(&vec_from_ints(&[1]), &[]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn json_round_trip() {
        let f = ScalarField::new(Space::G, vec![parse("1/2").unwrap(), parse("-4/2").unwrap()]);
        let j = f.to_json();
        assert_eq!(serde_json::to_string(&j).unwrap(), r#"{"space":"G","values":["1/2","-2"]}"#);
        assert_eq!(ScalarField::from_json(&j).unwrap(), f);
        assert!(Space::TG.same_vertices(Space::TauG));
        assert!(!Space::G.same_vertices(Space::TG));
    }
}
