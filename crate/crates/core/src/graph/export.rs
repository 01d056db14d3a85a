use serde::{Deserialize, Serialize};

use super::Graph;

/// `{"n": .., "edges": [[i, j], ..], "labels": [..]}` with edges sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub labels: Vec<String>,
}

pub(crate) fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Writes an undirected DOT graph from vertex names and index pairs.
pub(crate) fn write_dot(name: &str, vertices: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in vertices {
        out.push_str(&format!("  {};\n", dot_quote(v)));
    }
    for &(a, b) in edges {
        out.push_str(&format!("  {} -- {};\n", dot_quote(&vertices[a]), dot_quote(&vertices[b])));
    }
    out.push_str("}\n");
    out
}

impl Graph {
    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n(),
            edges: self.edges().iter().map(|&(i, j)| [i, j]).collect(),
            labels: (0..self.n()).map(|i| self.label(i)).collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        let names: Vec<String> = (0..self.n()).map(|i| self.label(i)).collect();
        write_dot("G", &names, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::parse_edge_list;

    #[test]
    fn json_and_dot() {
        let g = parse_edge_list("b a\nc b").unwrap();
        let j = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(j, r#"{"n":3,"edges":[[0,1],[1,2]],"labels":["a","b","c"]}"#);
        let dot = g.to_dot();
        assert!(dot.starts_with("graph G {\n"));
        assert!(dot.contains("  \"a\" -- \"b\";\n"));
        assert!(dot.contains("  \"b\" -- \"c\";\n"));
    }
}
