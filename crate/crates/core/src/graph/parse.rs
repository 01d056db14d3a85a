use std::collections::{BTreeSet, HashMap, HashSet};

use super::Graph;
use crate::error::{Error, Result};

/// Parses a whitespace-separated edge list.
///
/// Lines starting with `#` and blank lines are skipped. Vertices are indexed
/// by the sorted order of their labels: numerically when every label is an
/// integer, lexicographically otherwise.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut pairs: Vec<(usize, String, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::MalformedLine { line: idx + 1, found: tokens.len() });
        }
        if tokens[0] == tokens[1] {
            return Err(Error::SelfLoop { line: idx + 1, label: tokens[0].to_string() });
        }
        pairs.push((idx + 1, tokens[0].to_string(), tokens[1].to_string()));
    }

    let distinct: BTreeSet<&str> = pairs.iter().flat_map(|(_, a, b)| [a.as_str(), b.as_str()]).collect();
    let mut labels: Vec<String> = distinct.into_iter().map(str::to_string).collect();
    let numeric: Option<Vec<i128>> = labels.iter().map(|l| l.parse::<i128>().ok()).collect();
    if let Some(values) = numeric {
        let mut keyed: Vec<(i128, String)> = values.into_iter().zip(labels).collect();
        keyed.sort();
        labels = keyed.into_iter().map(|(_, l)| l).collect();
    }
    let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();

    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(pairs.len());
    for (line, a, b) in &pairs {
        let (i, j) = (index[a.as_str()], index[b.as_str()]);
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(Error::DuplicateEdge { line: *line, a: a.clone(), b: b.clone() });
        }
        edges.push((i, j));
    }
    Graph::new(labels.len(), edges)?.with_labels(labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_fixture() {
        let g = parse_edge_list("1 2\n1 3\n1 4").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(g.labels().unwrap(), &["1", "2", "3", "4"]);
    }

    #[test]
    fn empty_input() {
        let g = parse_edge_list("").unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.edge_count(), 0);
        let g = parse_edge_list("# nothing\n\n   \n").unwrap();
        assert_eq!(g.n(), 0);
    }

    #[test]
    fn numeric_labels_sort_numerically() {
        let g = parse_edge_list("10 9\n9 2").unwrap();
        assert_eq!(g.labels().unwrap(), &["2", "9", "10"]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn mixed_labels_sort_lexicographically() {
        let g = parse_edge_list("b 10\na 9").unwrap();
        assert_eq!(g.labels().unwrap(), &["10", "9", "a", "b"]);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_edge_list("a b\nb a"), Err(Error::DuplicateEdge { line: 2, .. })));
        assert!(matches!(parse_edge_list("a a"), Err(Error::SelfLoop { line: 1, .. })));
        assert!(matches!(parse_edge_list("# c\na b c"), Err(Error::MalformedLine { line: 2, found: 3 })));
        assert!(matches!(parse_edge_list("a"), Err(Error::MalformedLine { line: 1, found: 1 })));
    }
}
