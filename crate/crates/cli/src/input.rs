use std::fs;
use std::io::Read;

use gb_core::corpus::{random_corpus, small_corpus, CorpusEntry};
use gb_core::graph::{parse_edge_list, random_graph};
use gb_core::rational::{parse, parse_probability};
use gb_core::{Graph, Rational};
use serde_json::Value;

/// Vertex bound of `--corpus small`.
pub const SMALL_MAX_N: usize = 5;

/// A path, `-` for stdin, or `er:n:p:seed`.
pub fn load_graph(spec: &str) -> Result<Graph, String> {
    if let Some(rest) = spec.strip_prefix("er:") {
        let parts: Vec<&str> = rest.split(':').collect();
        let [n, p, seed] = parts[..] else {
            return Err(format!("generator {spec:?}: expected er:n:p:seed"));
        };
        let n = n.parse::<usize>().map_err(|e| format!("generator {spec:?}: n: {e}"))?;
        let p = parse_probability(p).map_err(|e| format!("generator {spec:?}: {e}"))?;
        let seed = seed.parse::<u64>().map_err(|e| format!("generator {spec:?}: seed: {e}"))?;
        return random_graph(n, &p, seed).map_err(|e| e.to_string());
    }
    let text = read_text(spec)?;
    parse_edge_list(&text).map_err(|e| format!("{spec}: {e}"))
}

fn read_text(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

/// `small` or `random:count:n:p`.
pub fn load_corpus(spec: &str, seed: u64) -> Result<Vec<CorpusEntry>, String> {
    if spec == "small" {
        return Ok(small_corpus(SMALL_MAX_N));
    }
    let bad = || format!("corpus {spec:?}: expected small or random:count:n:p");
    let rest = spec.strip_prefix("random:").ok_or_else(bad)?;
    let parts: Vec<&str> = rest.split(':').collect();
    let [count, n, p] = parts[..] else { return Err(bad()) };
    let count = count.parse::<usize>().map_err(|_| bad())?;
    let n = n.parse::<usize>().map_err(|_| bad())?;
    let p = parse_probability(p).map_err(|e| format!("corpus {spec:?}: {e}"))?;
    random_corpus(count, n, &p, seed).map_err(|e| e.to_string())
}

/// A JSON array of rationals (numbers or `"p/q"` strings), or a field
/// object `{"space": .., "values": [..]}`.
pub fn load_phi(path: &str, n: usize) -> Result<Vec<Rational>, String> {
    let text = read_text(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
    let items = match &value {
        Value::Array(items) => items,
        Value::Object(map) => match map.get("values") {
            Some(Value::Array(items)) => items,
            _ => return Err(format!("{path}: expected an array or an object with \"values\"")),
        },
        _ => return Err(format!("{path}: expected an array of rationals")),
    };
    let phi = items
        .iter()
        .map(|v| match v {
            Value::String(s) => parse(s).map_err(|e| e.to_string()),
            Value::Number(x) if x.is_i64() => Ok(Rational::from_integer(x.as_i64().unwrap_or(0).into())),
            other => Err(format!("not an exact rational: {other}")),
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("{path}: {e}"))?;
    if phi.len() != n {
        return Err(format!("{path}: phi has {} values, graph has {n} vertices", phi.len()));
    }
    Ok(phi)
}
