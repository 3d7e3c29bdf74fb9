//! Reading graphs, sub-bases and maps from files or inline specs.
//!
//! A graph spec is a path to a `.json` or `.dot` file, or
//! `builtin:NAME[:P1,P2,...]`. A topology spec is a path to a sub-basis JSON
//! file, `library:NAME`, or `star:G`, `unit-ball:G`, `indiscrete:G` for a
//! graph spec `G`.

use std::fs;

use grafotop::graph::{builtin, parse_dot, sample_params};
use grafotop::topology::{indiscrete_topology, library_topology, star_topology, unit_ball_topology, SubBasis};
use grafotop::{Error, Graph, Result};

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn parse_params(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad builtin parameter `{p}`"))))
        .collect()
}

pub fn builtin_graph(name: &str, params: &[i64]) -> Result<Graph> {
    if params.is_empty() {
        builtin(name, sample_params(name))
    } else {
        builtin(name, params)
    }
}

pub fn graph_spec(spec: &str) -> Result<Graph> {
    if let Some(rest) = spec.strip_prefix("builtin:") {
        let (name, params) = match rest.split_once(':') {
            Some((n, p)) => (n, parse_params(p)?),
            None => (rest, Vec::new()),
        };
        return builtin_graph(name, &params);
    }
    let text = read(spec)?;
    if spec.ends_with(".dot") || spec.ends_with(".gv") {
        parse_dot(&text)
    } else {
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{spec}: {e}")))
    }
}

pub fn topology_spec(spec: &str) -> Result<SubBasis> {
    if let Some(name) = spec.strip_prefix("library:") {
        return library_topology(name);
    }
    if let Some(g) = spec.strip_prefix("star:") {
        return Ok(star_topology(&graph_spec(g)?));
    }
    if let Some(g) = spec.strip_prefix("unit-ball:") {
        return Ok(unit_ball_topology(&graph_spec(g)?));
    }
    if let Some(g) = spec.strip_prefix("indiscrete:") {
        return Ok(indiscrete_topology(&graph_spec(g)?));
    }
    let text = read(spec)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{spec}: {e}")))
}

/// A vertex map given as JSON `[[label, image], ...]`.
pub fn label_pairs(path: &str) -> Result<Vec<(i64, i64)>> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

/// Function values given as JSON, either a list indexed like the sorted
/// vertex labels or an object mapping labels to values.
pub fn function_values(path: &str, g: &Graph) -> Result<Vec<grafotop::Rational>> {
    let v: serde_json::Value = serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    let parse = |x: &serde_json::Value| -> Result<grafotop::Rational> {
        serde_json::from_value(x.clone()).map_err(|e| Error::Parse(format!("{path}: {e}")))
    };
    match &v {
        serde_json::Value::Array(items) => items.iter().map(parse).collect(),
        serde_json::Value::Object(map) => g
            .labels()
            .iter()
            .map(|l| map.get(&l.to_string()).ok_or(Error::UnknownVertex(*l)).and_then(parse))
            .collect(),
        _ => Err(Error::Parse(format!("{path}: expected a list or an object of values"))),
    }
}
