//! Graph JSON and a small DOT reader.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::{Error, Result};

/// `{"vertices": [..], "edges": [[a, b], ..]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<i64>,
    pub edges: Vec<(i64, i64)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { vertices: g.labels().to_vec(), edges: g.edge_labels() }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::new(&j.vertices, &j.edges)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// Parses an undirected DOT graph: `graph name { 1 -- 2; 2 -- 3 -- 4; 5; }`.
///
/// Node identifiers must be integers. Attribute lists, directed edges,
/// self-loops and repeated edges are rejected.
pub fn parse_dot(src: &str) -> Result<Graph> {
    let stripped: String = src
        .lines()
        .map(|l| match l.find("//") {
            Some(p) => &l[..p],
            None => l,
        })
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n");
    let open = stripped.find('{').ok_or_else(|| Error::Parse("missing `{`".into()))?;
    let close = stripped.rfind('}').ok_or_else(|| Error::Parse("missing `}`".into()))?;
    if close < open {
        return Err(Error::Parse("unbalanced braces".into()));
    }
    let header: Vec<&str> = stripped[..open].split_whitespace().collect();
    match header.as_slice() {
        ["graph"] | ["graph", _] | ["strict", "graph"] | ["strict", "graph", _] => {}
        _ => return Err(Error::Parse("expected an undirected `graph` header".into())),
    }
    if !stripped[close + 1..].trim().is_empty() {
        return Err(Error::Parse("trailing input after `}`".into()));
    }
    let body = &stripped[open + 1..close];
    if body.contains('[') || body.contains("->") {
        return Err(Error::Parse("attributes and directed edges are not supported".into()));
    }
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for stmt in body.split([';', '\n']).map(str::trim).filter(|s| !s.is_empty()) {
        let ids = stmt
            .split("--")
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad node id in `{stmt}`"))))
            .collect::<Result<Vec<_>>>()?;
        for &v in &ids {
            if !vertices.contains(&v) {
                vertices.push(v);
            }
        }
        edges.extend(ids.windows(2).map(|w| (w[0], w[1])));
    }
    Graph::new(&vertices, &edges)
}

impl Graph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (i, &l) in self.labels().iter().enumerate() {
            if self.degree(i) == 0 {
                out.push_str(&format!("  {l};\n"));
            }
        }
        for (a, b) in self.edge_labels() {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin;

    #[test]
    fn json_round_trip() {
        let g = builtin("petersen", &[]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        let h: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn json_rejects_multi_edges_and_loops() {
        assert!(serde_json::from_str::<Graph>(r#"{"vertices":[1,2],"edges":[[1,2],[2,1]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"vertices":[1],"edges":[[1,1]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"vertices":[1],"edges":[[1,3]]}"#).is_err());
    }

    #[test]
    fn dot_chains_and_isolated_nodes() {
        let g = parse_dot("graph g {\n 1 -- 2 -- 3; 3 -- 1\n 7; // comment\n}").unwrap();
        assert_eq!(g.labels(), &[1, 2, 3, 7]);
        assert_eq!(g.size(), 3);
        let back = parse_dot(&g.to_dot()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn dot_rejects_unsupported_input() {
        assert!(parse_dot("digraph { 1 -> 2 }").is_err());
        assert!(parse_dot("graph { 1 -- 1 }").is_err());
        assert!(parse_dot("graph { 1 -- 2; 2 -- 1 }").is_err());
        assert!(parse_dot("graph { a -- b }").is_err());
        assert!(parse_dot("graph { 1 -- 2 [color=red] }").is_err());
    }
}
