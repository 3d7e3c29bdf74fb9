//! Finite simple graphs and their local substructures.
//!
//! Vertices carry integer labels. Internally a graph with `n` vertices
//! indexes them `0..n` in ascending label order, so iteration over vertices
//! and edges is deterministic and two graphs with the same labels and edges
//! compare equal.

mod builtin;
mod polyhedra;
mod cliques;
mod io;
mod iso;

pub use builtin::{builtin, builtin_corpus, builtin_names, sample_params, BuiltinInfo, BUILTINS};
pub use cliques::{enumerate_cliques, CliqueSet};
pub use io::{parse_dot, GraphJson};
pub use iso::{automorphisms, is_isomorphic, IsoProblem, VertexBijection};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A sorted, duplicate-free set of vertex labels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<i64>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = i64>>(labels: I) -> Self {
        let set: BTreeSet<i64> = labels.into_iter().collect();
        VertexSet(set.into_iter().collect())
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: i64) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|v| other.contains(*v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn with(&self, label: i64) -> VertexSet {
        VertexSet::new(self.iter().chain(std::iter::once(label)))
    }

    pub fn without(&self, label: i64) -> VertexSet {
        VertexSet(self.iter().filter(|&v| v != label).collect())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<i64> for VertexSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<i64>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from labels and labeled edges. Loops, repeated edges,
    /// repeated labels and edges to unknown labels are rejected.
    pub fn new(vertices: &[i64], edges: &[(i64, i64)]) -> Result<Self> {
        let mut labels = vertices.to_vec();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        let mut adj = vec![Vec::new(); labels.len()];
        let mut seen = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let i = labels.binary_search(&a).map_err(|_| Error::UnknownVertex(a))?;
            let j = labels.binary_search(&b).map_err(|_| Error::UnknownVertex(b))?;
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            adj[i].push(j);
            adj[j].push(i);
        }
        for n in &mut adj {
            n.sort_unstable();
        }
        Ok(Graph { labels, adj, edge_count: seen.len() })
    }

    /// Graph on vertices `0..n` with the given index pairs. Repeated pairs
    /// are merged; panics on loops or out-of-range indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let labels = (0..n as i64).collect();
        Self::from_index_edges(labels, edges.iter().copied())
    }

    /// Same as [`Graph::from_edges`] but with labels `1..=n`.
    pub fn from_edges_one_based(n: usize, edges: &[(usize, usize)]) -> Self {
        let labels = (1..=n as i64).collect();
        Self::from_index_edges(labels, edges.iter().map(|&(a, b)| (a - 1, b - 1)))
    }

    pub(crate) fn from_index_edges<I>(labels: Vec<i64>, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); labels.len()];
        for (a, b) in edges {
            assert!(a != b, "self-loop at index {a}");
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut edge_count = 0;
        for n in &mut adj {
            n.sort_unstable();
            n.dedup();
            edge_count += n.len();
        }
        Graph { labels, adj, edge_count: edge_count / 2 }
    }

    pub fn empty() -> Self {
        Graph { labels: Vec::new(), adj: Vec::new(), edge_count: 0 }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> i64 {
        self.labels[i]
    }

    pub fn index_of(&self, label: i64) -> Result<usize> {
        self.labels.binary_search(&label).map_err(|_| Error::UnknownVertex(label))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet(self.labels.clone())
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub fn has_edge_labels(&self, a: i64, b: i64) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Ok(i), Ok(j)) => self.has_edge(i, j),
            _ => false,
        }
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, ns)| ns.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Edges as label pairs with the smaller label first.
    pub fn edge_labels(&self) -> Vec<(i64, i64)> {
        self.edges().map(|(i, j)| (self.labels[i], self.labels[j])).collect()
    }

    pub fn indices_of(&self, w: &VertexSet) -> Result<Vec<usize>> {
        w.iter().map(|l| self.index_of(l)).collect()
    }

    pub fn labels_of(&self, idx: &[usize]) -> VertexSet {
        VertexSet::new(idx.iter().map(|&i| self.labels[i]))
    }

    /// Induced subgraph on a set of vertex labels.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<Graph> {
        let idx = self.indices_of(w)?;
        Ok(self.induced(&idx))
    }

    /// Induced subgraph on ascending vertex indices; labels are kept.
    pub fn induced(&self, idx: &[usize]) -> Graph {
        debug_assert!(idx.windows(2).all(|w| w[0] < w[1]));
        let mut pos = vec![usize::MAX; self.order()];
        for (k, &i) in idx.iter().enumerate() {
            pos[i] = k;
        }
        let mut adj = Vec::with_capacity(idx.len());
        let mut edge_count = 0;
        for &i in idx {
            let ns: Vec<usize> =
                self.adj[i].iter().filter_map(|&j| (pos[j] != usize::MAX).then(|| pos[j])).collect();
            edge_count += ns.len();
            adj.push(ns);
        }
        Graph {
            labels: idx.iter().map(|&i| self.labels[i]).collect(),
            adj,
            edge_count: edge_count / 2,
        }
    }

    /// Graph with the vertex at index `i` and its edges removed.
    pub fn remove_vertex(&self, i: usize) -> Graph {
        let idx: Vec<usize> = (0..self.order()).filter(|&k| k != i).collect();
        self.induced(&idx)
    }

    pub fn sphere_indices(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// Unit sphere `S(x)`: the subgraph induced by the neighbors of `x`.
    pub fn unit_sphere(&self, x: i64) -> Result<Graph> {
        let i = self.index_of(x)?;
        Ok(self.induced(&self.adj[i]))
    }

    /// Unit ball `B(x)`: the subgraph induced by `x` and its neighbors.
    pub fn unit_ball(&self, x: i64) -> Result<Graph> {
        let i = self.index_of(x)?;
        Ok(self.induced(&self.ball_indices(i)))
    }

    pub fn ball_indices(&self, i: usize) -> Vec<usize> {
        let mut idx = self.adj[i].clone();
        let p = idx.partition_point(|&j| j < i);
        idx.insert(p, i);
        idx
    }

    /// Star graph at `x`: the center, its neighbors, and only the edges
    /// through the center.
    pub fn star_graph(&self, x: i64) -> Result<Graph> {
        let i = self.index_of(x)?;
        let idx = self.ball_indices(i);
        let center = idx.binary_search(&i).expect("center in ball");
        let labels = idx.iter().map(|&k| self.labels[k]).collect();
        let edges = (0..idx.len()).filter(|&k| k != center).map(|k| (center, k));
        Ok(Graph::from_index_edges(labels, edges))
    }

    /// Graph on the given labels with exactly the given label edges; used
    /// for non-induced subgraphs such as intersections of star graphs.
    pub fn from_parts(vertices: &VertexSet, edges: &[(i64, i64)]) -> Result<Graph> {
        Graph::new(vertices.as_slice(), edges)
    }

    pub fn relabel(&self, f: impl Fn(i64) -> i64) -> Result<Graph> {
        let labels: Vec<i64> = self.labels.iter().map(|&l| f(l)).collect();
        let edges: Vec<(i64, i64)> =
            self.edges().map(|(i, j)| (labels[i], labels[j])).collect();
        Graph::new(&labels, &edges)
    }

    /// Connected components as ascending index lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().len() == 1
    }

    /// True when no three vertices are mutually adjacent.
    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(i, j)| !self.adj[i].iter().any(|k| self.has_edge(*k, j)))
    }

    /// Disjoint union; the second graph's labels are shifted past the first's.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.labels.last().map_or(0, |&m| m + 1) - other.labels.first().copied().unwrap_or(0);
        let n = self.order();
        let labels = self.labels.iter().copied().chain(other.labels.iter().map(|l| l + shift)).collect();
        let edges = self.edges().chain(other.edges().map(|(i, j)| (i + n, j + n)));
        Graph::from_index_edges(labels, edges)
    }

    /// Cartesian product; vertex `(i, j)` gets index `i * |other| + j` and
    /// label equal to that index.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let m = other.order();
        let n = self.order() * m;
        let mut edges = Vec::new();
        for i in 0..self.order() {
            for (a, b) in other.edges() {
                edges.push((i * m + a, i * m + b));
            }
        }
        for (a, b) in self.edges() {
            for j in 0..m {
                edges.push((a * m + j, b * m + j));
            }
        }
        Graph::from_edges(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &self.edge_labels())
            .finish()
    }
}
