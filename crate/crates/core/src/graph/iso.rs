//! Backtracking isomorphism search with vertex-invariant pruning.

use std::ops::ControlFlow;

use serde::Serialize;

use super::Graph;
use crate::Rational;

/// A label-level bijection between the vertex sets of two graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexBijection {
    /// `(source label, target label)` pairs sorted by source label.
    pub pairs: Vec<(i64, i64)>,
}

impl VertexBijection {
    pub fn image(&self, label: i64) -> Option<i64> {
        self.pairs.binary_search_by_key(&label, |p| p.0).ok().map(|k| self.pairs[k].1)
    }

    pub fn inverse(&self) -> VertexBijection {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(a, b)| (b, a)).collect();
        pairs.sort_unstable();
        VertexBijection { pairs }
    }
}

/// An isomorphism problem between two graphs whose vertices carry colors
/// that a mapping must preserve.
pub struct IsoProblem<'a, C: Eq> {
    a: &'a Graph,
    b: &'a Graph,
    colors_a: Option<&'a [C]>,
    colors_b: Option<&'a [C]>,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    feasible: bool,
}

impl<'a, C: Eq> IsoProblem<'a, C> {
    pub fn new(a: &'a Graph, b: &'a Graph, colors_a: Option<&'a [C]>, colors_b: Option<&'a [C]>) -> Self {
        let mut p = IsoProblem {
            a,
            b,
            colors_a,
            colors_b,
            order: Vec::new(),
            candidates: Vec::new(),
            feasible: false,
        };
        p.prepare();
        p
    }

    fn color_eq(&self, i: usize, j: usize) -> bool {
        match (self.colors_a, self.colors_b) {
            (Some(ca), Some(cb)) => ca[i] == cb[j],
            (None, None) => true,
            _ => false,
        }
    }

    fn prepare(&mut self) {
        let (a, b) = (self.a, self.b);
        if a.order() != b.order() || a.size() != b.size() {
            return;
        }
        if self.colors_a.is_some() != self.colors_b.is_some() {
            return;
        }
        let signature = |g: &Graph, i: usize| {
            let mut nd: Vec<usize> = g.neighbors(i).iter().map(|&j| g.degree(j)).collect();
            nd.sort_unstable();
            (g.degree(i), nd)
        };
        let sig_a: Vec<_> = (0..a.order()).map(|i| signature(a, i)).collect();
        let sig_b: Vec<_> = (0..b.order()).map(|j| signature(b, j)).collect();
        let mut candidates = Vec::with_capacity(a.order());
        for i in 0..a.order() {
            let c: Vec<usize> =
                (0..b.order()).filter(|&j| sig_a[i] == sig_b[j] && self.color_eq(i, j)).collect();
            if c.is_empty() {
                return;
            }
            candidates.push(c);
        }
        // Most constrained vertex first, then grow along edges so that
        // adjacency checks against mapped vertices prune early.
        let n = a.order();
        let mut placed = vec![false; n];
        let mut links = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&i| !placed[i])
                .max_by(|&x, &y| {
                    links[x]
                        .cmp(&links[y])
                        .then(candidates[y].len().cmp(&candidates[x].len()))
                        .then(a.degree(x).cmp(&a.degree(y)))
                        .then(y.cmp(&x))
                })
                .expect("unplaced vertex");
            placed[next] = true;
            order.push(next);
            for &w in a.neighbors(next) {
                links[w] += 1;
            }
        }
        self.order = order;
        self.candidates = candidates;
        self.feasible = true;
    }

    /// Visits every isomorphism as an index map `a -> b`; the visitor may stop
    /// the search early. Returns `Break` if the visitor stopped it.
    pub fn for_each(&self, mut visit: impl FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
        if !self.feasible {
            return ControlFlow::Continue(());
        }
        let n = self.a.order();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.search(0, &mut map, &mut used, &mut visit)
    }

    fn search(
        &self,
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if depth == self.order.len() {
            return visit(map);
        }
        let i = self.order[depth];
        for &j in &self.candidates[i] {
            if used[j] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&k| self.a.has_edge(i, k) == self.b.has_edge(j, map[k]));
            if !consistent {
                continue;
            }
            map[i] = j;
            used[j] = true;
            let flow = self.search(depth + 1, map, used, visit);
            used[j] = false;
            map[i] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }

    pub fn first(&self) -> Option<Vec<usize>> {
        let mut found = None;
        let _ = self.for_each(|m| {
            found = Some(m.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    pub fn all(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let _ = self.for_each(|m| {
            out.push(m.to_vec());
            ControlFlow::Continue(())
        });
        out.sort();
        out
    }
}

/// Finds an adjacency-preserving bijection `a -> b`, additionally preserving
/// per-vertex rational labels (indexed like the vertices) when given.
pub fn is_isomorphic(
    a: &Graph,
    b: &Graph,
    labels_a: Option<&[Rational]>,
    labels_b: Option<&[Rational]>,
) -> Option<VertexBijection> {
    let map = IsoProblem::new(a, b, labels_a, labels_b).first()?;
    Some(VertexBijection { pairs: (0..a.order()).map(|i| (a.label(i), b.label(map[i]))).collect() })
}

/// Every color-preserving automorphism as an index permutation, sorted
/// lexicographically (the identity comes first).
pub fn automorphisms<C: Eq>(g: &Graph, colors: Option<&[C]>) -> Vec<Vec<usize>> {
    IsoProblem::new(g, g, colors, colors).all()
}
