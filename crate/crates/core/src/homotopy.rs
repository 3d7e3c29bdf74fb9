//! Ivashchenko homotopy: pyramid extensions over contractible subgraphs and
//! removal of vertices with contractible unit spheres.
//!
//! Contractibility is only semi-decidable by reductions, so answers are
//! three-valued. `No` is always backed by a homotopy invariant that differs.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::cohomology::betti_vector;
use crate::graph::{is_isomorphic, Graph, VertexSet};
use crate::invariants::euler_characteristic;
use crate::{Error, Result};

pub const DEFAULT_BUDGET: usize = 10_000;

/// Upper bound on the number of reduction-tree nodes a backtracking search
/// may expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub usize);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    Extend { base: VertexSet, vertex: i64 },
    Reduce { vertex: i64 },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MoveTrace {
    pub moves: Vec<Move>,
}

impl MoveTrace {
    fn reductions(labels: impl IntoIterator<Item = i64>) -> Self {
        MoveTrace { moves: labels.into_iter().map(|vertex| Move::Reduce { vertex }).collect() }
    }

    /// Replays the trace from `start`, checking every move's precondition.
    pub fn replay(&self, start: &Graph) -> Result<Graph> {
        let mut g = start.clone();
        for m in &self.moves {
            g = match m {
                Move::Reduce { vertex } => {
                    if !is_vertex_removable(&g, *vertex)? {
                        return Err(Error::Internal(format!("vertex {vertex} is not removable during replay")));
                    }
                    g.remove_vertex(g.index_of(*vertex)?)
                }
                Move::Extend { base, vertex } => pyramid_extend_labeled(&g, base, *vertex)?,
            };
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub invariant: String,
    pub left: String,
    pub right: String,
}

/// Evidence for a positive answer: reduction traces (one per graph involved)
/// and a short description of the argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub reason: String,
    pub traces: Vec<MoveTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TriState {
    Yes(Evidence),
    No(Mismatch),
    Unknown { reason: String },
}

impl TriState {
    pub fn is_yes(&self) -> bool {
        matches!(self, TriState::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, TriState::No(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, TriState::Unknown { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            TriState::Yes(_) => "yes",
            TriState::No(_) => "no",
            TriState::Unknown { .. } => "unknown",
        }
    }

    pub(crate) fn yes(reason: impl Into<String>, traces: Vec<MoveTrace>) -> Self {
        TriState::Yes(Evidence { reason: reason.into(), traces })
    }

    pub(crate) fn unknown(reason: impl Into<String>) -> Self {
        TriState::Unknown { reason: reason.into() }
    }

    pub(crate) fn mismatch(invariant: &str, left: impl std::fmt::Debug, right: impl std::fmt::Debug) -> Self {
        TriState::No(Mismatch {
            invariant: invariant.to_string(),
            left: format!("{left:?}"),
            right: format!("{right:?}"),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Yes,
    No,
    Unknown,
}

/// Search state shared by the nested contractibility checks of one call.
pub struct Homotopy {
    remaining: usize,
    memo: HashMap<Graph, Verdict>,
}

impl Homotopy {
    pub fn new(budget: Budget) -> Self {
        Homotopy { remaining: budget.0, memo: HashMap::new() }
    }

    pub fn is_removable(&mut self, g: &Graph, i: usize) -> bool {
        let sphere = g.induced(g.sphere_indices(i));
        self.verdict(&sphere) == Verdict::Yes
    }

    fn verdict(&mut self, g: &Graph) -> Verdict {
        if let Some(&v) = self.memo.get(g) {
            return v;
        }
        let v = match self.contractible(g) {
            TriState::Yes(_) => Verdict::Yes,
            TriState::No(_) => Verdict::No,
            TriState::Unknown { .. } => Verdict::Unknown,
        };
        self.memo.insert(g.clone(), v);
        v
    }

    /// Removes the lowest-labeled removable vertex until none is left.
    pub fn collapse(&mut self, g: &Graph) -> (Graph, MoveTrace) {
        let mut cur = g.clone();
        let mut removed = Vec::new();
        'outer: while cur.order() > 1 {
            for i in 0..cur.order() {
                if self.is_removable(&cur, i) {
                    removed.push(cur.label(i));
                    cur = cur.remove_vertex(i);
                    continue 'outer;
                }
            }
            break;
        }
        (cur, MoveTrace::reductions(removed))
    }

    pub fn contractible(&mut self, g: &Graph) -> TriState {
        if g.order() == 1 {
            return TriState::yes("single vertex", vec![MoveTrace::default()]);
        }
        let chi = euler_characteristic(g);
        if chi != 1 {
            return TriState::mismatch("euler_characteristic", chi, 1);
        }
        let (core, trace) = self.collapse(g);
        if core.order() == 1 {
            return TriState::yes("greedy reduction to K_1", vec![trace]);
        }
        let betti = betti_vector(g);
        if betti != [1] {
            return TriState::mismatch("betti", betti, [1]);
        }
        match self.backtrack(g) {
            Some(trace) => TriState::yes("reduction to K_1 found by backtracking", vec![trace]),
            None if self.remaining == 0 => TriState::unknown("backtracking budget exhausted"),
            None => TriState::unknown("no sequence of vertex removals reaches K_1"),
        }
    }

    fn backtrack(&mut self, g: &Graph) -> Option<MoveTrace> {
        let mut all = FixedBitSet::with_capacity(g.order());
        all.insert_range(..);
        let mut seen = HashSet::new();
        let mut path = Vec::new();
        if self.dfs(g, all, &mut seen, &mut path) {
            Some(MoveTrace::reductions(path))
        } else {
            None
        }
    }

    fn dfs(&mut self, g: &Graph, alive: FixedBitSet, seen: &mut HashSet<FixedBitSet>, path: &mut Vec<i64>) -> bool {
        if alive.count_ones(..) == 1 {
            return true;
        }
        if self.remaining == 0 || !seen.insert(alive.clone()) {
            return false;
        }
        self.remaining -= 1;
        let idx: Vec<usize> = alive.ones().collect();
        let sub = g.induced(&idx);
        for (k, &i) in idx.iter().enumerate() {
            if self.is_removable(&sub, k) {
                let mut next = alive.clone();
                next.set(i, false);
                path.push(g.label(i));
                if self.dfs(g, next, seen, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }

    pub fn equivalent(&mut self, a: &Graph, b: &Graph) -> TriState {
        let (ca, cb) = (euler_characteristic(a), euler_characteristic(b));
        if ca != cb {
            return TriState::mismatch("euler_characteristic", ca, cb);
        }
        let (ba, bb) = (betti_vector(a), betti_vector(b));
        if ba != bb {
            return TriState::mismatch("betti", ba, bb);
        }
        if is_isomorphic(a, b, None, None).is_some() {
            return TriState::yes("isomorphic", vec![MoveTrace::default(), MoveTrace::default()]);
        }
        if let (TriState::Yes(ea), TriState::Yes(eb)) = (self.contractible(a), self.contractible(b)) {
            let traces = ea.traces.into_iter().chain(eb.traces).collect();
            return TriState::yes("both contractible", traces);
        }
        let (ka, ta) = self.collapse(a);
        let (kb, tb) = self.collapse(b);
        if is_isomorphic(&ka, &kb, None, None).is_some() {
            return TriState::yes("collapsed cores are isomorphic", vec![ta, tb]);
        }
        TriState::unknown("invariants agree but the collapsed cores are not isomorphic")
    }

    /// Reduces `m` onto the induced subgraph on `keep` by removing the other
    /// vertices one at a time, lowest removable label first.
    pub fn reduce_onto(&mut self, m: &Graph, keep: &VertexSet) -> Option<MoveTrace> {
        let mut cur = m.clone();
        let mut removed = Vec::new();
        'outer: loop {
            if cur.order() == keep.len() {
                return Some(MoveTrace::reductions(removed));
            }
            for i in 0..cur.order() {
                if !keep.contains(cur.label(i)) && self.is_removable(&cur, i) {
                    removed.push(cur.label(i));
                    cur = cur.remove_vertex(i);
                    continue 'outer;
                }
            }
            return None;
        }
    }

    /// Certifies `a ≃ b` through a graph `m` containing both as induced
    /// subgraphs on disjoint vertex sets: if `m` reduces onto each of them by
    /// vertex removals alone, all three are homotopic.
    pub fn common_extension(&mut self, m: &Graph, a: &VertexSet, b: &VertexSet) -> TriState {
        let ta = self.reduce_onto(m, a);
        let tb = ta.as_ref().and_then(|_| self.reduce_onto(m, b));
        match (ta, tb) {
            (Some(ta), Some(tb)) => TriState::yes("common extension reduces onto both graphs", vec![ta, tb]),
            _ => TriState::unknown("common extension does not reduce onto both graphs"),
        }
    }
}

pub fn is_vertex_removable(g: &Graph, z: i64) -> Result<bool> {
    let i = g.index_of(z)?;
    Ok(Homotopy::new(Budget::default()).is_removable(g, i))
}

pub fn collapse(g: &Graph) -> (Graph, MoveTrace) {
    Homotopy::new(Budget::default()).collapse(g)
}

pub fn is_contractible(g: &Graph) -> TriState {
    is_contractible_with(g, Budget::default())
}

pub fn is_contractible_with(g: &Graph, budget: Budget) -> TriState {
    Homotopy::new(budget).contractible(g)
}

pub fn homotopy_equivalent(a: &Graph, b: &Graph) -> TriState {
    homotopy_equivalent_with(a, b, Budget::default())
}

pub fn homotopy_equivalent_with(a: &Graph, b: &Graph, budget: Budget) -> TriState {
    Homotopy::new(budget).equivalent(a, b)
}

/// Adds a cone vertex over a contractible `base`; the new vertex gets the
/// label one above the current maximum.
pub fn pyramid_extend(g: &Graph, base: &VertexSet) -> Result<Graph> {
    let label = g.labels().last().map_or(0, |&m| m + 1);
    pyramid_extend_labeled(g, base, label)
}

fn pyramid_extend_labeled(g: &Graph, base: &VertexSet, label: i64) -> Result<Graph> {
    let sub = g.induced_subgraph(base)?;
    match is_contractible(&sub) {
        TriState::Yes(_) => {}
        TriState::No(m) => return Err(Error::BaseNotContractible(format!("{} differs", m.invariant))),
        TriState::Unknown { reason } => return Err(Error::BaseNotContractible(reason)),
    }
    let mut labels = g.labels().to_vec();
    labels.push(label);
    let mut edges = g.edge_labels();
    edges.extend(base.iter().map(|b| (b, label)));
    let h = Graph::new(&labels, &edges)?;
    if euler_characteristic(&h) != euler_characteristic(g) {
        return Err(Error::Internal("pyramid extension changed the Euler characteristic".into()));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin;
    use crate::random::random_graph;

    fn g(name: &str, p: &[i64]) -> Graph {
        builtin(name, p).unwrap()
    }

    #[test]
    fn removability() {
        assert!(!is_vertex_removable(&g("wheel", &[5]), 0).unwrap());
        assert!(is_vertex_removable(&g("star", &[3]), 2).unwrap());
        assert!(is_vertex_removable(&g("complete", &[4]), 1).unwrap());
        assert!(is_vertex_removable(&g("cycle", &[4]), 9).is_err());
    }

    #[test]
    fn contractibility() {
        assert!(is_contractible(&g("complete", &[5])).is_yes());
        assert!(is_contractible(&g("complete", &[1])).is_yes());
        assert!(is_contractible(&g("wheel", &[6])).is_yes());
        assert!(is_contractible(&g("cycle", &[5])).is_no());
        assert!(is_contractible(&g("octahedron", &[])).is_no());
        assert!(is_contractible(&Graph::empty()).is_no());
        assert!(is_contractible(&g("bull", &[])).is_yes());
    }

    #[test]
    fn collapse_examples() {
        let (core, trace) = collapse(&g("wheel", &[6]));
        assert_eq!(core.order(), 1);
        assert_eq!(trace.replay(&g("wheel", &[6])).unwrap(), core);
        let c6 = g("cycle", &[6]);
        assert_eq!(collapse(&c6).0, c6);
        let (core, _) = collapse(&g("fork", &[]));
        assert_eq!(core.order(), 1);
    }

    #[test]
    fn pyramid_extension() {
        let c4 = g("cycle", &[4]);
        let ext = pyramid_extend(&c4, &VertexSet::new([1, 2])).unwrap();
        assert_eq!(ext, g("c4-pyramid", &[]));
        assert!(homotopy_equivalent(&c4, &ext).is_yes());
        let k1 = g("complete", &[1]);
        assert_eq!(pyramid_extend(&k1, &VertexSet::new([1])).unwrap().size(), 1);
        assert!(matches!(
            pyramid_extend(&c4, &VertexSet::new([1, 3])),
            Err(Error::BaseNotContractible(_))
        ));
    }

    #[test]
    fn equivalence_verdicts() {
        let sun = g("sun", &[1, 1, 1, 1]);
        let tree = g("star", &[4]);
        assert!(homotopy_equivalent(&sun, &tree).is_no());
        // both are 2-spheres, but neither collapses and they are not isomorphic
        let v = homotopy_equivalent(&g("icosahedron", &[]), &g("octahedron", &[]));
        assert!(v.is_unknown(), "{v:?}");
        assert!(homotopy_equivalent(&g("cycle", &[5]), &g("cycle", &[7])).is_unknown());
        assert!(homotopy_equivalent(&g("path", &[4]), &g("complete", &[3])).is_yes());
    }

    #[test]
    fn extensions_keep_invariants_and_removals_undo_them() {
        let mut checked = 0;
        for seed in 0..100 {
            let h = random_graph(3 + seed as usize % 7, 0.5, seed);
            let base_vertex = seed as usize % h.order();
            let base = h.labels_of(&h.ball_indices(base_vertex));
            let ext = pyramid_extend(&h, &base).unwrap();
            assert_eq!(betti_vector(&ext), betti_vector(&h));
            let apex = ext.order() - 1;
            assert!(Homotopy::new(Budget::default()).is_removable(&ext, apex));
            assert_eq!(ext.remove_vertex(apex), h);
            checked += 1;
        }
        assert_eq!(checked, 100);
    }

    #[test]
    fn traces_replay_on_random_graphs() {
        for seed in 0..40 {
            let h = random_graph(2 + seed as usize % 8, 0.55, seed);
            let (core, trace) = collapse(&h);
            assert_eq!(trace.replay(&h).unwrap(), core);
            assert_eq!(euler_characteristic(&core), euler_characteristic(&h));
            assert_eq!(betti_vector(&core), betti_vector(&h));
            if let TriState::Yes(ev) = is_contractible(&h) {
                assert_eq!(euler_characteristic(&h), 1);
                assert_eq!(ev.traces[0].replay(&h).unwrap().order(), 1);
            }
        }
    }
}
