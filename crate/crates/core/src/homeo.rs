//! Continuous maps and homeomorphisms between topological graphs.
//!
//! A map of topological graphs is recorded on the level of nerves: each
//! element of the source is sent to an element of the target. It is
//! continuous when it preserves adjacency and does not raise dimension. A
//! homeomorphism is then an isomorphism of weighted nerves.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::cohomology::betti_vector;
use crate::graph::{is_isomorphic, Graph, IsoProblem, VertexSet};
use crate::homotopy::{Budget, TriState};
use crate::invariants::euler_characteristic;
use crate::topology::{
    indiscrete_topology, library_topology, nerve, nerves_isomorphic, optimize, star_topology, unit_ball_topology,
    validate_with, Element, SubBasis, ValidationReport, WeightedNerve, LIBRARY,
};
use crate::{Error, Rational, Result};

/// A sub-basis that validates as a graph topology.
#[derive(Debug, Clone, Serialize)]
pub struct TopologicalGraph {
    subbasis: SubBasis,
    validation: ValidationReport,
}

impl TopologicalGraph {
    pub fn new(b: SubBasis) -> Result<Self> {
        Self::with_budget(b, Budget::default())
    }

    pub fn with_budget(b: SubBasis, budget: Budget) -> Result<Self> {
        let validation = validate_with(&b, budget);
        if !validation.is_valid() {
            return Err(Error::InvalidTopology(format!("validation is {}", validation.overall.name())));
        }
        Ok(TopologicalGraph { subbasis: b, validation })
    }

    pub fn graph(&self) -> &Graph {
        self.subbasis.host()
    }

    pub fn subbasis(&self) -> &SubBasis {
        &self.subbasis
    }

    pub fn validation(&self) -> &ValidationReport {
        &self.validation
    }

    pub fn nerve(&self) -> WeightedNerve {
        nerve(&self.subbasis)
    }
}

/// A map between nerves, `assignment[i]` being the image of source node `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NerveMap {
    pub source: WeightedNerve,
    pub target: WeightedNerve,
    pub assignment: Vec<usize>,
}

impl NerveMap {
    pub fn identity(n: &WeightedNerve) -> Self {
        NerveMap { source: n.clone(), target: n.clone(), assignment: (0..n.len()).collect() }
    }

    pub fn inverse(&self) -> Option<NerveMap> {
        let mut inv = vec![usize::MAX; self.target.len()];
        for (i, &j) in self.assignment.iter().enumerate() {
            if j >= inv.len() || inv[j] != usize::MAX {
                return None;
            }
            inv[j] = i;
        }
        if inv.contains(&usize::MAX) {
            return None;
        }
        Some(NerveMap { source: self.target.clone(), target: self.source.clone(), assignment: inv })
    }
}

/// Linked elements go to linked or equal elements and no element is sent to
/// one of higher dimension.
pub fn check_continuous(m: &NerveMap) -> bool {
    if m.assignment.len() != m.source.len() || m.assignment.iter().any(|&j| j >= m.target.len()) {
        return false;
    }
    let adjacency = m.source.graph.edges().all(|(i, j)| {
        let (a, b) = (m.assignment[i], m.assignment[j]);
        a == b || m.target.graph.has_edge(a, b)
    });
    adjacency && m.assignment.iter().enumerate().all(|(i, &j)| m.target.weights[j] <= m.source.weights[i])
}

fn spectrum(n: &WeightedNerve) -> Vec<Rational> {
    let mut w = n.weights.clone();
    w.sort();
    w
}

/// A dimension-preserving isomorphism of the weighted nerves, if any.
pub fn check_homeomorphic(a: &TopologicalGraph, b: &TopologicalGraph) -> Result<Option<NerveMap>> {
    let (na, nb) = (a.nerve(), b.nerve());
    let Some(f) = nerves_isomorphic(&na, &nb) else {
        return Ok(None);
    };
    if spectrum(&na) != spectrum(&nb) {
        return Err(Error::Internal("homeomorphic topologies with different dimension spectra".into()));
    }
    let assignment = (0..na.len()).map(|i| f.image(i as i64).expect("total map") as usize).collect();
    Ok(Some(NerveMap { source: na, target: nb, assignment }))
}

/// Canonical topologies tried by [`graphs_equivalent`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Star,
    UnitBall,
    Indiscrete,
    OptimizedStar,
    /// Unions of unit balls along a perfect matching of adjacent centers,
    /// searched for a nerve matching a topology of the other graph.
    MergedBalls,
    /// Topologies from the builtin library whose graph is isomorphic to the
    /// input, transported along the isomorphism.
    Library,
}

pub const DEFAULT_STRATEGIES: [Strategy; 6] = [
    Strategy::Star,
    Strategy::UnitBall,
    Strategy::Indiscrete,
    Strategy::OptimizedStar,
    Strategy::MergedBalls,
    Strategy::Library,
];

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub left_strategy: String,
    pub right_strategy: String,
    pub left: SubBasis,
    pub right: SubBasis,
    pub map: NerveMap,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceReport {
    pub verdict: TriState,
    pub witness: Option<Witness>,
}

struct Candidate {
    name: String,
    topology: TopologicalGraph,
}

fn canonical_candidates(g: &Graph, strategies: &[Strategy], budget: Budget) -> Vec<Candidate> {
    let mut out: Vec<Candidate> = Vec::new();
    let push = |name: String, b: SubBasis, out: &mut Vec<Candidate>| {
        if b.is_empty() || out.iter().any(|c| c.topology.subbasis() == &b) {
            return;
        }
        if let Ok(topology) = TopologicalGraph::with_budget(b, budget) {
            out.push(Candidate { name, topology });
        }
    };
    for &s in strategies {
        match s {
            Strategy::Star => push("star".into(), star_topology(g), &mut out),
            Strategy::UnitBall => push("unit-ball".into(), unit_ball_topology(g), &mut out),
            Strategy::Indiscrete => push("indiscrete".into(), indiscrete_topology(g), &mut out),
            Strategy::OptimizedStar => {
                if let Ok(r) = optimize(&star_topology(g), budget.0) {
                    push("optimized-star".into(), r.subbasis, &mut out);
                }
            }
            Strategy::Library => {
                for (name, b) in library_transports(g) {
                    push(format!("library:{name}"), b, &mut out);
                }
            }
            Strategy::MergedBalls => {}
        }
    }
    out
}

fn library_transports(g: &Graph) -> Vec<(&'static str, SubBasis)> {
    let mut out = Vec::new();
    for entry in LIBRARY.iter().filter(|e| !e.sets.is_empty()) {
        let Ok(b) = library_topology(entry.name) else { continue };
        let Some(f) = is_isomorphic(b.host(), g, None, None) else { continue };
        if let Ok(t) = b.relabeled(|v| f.image(v).expect("total map")) {
            out.push((entry.name, t));
        }
    }
    out
}

/// Searches unions `B(u) ∪ B(v)` over perfect matchings of adjacent centers
/// for a valid topology whose weighted nerve is isomorphic to `target`.
/// `budget` bounds the number of matchings examined.
pub fn merged_ball_topology(g: &Graph, target: &WeightedNerve, budget: Budget) -> Option<SubBasis> {
    let n = g.order();
    if n == 0 || n % 2 == 1 || n / 2 != target.len() {
        return None;
    }
    let balls: Vec<VertexSet> = (0..n).map(|i| g.labels_of(&g.ball_indices(i))).collect();
    let mut partner = vec![usize::MAX; n];
    let mut examined = 0;
    let mut found = None;
    let _ = matchings(g, &mut partner, &mut |partner| {
        examined += 1;
        if examined > budget.0 {
            return ControlFlow::Break(());
        }
        let mut sets: Vec<VertexSet> =
            (0..n).filter(|&i| i < partner[i]).map(|i| balls[i].union(&balls[partner[i]])).collect();
        sets.sort();
        sets.dedup();
        if sets.len() != target.len() {
            return ControlFlow::Continue(());
        }
        let b = SubBasis::new(g.clone(), sets.into_iter().map(Element::induced).collect()).expect("balls inside g");
        if nerves_isomorphic(&nerve(&b), target).is_none() {
            return ControlFlow::Continue(());
        }
        if validate_with(&b, budget).is_valid() {
            found = Some(b);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

fn matchings(g: &Graph, partner: &mut [usize], visit: &mut impl FnMut(&[usize]) -> ControlFlow<()>) -> ControlFlow<()> {
    let Some(i) = partner.iter().position(|&p| p == usize::MAX) else {
        return visit(partner);
    };
    for &j in g.neighbors(i) {
        if partner[j] != usize::MAX {
            continue;
        }
        partner[i] = j;
        partner[j] = i;
        let flow = matchings(g, partner, visit);
        partner[i] = usize::MAX;
        partner[j] = usize::MAX;
        flow?;
    }
    ControlFlow::Continue(())
}

fn first_homeomorphic(left: &[Candidate], right: &[Candidate], flip: bool) -> Option<Witness> {
    for l in left {
        for r in right {
            if let Ok(Some(map)) = check_homeomorphic(&l.topology, &r.topology) {
                let w = Witness {
                    left_strategy: l.name.clone(),
                    right_strategy: r.name.clone(),
                    left: l.topology.subbasis().clone(),
                    right: r.topology.subbasis().clone(),
                    map,
                };
                return Some(if flip { flip_witness(w) } else { w });
            }
        }
    }
    None
}

fn flip_witness(w: Witness) -> Witness {
    Witness {
        left_strategy: w.right_strategy,
        right_strategy: w.left_strategy,
        left: w.right,
        right: w.left,
        map: w.map.inverse().expect("isomorphism"),
    }
}

/// Looks for topologies on `g` and `h` from the given strategies that make
/// them homeomorphic. Differing Euler characteristic or Betti numbers rule
/// this out.
pub fn graphs_equivalent(g: &Graph, h: &Graph, strategies: &[Strategy], budget: Budget) -> EquivalenceReport {
    let (cg, ch) = (euler_characteristic(g), euler_characteristic(h));
    if cg != ch {
        return EquivalenceReport { verdict: TriState::mismatch("euler_characteristic", cg, ch), witness: None };
    }
    let (bg, bh) = (betti_vector(g), betti_vector(h));
    if bg != bh {
        return EquivalenceReport { verdict: TriState::mismatch("betti", bg, bh), witness: None };
    }
    let left = canonical_candidates(g, strategies, budget);
    let right = canonical_candidates(h, strategies, budget);
    let mut witness = first_homeomorphic(&left, &right, false);
    if witness.is_none() && strategies.contains(&Strategy::MergedBalls) {
        witness = merged_against(g, &right, budget, false).or_else(|| merged_against(h, &left, budget, true));
    }
    let verdict = match &witness {
        Some(w) => TriState::yes(format!("{} and {} topologies are homeomorphic", w.left_strategy, w.right_strategy), vec![]),
        None => TriState::unknown("no pair of candidate topologies is homeomorphic"),
    };
    EquivalenceReport { verdict, witness }
}

fn merged_against(g: &Graph, others: &[Candidate], budget: Budget, flip: bool) -> Option<Witness> {
    for other in others {
        let Some(b) = merged_ball_topology(g, &other.topology.nerve(), budget) else { continue };
        let Ok(t) = TopologicalGraph::with_budget(b, budget) else { continue };
        let mine = [Candidate { name: "merged-balls".into(), topology: t }];
        if let Some(w) = first_homeomorphic(&mine, std::slice::from_ref(other), flip) {
            return Some(w);
        }
    }
    None
}

/// Inserts a new vertex (one more than the largest label) in the middle of
/// the edge `(a, b)`.
pub fn subdivide_edge(g: &Graph, a: i64, b: i64) -> Result<Graph> {
    if !g.has_edge_labels(a, b) {
        return Err(Error::UnknownEdge(a.min(b), a.max(b)));
    }
    let z = g.labels().last().map_or(0, |m| m + 1);
    let mut vertices = g.labels().to_vec();
    vertices.push(z);
    let mut edges: Vec<(i64, i64)> =
        g.edge_labels().into_iter().filter(|&e| e != (a.min(b), a.max(b))).collect();
    edges.push((a, z));
    edges.push((b, z));
    Graph::new(&vertices, &edges)
}

/// Suppresses degree-2 vertices whose neighbors are not adjacent until none
/// is left. Returns the reduced graph and the number of suppressions.
pub fn suppression_normal_form(g: &Graph) -> (Graph, usize) {
    let mut cur = g.clone();
    let mut steps = 0;
    loop {
        let next = (0..cur.order()).find(|&i| {
            let nb = cur.neighbors(i);
            nb.len() == 2 && !cur.has_edge(nb[0], nb[1])
        });
        let Some(i) = next else { return (cur, steps) };
        let (u, w) = (cur.label(cur.neighbors(i)[0]), cur.label(cur.neighbors(i)[1]));
        let x = cur.label(i);
        let vertices: Vec<i64> = cur.labels().iter().copied().filter(|&v| v != x).collect();
        let mut edges: Vec<(i64, i64)> =
            cur.edge_labels().into_iter().filter(|&(p, q)| p != x && q != x).collect();
        edges.push((u.min(w), u.max(w)));
        cur = Graph::new(&vertices, &edges).expect("suppression keeps the graph simple");
        steps += 1;
    }
}

fn degree_profile(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|i| g.degree(i)).collect();
    d.sort_unstable();
    d
}

/// Decides whether `a` and `b` are related by edge subdivisions and their
/// inverses. Both graphs are brought to suppression normal form, which is
/// unique up to isomorphism, and compared. `budget` bounds the number of
/// anti-subdivision steps.
pub fn is_one_homeomorphic(a: &Graph, b: &Graph, budget: Budget) -> TriState {
    let cycle_rank = |g: &Graph| g.size() as i64 - g.order() as i64 + g.components().len() as i64;
    let (ca, cb) = (a.components().len(), b.components().len());
    if ca != cb {
        return TriState::mismatch("components", ca, cb);
    }
    if cycle_rank(a) != cycle_rank(b) {
        return TriState::mismatch("cycle_rank", cycle_rank(a), cycle_rank(b));
    }
    if a.order() + b.order() > budget.0 {
        return TriState::unknown("graphs exceed the subdivision budget");
    }
    let (na, sa) = suppression_normal_form(a);
    let (nb, sb) = suppression_normal_form(b);
    let (pa, pb) = (degree_profile(&na), degree_profile(&nb));
    if pa != pb {
        return TriState::mismatch("normal_form_degrees", pa, pb);
    }
    if IsoProblem::<()>::new(&na, &nb, None, None).first().is_some() {
        TriState::yes(format!("normal forms agree after {sa} and {sb} suppressions"), vec![])
    } else {
        TriState::mismatch("normal_form", na.edge_labels(), nb.edge_labels())
    }
}

/// Carries a topology across the subdivision of `(a, b)`: every element
/// containing both endpoints absorbs the new vertex. Star elements become
/// induced, which changes nothing when the host has no triangles.
pub fn transport_subdivision(b: &SubBasis, a: i64, c: i64) -> Result<SubBasis> {
    let g = subdivide_edge(b.host(), a, c)?;
    let z = *g.labels().last().expect("nonempty");
    let elements = b
        .elements()
        .iter()
        .map(|e| {
            let mut vertices = e.vertices.clone();
            if e.edges(b.host()).contains(&(a.min(c), a.max(c))) {
                vertices = vertices.with(z);
            }
            Element::induced(vertices)
        })
        .collect();
    SubBasis::new(g, elements)
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductReport {
    pub graph: Graph,
    pub subbasis: SubBasis,
    pub nerve: WeightedNerve,
    pub nerve_euler_characteristic: i64,
    pub graph_euler_characteristic: i64,
    pub validation: ValidationReport,
}

/// Builds `G1 x G2` with the element-wise products `A x B` (as induced
/// subgraphs of the product) and validates the result. Product vertex
/// `(u, v)` gets label `i * |G2| + j` for the vertex indices `i`, `j`.
pub fn product_topology_experiment(a: &SubBasis, b: &SubBasis, budget: Budget) -> Result<ProductReport> {
    let (ga, gb) = (a.host(), b.host());
    let m = gb.order() as i64;
    let graph = ga.cartesian_product(gb);
    let mut elements = Vec::new();
    for ea in a.elements() {
        let ia = ga.indices_of(&ea.vertices)?;
        for eb in b.elements() {
            let ib = gb.indices_of(&eb.vertices)?;
            let set: VertexSet = ia.iter().flat_map(|&i| ib.iter().map(move |&j| i as i64 * m + j as i64)).collect();
            elements.push(Element::induced(set));
        }
    }
    elements.dedup();
    let subbasis = SubBasis::new(graph.clone(), elements)?;
    let nerve = nerve(&subbasis);
    let validation = validate_with(&subbasis, budget);
    Ok(ProductReport {
        nerve_euler_characteristic: euler_characteristic(&nerve.graph),
        graph_euler_characteristic: euler_characteristic(&graph),
        graph,
        subbasis,
        nerve,
        validation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin;
    use crate::homotopy::homotopy_equivalent;
    use crate::topology::dimension_summary;

    fn topo(name: &str) -> TopologicalGraph {
        TopologicalGraph::new(library_topology(name).unwrap()).unwrap()
    }

    #[test]
    fn identity_is_continuous() {
        let t = topo("c6-windows");
        assert!(check_continuous(&NerveMap::identity(&t.nerve())));
    }

    #[test]
    fn collapsing_onto_an_indiscrete_path() {
        let c6 = topo("c6-windows");
        let path = TopologicalGraph::new(indiscrete_topology(&builtin("path", &[3]).unwrap())).unwrap();
        let m = NerveMap { source: c6.nerve(), target: path.nerve(), assignment: vec![0; 6] };
        assert!(check_continuous(&m));
    }

    #[test]
    fn raising_dimension_is_not_continuous() {
        let c6 = topo("c6-windows");
        let disc = TopologicalGraph::new(indiscrete_topology(&builtin("wheel", &[5]).unwrap())).unwrap();
        let m = NerveMap { source: c6.nerve(), target: disc.nerve(), assignment: vec![0; 6] };
        assert!(!check_continuous(&m));
        let back = NerveMap { source: disc.nerve(), target: c6.nerve(), assignment: vec![2] };
        assert!(check_continuous(&back));
    }

    #[test]
    fn non_adjacent_images_break_continuity() {
        let t = topo("c6-windows");
        let n = t.nerve();
        let mut assignment: Vec<usize> = (0..6).collect();
        assignment.swap(1, 3);
        let m = NerveMap { source: n.clone(), target: n, assignment };
        assert!(!check_continuous(&m));
    }

    #[test]
    fn small_cycles_are_homeomorphic() {
        let c4 = topo("c4-windows");
        let c5 = topo("c5-windows");
        let m = check_homeomorphic(&c4, &c5).unwrap().unwrap();
        assert!(check_continuous(&m));
        assert!(check_continuous(&m.inverse().unwrap()));
        assert!(check_homeomorphic(&c4, &topo("c6-windows")).unwrap().is_none());
    }

    #[test]
    fn pyramid_graph_is_not_homeomorphic_to_c4() {
        let c4 = topo("c4-windows");
        let ex4 = topo("c4-pyramid");
        assert!(check_homeomorphic(&c4, &ex4).unwrap().is_none());
        assert!(homotopy_equivalent(c4.graph(), ex4.graph()).is_yes());
        let s4 = dimension_summary(ex4.subbasis()).spectrum;
        assert_eq!(spectrum(&ex4.nerve()), {
            let mut s = s4;
            s.sort();
            s
        });
    }

    #[test]
    fn invalid_topologies_are_rejected() {
        let err = TopologicalGraph::new(library_topology("c6-thirds").unwrap()).unwrap_err();
        assert!(matches!(err, Error::InvalidTopology(_)));
    }

    #[test]
    fn icosahedron_and_octahedron_are_equivalent() {
        let ico = builtin("icosahedron", &[]).unwrap();
        let oct = builtin("octahedron", &[]).unwrap();
        let only_merge = [Strategy::UnitBall, Strategy::MergedBalls];
        let r = graphs_equivalent(&ico, &oct, &only_merge, Budget::default());
        assert!(r.verdict.is_yes(), "{:?}", r.verdict);
        let w = r.witness.unwrap();
        assert_eq!(w.left_strategy, "merged-balls");
        assert_eq!(w.left.len(), 6);
        assert!(check_continuous(&w.map));
        let back = graphs_equivalent(&oct, &ico, &only_merge, Budget::default());
        assert!(back.verdict.is_yes());
        assert_eq!(back.witness.unwrap().right_strategy, "merged-balls");
    }

    #[test]
    fn sun_and_tree_are_not_equivalent() {
        let sun = builtin("sun", &[1, 1, 1, 1]).unwrap();
        let tree = builtin("star", &[4]).unwrap();
        let r = graphs_equivalent(&sun, &tree, &DEFAULT_STRATEGIES, Budget::default());
        assert!(r.verdict.is_no());
    }

    #[test]
    fn trees_are_equivalent() {
        let a = builtin("path", &[7]).unwrap();
        let b = builtin("star", &[5]).unwrap();
        let r = graphs_equivalent(&a, &b, &[Strategy::Star, Strategy::Indiscrete], Budget::default());
        assert!(r.verdict.is_yes());
        assert_eq!(r.witness.unwrap().left_strategy, "indiscrete");
    }

    #[test]
    fn subdividing_a_triangle() {
        let mut g = builtin("complete", &[3]).unwrap();
        for _ in 0..3 {
            let (a, b) = g.edge_labels()[0];
            g = subdivide_edge(&g, a, b).unwrap();
        }
        assert!(is_isomorphic(&g, &builtin("cycle", &[6]).unwrap(), None, None).is_some());
        assert!(matches!(subdivide_edge(&g, 1, 2), Err(Error::UnknownEdge(1, 2))));
    }

    #[test]
    fn one_homeomorphism_of_cycles_and_trees() {
        let c = |n| builtin("cycle", &[n]).unwrap();
        assert!(is_one_homeomorphic(&c(7), &c(9), Budget::default()).is_yes());
        assert!(is_one_homeomorphic(&c(3), &c(6), Budget::default()).is_yes());
        let p = |n| builtin("path", &[n]).unwrap();
        assert!(is_one_homeomorphic(&p(2), &p(6), Budget::default()).is_yes());
        assert!(is_one_homeomorphic(&p(4), &builtin("star", &[3]).unwrap(), Budget::default()).is_no());
        assert!(is_one_homeomorphic(&c(5), &p(5), Budget::default()).is_no());
        let theta = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (3, 2), (0, 4), (4, 2)]);
        let k4_minus = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 2)]);
        assert!(is_one_homeomorphic(&theta, &k4_minus, Budget::default()).is_yes());
    }

    #[test]
    fn subdivision_of_a_triangle_changes_chi_and_dimension() {
        let k3 = builtin("complete", &[3]).unwrap();
        let c6 = builtin("cycle", &[6]).unwrap();
        assert!(is_one_homeomorphic(&k3, &c6, Budget::default()).is_yes());
        assert_eq!(euler_characteristic(&k3), 1);
        assert_eq!(euler_characteristic(&c6), 0);
        assert_eq!(crate::invariants::dimension(&k3), Rational::from_int(2));
    }

    #[test]
    fn transported_star_topology_stays_homeomorphic() {
        let g = builtin("petersen", &[]).unwrap();
        let t = TopologicalGraph::new(star_topology(&g)).unwrap();
        let mut b = t.subbasis().clone();
        for k in 0..4 {
            let (x, y) = b.host().edge_labels()[3 * k];
            b = transport_subdivision(&b, x, y).unwrap();
        }
        let t2 = TopologicalGraph::new(b).unwrap();
        assert_eq!(t2.graph().order(), 14);
        assert!(check_homeomorphic(&t, &t2).unwrap().is_some());
    }

    #[test]
    fn product_of_square_and_edge() {
        let c4 = star_topology(&builtin("cycle", &[4]).unwrap());
        let k2 = indiscrete_topology(&builtin("complete", &[2]).unwrap());
        let r = product_topology_experiment(&c4, &k2, Budget::default()).unwrap();
        assert!(is_isomorphic(&r.graph, &builtin("cube", &[]).unwrap(), None, None).is_some());
        assert_eq!(r.graph_euler_characteristic, -4);
        assert_eq!(r.subbasis.len(), 4);
        assert!(r.validation.overall.is_no());
        // Opposite stars meet in two vertical edges of the cube, so every
        // pair is linked.
        assert_eq!(r.nerve.graph.size(), 6);
        assert_eq!(r.nerve_euler_characteristic, 1);

        let k2b = indiscrete_topology(&builtin("complete", &[2]).unwrap());
        let sq = product_topology_experiment(&k2, &k2b, Budget::default()).unwrap();
        assert!(is_isomorphic(&sq.graph, &builtin("cycle", &[4]).unwrap(), None, None).is_some());
        assert_eq!(sq.subbasis.len(), 1);
        assert!(sq.validation.overall.is_no());
    }

    #[test]
    fn product_with_a_point_is_a_copy() {
        let bull = builtin("bull", &[]).unwrap();
        let t = star_topology(&bull);
        let point = indiscrete_topology(&builtin("complete", &[1]).unwrap());
        let r = product_topology_experiment(&t, &point, Budget::default()).unwrap();
        assert!(is_isomorphic(&r.graph, &bull, None, None).is_some());
        assert!(r.validation.overall.is_yes());
    }
}
