//! Graph topologies given by sub-bases of contractible subgraphs.
//!
//! A sub-basis element is a vertex set together with a mode: `Induced`
//! elements are induced subgraphs of the host, `Star(c)` elements keep only
//! the edges through the center `c`. Two elements are linked in the nerve
//! when they intersect and `dim(A ∩ B) >= min(dim A, dim B)`.

mod library;
mod optimize;

pub use library::{library_names, library_topology, LibraryEntry, LIBRARY};
pub use optimize::{optimize, OptimizeResult, StepRecord};

use serde::{Deserialize, Serialize};

use crate::graph::{is_isomorphic, Graph, GraphJson, VertexSet};
use crate::homotopy::{Budget, Homotopy, TriState};
use crate::invariants::{dimension, DimensionOracle};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Induced,
    Star(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Element {
    pub vertices: VertexSet,
    #[serde(default = "induced")]
    pub mode: Mode,
}

fn induced() -> Mode {
    Mode::Induced
}

impl Element {
    pub fn induced(vertices: VertexSet) -> Self {
        Element { vertices, mode: Mode::Induced }
    }

    /// The star graph of `center`: its closed neighborhood with the edges
    /// through the center only.
    pub fn star(g: &Graph, center: i64) -> Result<Self> {
        let i = g.index_of(center)?;
        Ok(Element { vertices: g.labels_of(&g.ball_indices(i)), mode: Mode::Star(center) })
    }

    pub fn is_star(&self) -> bool {
        matches!(self.mode, Mode::Star(_))
    }

    /// Edges of the element graph, as label pairs `(a, b)` with `a < b`.
    pub fn edges(&self, host: &Graph) -> Vec<(i64, i64)> {
        match self.mode {
            Mode::Induced => {
                let idx = host.indices_of(&self.vertices).expect("element inside host");
                host.induced(&idx).edge_labels()
            }
            Mode::Star(c) => self
                .vertices
                .iter()
                .filter(|&v| v != c)
                .map(|v| (c.min(v), c.max(v)))
                .collect(),
        }
    }

    pub fn graph(&self, host: &Graph) -> Graph {
        match self.mode {
            Mode::Induced => host.induced_subgraph(&self.vertices).expect("element inside host"),
            Mode::Star(_) => Graph::from_parts(&self.vertices, &self.edges(host)).expect("star inside host"),
        }
    }

    fn check(&self, host: &Graph) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        host.indices_of(&self.vertices)?;
        if let Mode::Star(c) = self.mode {
            if !self.vertices.contains(c) {
                return Err(Error::InvalidTopology(format!("star center {c} is not among its vertices")));
            }
            for v in self.vertices.iter().filter(|&v| v != c) {
                if !host.has_edge_labels(c, v) {
                    return Err(Error::UnknownEdge(c.min(v), c.max(v)));
                }
            }
        }
        Ok(())
    }
}

/// Intersection of element graphs.
///
/// Two induced elements meet in the induced subgraph on their common
/// vertices. When a star is involved the intersection is the graph spanned
/// by the common edges, or the edgeless graph on the common vertices if
/// there are no common edges.
pub fn intersection(host: &Graph, elements: &[&Element]) -> Graph {
    let Some((first, rest)) = elements.split_first() else {
        return Graph::empty();
    };
    let mut common = first.vertices.clone();
    for e in rest {
        common = common.intersection(&e.vertices);
    }
    if !elements.iter().any(|e| e.is_star()) {
        return host.induced_subgraph(&common).expect("element inside host");
    }
    let mut edges = first.edges(host);
    for e in rest {
        let other = e.edges(host);
        edges.retain(|x| other.contains(x));
    }
    if edges.is_empty() {
        Graph::from_parts(&common, &[]).expect("vertices inside host")
    } else {
        let spanned: VertexSet = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        Graph::from_parts(&spanned, &edges).expect("edges inside host")
    }
}

/// A host graph together with a finite family of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubBasis {
    host: Graph,
    elements: Vec<Element>,
}

#[derive(Serialize, Deserialize)]
struct SubBasisJson {
    graph: GraphJson,
    elements: Vec<Element>,
}

impl Serialize for SubBasis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubBasisJson { graph: GraphJson::from(&self.host), elements: self.elements.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubBasis {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SubBasisJson::deserialize(d)?;
        let host = Graph::try_from(j.graph).map_err(serde::de::Error::custom)?;
        SubBasis::new(host, j.elements).map_err(serde::de::Error::custom)
    }
}

impl SubBasis {
    /// Checks that every element lies in the host and that no element repeats.
    pub fn new(host: Graph, elements: Vec<Element>) -> Result<Self> {
        for (i, e) in elements.iter().enumerate() {
            e.check(&host)?;
            if elements[..i].contains(e) {
                return Err(Error::InvalidTopology(format!("element {:?} is repeated", e.vertices)));
            }
        }
        Ok(SubBasis { host, elements })
    }

    /// Convenience constructor for induced elements given as label lists.
    pub fn from_sets(host: Graph, sets: &[&[i64]]) -> Result<Self> {
        let elements = sets.iter().map(|s| Element::induced(VertexSet::new(s.iter().copied()))).collect();
        SubBasis::new(host, elements)
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element_graph(&self, i: usize) -> Graph {
        self.elements[i].graph(&self.host)
    }

    pub fn element_dimensions(&self) -> Vec<Rational> {
        (0..self.len()).map(|i| dimension(&self.element_graph(i))).collect()
    }

    /// The same sub-basis after renaming vertices with the injective map `f`.
    pub fn relabeled(&self, f: impl Fn(i64) -> i64) -> Result<Self> {
        let host = self.host.relabel(&f)?;
        let elements = self
            .elements
            .iter()
            .map(|e| Element {
                vertices: e.vertices.iter().map(&f).collect(),
                mode: match e.mode {
                    Mode::Induced => Mode::Induced,
                    Mode::Star(c) => Mode::Star(f(c)),
                },
            })
            .collect();
        SubBasis::new(host, elements)
    }

    pub(crate) fn with_elements(&self, elements: Vec<Element>) -> Result<Self> {
        SubBasis::new(self.host.clone(), elements)
    }

    /// Pairwise data shared by the nerve and the validator.
    fn pairs(&self, dims: &[Rational]) -> Vec<PairData> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let graph = intersection(&self.host, &[&self.elements[i], &self.elements[j]]);
                let dim = dimension(&graph);
                let linked = graph.order() > 0 && dim >= dims[i].clone().min(dims[j].clone());
                out.push(PairData { i, j, graph, dim, linked });
            }
        }
        out
    }
}

struct PairData {
    i: usize,
    j: usize,
    graph: Graph,
    dim: Rational,
    linked: bool,
}

/// The nerve graph with one node per element (labeled by element index) and
/// the element dimensions as weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedNerve {
    pub graph: Graph,
    pub weights: Vec<Rational>,
}

impl WeightedNerve {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

pub fn nerve(b: &SubBasis) -> WeightedNerve {
    let weights = b.element_dimensions();
    let edges: Vec<(usize, usize)> = b.pairs(&weights).into_iter().filter(|p| p.linked).map(|p| (p.i, p.j)).collect();
    WeightedNerve { graph: Graph::from_edges(b.len(), &edges), weights }
}

#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub i: usize,
    pub j: usize,
    pub dim_i: Rational,
    pub dim_j: Rational,
    pub dim_intersection: Rational,
    pub linked: bool,
    /// Only evaluated for linked pairs.
    pub intersection_contractible: Option<TriState>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub contractible_elements: Vec<TriState>,
    pub dimension_pairs: Vec<PairReport>,
    pub missing_edges: Vec<(i64, i64)>,
    pub nerve_homotopic: TriState,
    pub overall: TriState,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.overall.is_yes()
    }
}

pub fn validate(b: &SubBasis) -> ValidationReport {
    validate_with(b, Budget::default())
}

pub fn validate_with(b: &SubBasis, budget: Budget) -> ValidationReport {
    let mut h = Homotopy::new(budget);
    let dims = b.element_dimensions();
    let contractible_elements: Vec<TriState> = (0..b.len()).map(|i| h.contractible(&b.element_graph(i))).collect();
    let mut edges = Vec::new();
    let dimension_pairs: Vec<PairReport> = b
        .pairs(&dims)
        .into_iter()
        .map(|p| {
            if p.linked {
                edges.push((p.i, p.j));
            }
            PairReport {
                i: p.i,
                j: p.j,
                dim_i: dims[p.i].clone(),
                dim_j: dims[p.j].clone(),
                dim_intersection: p.dim,
                linked: p.linked,
                intersection_contractible: p.linked.then(|| h.contractible(&p.graph)),
            }
        })
        .collect();
    let mut covered = std::collections::BTreeSet::new();
    for e in b.elements() {
        covered.extend(e.edges(b.host()));
    }
    let missing_edges: Vec<(i64, i64)> = b.host().edge_labels().into_iter().filter(|e| !covered.contains(e)).collect();
    let nerve_graph = Graph::from_edges(b.len(), &edges);
    let nerve_homotopic = nerve_homotopy(&mut h, b, &nerve_graph);

    let mut verdicts: Vec<&TriState> = contractible_elements.iter().collect();
    verdicts.extend(dimension_pairs.iter().filter_map(|p| p.intersection_contractible.as_ref()));
    verdicts.push(&nerve_homotopic);
    let overall = if let Some(no) = verdicts.iter().find(|v| v.is_no()) {
        (*no).clone()
    } else if !missing_edges.is_empty() {
        TriState::No(crate::homotopy::Mismatch {
            invariant: "edge_cover".into(),
            left: format!("{} uncovered edges", missing_edges.len()),
            right: "0".into(),
        })
    } else if let Some(u) = verdicts.iter().find(|v| v.is_unknown()) {
        (*u).clone()
    } else {
        TriState::yes("all axioms hold", Vec::new())
    };
    ValidationReport { contractible_elements, dimension_pairs, missing_edges, nerve_homotopic, overall }
}

/// Decides `host ≃ nerve`. When the direct comparison is inconclusive, the
/// cover cylinder (host and nerve side by side, with each element's vertices
/// joined to its nerve node) is reduced onto each side.
fn nerve_homotopy(h: &mut Homotopy, b: &SubBasis, nerve_graph: &Graph) -> TriState {
    let direct = h.equivalent(b.host(), nerve_graph);
    if !direct.is_unknown() || b.is_empty() {
        return direct;
    }
    let host = b.host();
    let base = host.labels().last().map_or(0, |&m| m + 1);
    let mut labels = host.labels().to_vec();
    labels.extend((0..b.len() as i64).map(|i| base + i));
    let mut edges = host.edge_labels();
    edges.extend(nerve_graph.edges().map(|(i, j)| (base + i as i64, base + j as i64)));
    for (i, e) in b.elements().iter().enumerate() {
        edges.extend(e.vertices.iter().map(|x| (x, base + i as i64)));
    }
    let cylinder = Graph::new(&labels, &edges).expect("cylinder is simple");
    let nodes: VertexSet = (0..b.len() as i64).map(|i| base + i).collect();
    match h.common_extension(&cylinder, &host.vertex_set(), &nodes) {
        yes @ TriState::Yes(_) => yes,
        _ => direct,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionSummary {
    pub spectrum: Vec<Rational>,
    pub topological_dimension: Rational,
    pub functional: Rational,
    /// Largest nerve degree, a proxy for the covering dimension.
    pub max_nerve_degree: usize,
}

/// Local mismatch `|1 + dim_G(A) - dim(A)|` of one element.
///
/// `dim_G(A)` averages `dim S(x)` over `A`; adding one turns it into the
/// average local dimension `1 + dim S(x)` so that it is comparable with the
/// inductive dimension of `A` itself.
pub(crate) fn element_defect(oracle: &mut DimensionOracle<'_>, e: &Element, dim: &Rational) -> Rational {
    let rel = crate::invariants::relative_dimension_with(oracle, &e.vertices).expect("nonempty element");
    (rel + Rational::one() - dim.clone()).abs()
}

pub fn dimension_summary(b: &SubBasis) -> DimensionSummary {
    let spectrum = b.element_dimensions();
    let mut oracle = DimensionOracle::new(b.host());
    let functional = functional_with(&mut oracle, b, &spectrum);
    let nerve = nerve(b);
    DimensionSummary {
        topological_dimension: Rational::mean(&spectrum).unwrap_or_else(Rational::zero),
        functional,
        max_nerve_degree: (0..nerve.graph.order()).map(|i| nerve.graph.degree(i)).max().unwrap_or(0),
        spectrum,
    }
}

pub(crate) fn functional_with(oracle: &mut DimensionOracle<'_>, b: &SubBasis, dims: &[Rational]) -> Rational {
    if b.is_empty() {
        return Rational::zero();
    }
    let total: Rational = b.elements().iter().zip(dims).map(|(e, d)| element_defect(oracle, e, d)).sum();
    total / Rational::from_int(b.len() as i64)
}

/// One star element per non-isolated vertex and a singleton per isolated vertex.
pub fn star_topology(g: &Graph) -> SubBasis {
    let elements = g
        .labels()
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            if g.degree(i) == 0 {
                Element::induced(VertexSet::new([x]))
            } else {
                Element::star(g, x).expect("vertex of g")
            }
        })
        .collect();
    SubBasis::new(g.clone(), elements).expect("stars are subgraphs")
}

/// The distinct unit balls, in order of their centers.
pub fn unit_ball_topology(g: &Graph) -> SubBasis {
    let mut elements: Vec<Element> = Vec::new();
    for i in 0..g.order() {
        let e = Element::induced(g.labels_of(&g.ball_indices(i)));
        if !elements.contains(&e) {
            elements.push(e);
        }
    }
    SubBasis::new(g.clone(), elements).expect("balls are subgraphs")
}

/// The single element `V`.
pub fn indiscrete_topology(g: &Graph) -> SubBasis {
    let elements = if g.order() == 0 { Vec::new() } else { vec![Element::induced(g.vertex_set())] };
    SubBasis::new(g.clone(), elements).expect("whole vertex set")
}

/// False iff the elements split into two nonempty families with all
/// cross-intersections empty.
pub fn is_connected_topological(b: &SubBasis) -> bool {
    let n = b.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !b.elements[i].vertices.intersection(&b.elements[j].vertices).is_empty() {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).is_connected()
}

pub fn is_path_connected(g: &Graph) -> bool {
    g.is_connected()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DimensionPredicates {
    pub homogeneous: bool,
    pub maximal: bool,
}

/// Predicates for the subgraph induced by `w`.
pub fn dimension_predicates(g: &Graph, w: &VertexSet) -> Result<DimensionPredicates> {
    if w.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let k = g.induced_subgraph(w)?;
    subgraph_predicates(g, &k)
}

/// Predicates for an arbitrary subgraph `k` of `g`: homogeneous when
/// `dim S_K(x)` is the same for all its vertices, maximal when
/// `dim S_K(x) = dim S_G(x)` for all of them.
pub fn subgraph_predicates(g: &Graph, k: &Graph) -> Result<DimensionPredicates> {
    if k.order() == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let mut og = DimensionOracle::new(g);
    let mut ok = DimensionOracle::new(k);
    let mut local = Vec::with_capacity(k.order());
    let mut maximal = true;
    for (i, &x) in k.labels().iter().enumerate() {
        let dk = ok.sphere(i);
        if dk != og.sphere(g.index_of(x)?) {
            maximal = false;
        }
        local.push(dk);
    }
    Ok(DimensionPredicates { homogeneous: local.windows(2).all(|w| w[0] == w[1]), maximal })
}

/// True when two weighted nerves are isomorphic with matching weights.
pub fn nerves_isomorphic(a: &WeightedNerve, b: &WeightedNerve) -> Option<crate::graph::VertexBijection> {
    is_isomorphic(&a.graph, &b.graph, Some(&a.weights), Some(&b.weights))
}
