//! Deterministic first-improvement local search on the dimension functional.

use std::collections::HashMap;

use serde::Serialize;

use super::{functional_with, intersection, validate_with, Element, Mode, SubBasis};
use crate::graph::VertexSet;
use crate::homotopy::{Budget, Homotopy};
use crate::invariants::{dimension, DimensionOracle};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Serialize)]
pub struct StepRecord {
    pub action: String,
    pub functional: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct OptimizeResult {
    pub subbasis: SubBasis,
    pub trace: Vec<StepRecord>,
    pub initial_functional: Rational,
    pub final_functional: Rational,
    /// Number of candidate sub-bases that were fully validated.
    pub evaluations: usize,
    pub budget_exhausted: bool,
    /// No available move improves the functional.
    pub local_optimum: bool,
    /// No single element can be deleted while keeping a valid topology.
    pub minimal: bool,
    /// Every nonempty intersection of a subfamily is contractible; `None`
    /// when the family is too large to check exhaustively.
    pub intersections_contractible: Option<bool>,
}

struct Candidate {
    action: String,
    elements: Vec<Element>,
    deletion: bool,
}

struct Search<'a> {
    oracle: DimensionOracle<'a>,
    dims: HashMap<Element, Rational>,
}

impl<'a> Search<'a> {
    fn dim(&mut self, b: &SubBasis, e: &Element) -> Rational {
        if let Some(d) = self.dims.get(e) {
            return d.clone();
        }
        let d = match e.mode {
            Mode::Induced => {
                let idx = b.host().indices_of(&e.vertices).expect("element inside host");
                self.oracle.of_indices(&idx)
            }
            Mode::Star(_) => dimension(&e.graph(b.host())),
        };
        self.dims.insert(e.clone(), d.clone());
        d
    }

    fn functional(&mut self, b: &SubBasis) -> Rational {
        let dims: Vec<Rational> = b.elements().iter().map(|e| self.dim(b, e)).collect();
        functional_with(&mut self.oracle, b, &dims)
    }
}

fn candidates(b: &SubBasis) -> Vec<Candidate> {
    let host = b.host();
    let els = b.elements();
    let mut out = Vec::new();
    let replace = |i: usize, new: Vec<Element>| -> Vec<Element> {
        let mut v = els[..i].to_vec();
        v.extend(new);
        v.extend_from_slice(&els[i + 1..]);
        v
    };
    for (i, e) in els.iter().enumerate() {
        let idx = host.indices_of(&e.vertices).expect("element inside host");
        let mut frontier: Vec<usize> = idx.iter().flat_map(|&x| host.neighbors(x).iter().copied()).collect();
        frontier.sort_unstable();
        frontier.dedup();
        for v in frontier.into_iter().filter(|v| idx.binary_search(v).is_err()) {
            let l = host.label(v);
            out.push(Candidate {
                action: format!("grow element {i} by vertex {l}"),
                elements: replace(i, vec![Element::induced(e.vertices.with(l))]),
                deletion: false,
            });
        }
        if e.vertices.len() > 1 {
            for l in e.vertices.iter() {
                out.push(Candidate {
                    action: format!("shrink element {i} by vertex {l}"),
                    elements: replace(i, vec![Element::induced(e.vertices.without(l))]),
                    deletion: false,
                });
            }
        }
        let g = e.graph(host);
        for c in 0..g.order() {
            let rest = g.remove_vertex(c);
            let comps = rest.components();
            if comps.len() < 2 {
                continue;
            }
            let nbhd: VertexSet = g.labels_of(&g.ball_indices(c));
            let first: VertexSet = rest.labels_of(&comps[0]);
            let other: VertexSet = e.vertices.iter().filter(|&x| !first.contains(x)).collect();
            let a = Element::induced(first.union(&nbhd));
            let b2 = Element::induced(other.union(&nbhd));
            if a.vertices == e.vertices || b2.vertices == e.vertices {
                continue;
            }
            out.push(Candidate {
                action: format!("split element {i} at vertex {}", g.label(c)),
                elements: replace(i, vec![a, b2]),
                deletion: false,
            });
        }
    }
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            if intersection(host, &[&els[i], &els[j]]).order() == 0 {
                continue;
            }
            let mut v = els.to_vec();
            v[i] = Element::induced(els[i].vertices.union(&els[j].vertices));
            v.remove(j);
            out.push(Candidate { action: format!("merge elements {i} and {j}"), elements: v, deletion: false });
        }
    }
    for i in 0..els.len() {
        let mut v = els.to_vec();
        v.remove(i);
        out.push(Candidate { action: format!("delete element {i}"), elements: v, deletion: true });
    }
    out
}

fn has_duplicates(v: &[Element]) -> bool {
    v.iter().enumerate().any(|(i, e)| v[..i].contains(e))
}

/// Local search from a valid sub-basis. Moves are tried in a fixed order
/// (grow, shrink and split per element, then merges of intersecting pairs,
/// then deletions) and the first valid one that lowers the functional is
/// taken; deletions are also taken when the functional stays equal.
/// `budget` bounds the number of candidate validations.
pub fn optimize(b0: &SubBasis, budget: usize) -> Result<OptimizeResult> {
    let start = validate_with(b0, Budget::default());
    if !start.is_valid() {
        return Err(Error::InvalidTopology(format!("starting sub-basis validates {}", start.overall.name())));
    }
    let mut search = Search { oracle: DimensionOracle::new(b0.host()), dims: HashMap::new() };
    let initial = search.functional(b0);
    let mut current = b0.clone();
    let mut value = initial.clone();
    let mut trace = Vec::new();
    let mut evaluations = 0;
    let mut budget_exhausted = false;
    'search: loop {
        for cand in candidates(&current) {
            if cand.elements.is_empty() || has_duplicates(&cand.elements) {
                continue;
            }
            let next = current.with_elements(cand.elements)?;
            let f = search.functional(&next);
            let improves = if cand.deletion { f <= value } else { f < value };
            if !improves {
                continue;
            }
            if evaluations == budget {
                budget_exhausted = true;
                break 'search;
            }
            evaluations += 1;
            if validate_with(&next, Budget::default()).is_valid() {
                trace.push(StepRecord { action: cand.action, functional: f.clone() });
                current = next;
                value = f;
                continue 'search;
            }
        }
        break;
    }
    let minimal = (0..current.len()).all(|i| {
        let mut v = current.elements().to_vec();
        v.remove(i);
        v.is_empty() || !validate_with(&current.with_elements(v).expect("subfamily"), Budget::default()).is_valid()
    });
    let intersections_contractible = subfamily_intersections_contractible(&current);
    Ok(OptimizeResult {
        subbasis: current,
        trace,
        initial_functional: initial,
        final_functional: value,
        evaluations,
        budget_exhausted,
        local_optimum: !budget_exhausted,
        minimal,
        intersections_contractible,
    })
}

const SUBFAMILY_LIMIT: usize = 200_000;

/// Checks that every nonempty intersection of two or more elements is
/// contractible. Families with empty intersection are exempt.
pub fn subfamily_intersections_contractible(b: &SubBasis) -> Option<bool> {
    let mut h = Homotopy::new(Budget::default());
    let mut visited = 0;
    let mut stack: Vec<Vec<usize>> = (0..b.len()).map(|i| vec![i]).collect();
    while let Some(family) = stack.pop() {
        visited += 1;
        if visited > SUBFAMILY_LIMIT {
            return None;
        }
        let last = *family.last().unwrap();
        for j in last + 1..b.len() {
            let mut next = family.clone();
            next.push(j);
            let refs: Vec<&Element> = next.iter().map(|&k| &b.elements()[k]).collect();
            let g = intersection(b.host(), &refs);
            if g.order() == 0 {
                continue;
            }
            if !h.contractible(&g).is_yes() {
                return Some(false);
            }
            stack.push(next);
        }
    }
    Some(true)
}
