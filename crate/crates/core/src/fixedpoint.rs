//! Lefschetz numbers of graph automorphisms and invariant element families.
//!
//! An automorphism `f` of `G` permutes the cliques of `G`. Pulling back
//! cochains along `f` gives signed permutation matrices `U_k` that commute
//! with the exterior derivative, and hence maps `T_k` on cohomology. The
//! Lefschetz number `L(f) = Σ (-1)^k tr(T_k)` is computed three ways: on
//! cohomology, as the cochain super-trace, and as a signed count of fixed
//! cliques.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::cohomology::{IntMatrix, OrientedComplex};
use crate::graph::{automorphisms, enumerate_cliques, Graph, VertexSet};
use crate::homeo::TopologicalGraph;
use crate::linalg::{column_basis, coordinates, nullspace, QMatrix};
use crate::topology::{Element, WeightedNerve};
use crate::{Error, Result};

/// A permutation of nerve nodes preserving adjacency and weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NerveAutomorphism {
    pub permutation: Vec<usize>,
}

/// All weight-preserving automorphisms, lexicographically ordered.
pub fn nerve_automorphisms(n: &WeightedNerve) -> Vec<NerveAutomorphism> {
    automorphisms(&n.graph, Some(&n.weights))
        .into_iter()
        .map(|permutation| NerveAutomorphism { permutation })
        .collect()
}

/// Checks that `perm` (an index map `i -> perm[i]`) is an automorphism of `g`.
pub fn check_automorphism(g: &Graph, perm: &[usize]) -> Result<()> {
    let n = g.order();
    if perm.len() != n {
        return Err(Error::NotAutomorphism(format!("{} images for {} vertices", perm.len(), n)));
    }
    let mut seen = vec![false; n];
    for &j in perm {
        if j >= n || seen[j] {
            return Err(Error::NotAutomorphism("not a permutation".into()));
        }
        seen[j] = true;
    }
    if let Some((i, j)) = g.edges().find(|&(i, j)| !g.has_edge(perm[i], perm[j])) {
        return Err(Error::NotAutomorphism(format!("edge ({}, {}) is not mapped to an edge", g.label(i), g.label(j))));
    }
    Ok(())
}

/// Converts `(label, image label)` pairs into an index permutation.
pub fn permutation_from_labels(g: &Graph, pairs: &[(i64, i64)]) -> Result<Vec<usize>> {
    let mut perm = vec![usize::MAX; g.order()];
    for &(a, b) in pairs {
        perm[g.index_of(a)?] = g.index_of(b)?;
    }
    if perm.contains(&usize::MAX) {
        return Err(Error::NotAutomorphism("map is not defined on every vertex".into()));
    }
    Ok(perm)
}

/// Parity of the permutation sorting `v`, as `+1` or `-1`.
fn sort_sign(v: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Per-grade pullback matrices `U_k`, with `U_k[σ][τ] = ±1` when
/// `f(σ) = τ` as sets. The chain-map identity `d_k U_k = U_{k+1} d_k` is
/// verified and a failure reported as an internal error.
pub fn induced_cochain_maps(g: &Graph, perm: &[usize]) -> Result<Vec<IntMatrix>> {
    check_automorphism(g, perm)?;
    let complex = OrientedComplex::new(g);
    let maps = cochain_maps(&complex, perm);
    for k in 0..maps.len().saturating_sub(1) {
        let d = complex.derivative(k);
        if d.mul(&maps[k]) != maps[k + 1].mul(&d) {
            return Err(Error::Internal(format!("pullback does not commute with d_{k}")));
        }
    }
    Ok(maps)
}

fn cochain_maps(complex: &OrientedComplex, perm: &[usize]) -> Vec<IntMatrix> {
    (0..complex.grades())
        .map(|k| {
            let cl = complex.cliques().grade(k);
            let mut u = IntMatrix::zeros(cl.len(), cl.len());
            for (r, sigma) in cl.iter().enumerate() {
                let image: Vec<usize> = sigma.iter().map(|&v| perm[v]).collect();
                let mut sorted = image.clone();
                sorted.sort_unstable();
                let c = complex.cliques().position(&sorted).expect("automorphisms map cliques to cliques");
                u.set(r, c, sort_sign(&image));
            }
            u
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedSimplex {
    pub clique: Vec<i64>,
    /// `(-1)^k` times the sign of `f` restricted to the clique.
    pub sign: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LefschetzReport {
    /// `tr(T_k)` on `H^k`.
    pub traces: Vec<i64>,
    pub lefschetz: i64,
    /// `tr(U_k)` on cochains.
    pub cochain_traces: Vec<i64>,
    pub cochain_supertrace: i64,
    pub fixed_simplices: Vec<FixedSimplex>,
}

fn to_q(m: &IntMatrix) -> QMatrix {
    m.to_rational()
}

fn apply(u: &QMatrix, v: &[BigRational]) -> Vec<BigRational> {
    u.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).fold(BigRational::zero(), |s, x| s + x)).collect()
}

/// Trace of `U` on `ker d_k / im d_{k-1}`, computed by completing a basis of
/// the image to one of the kernel.
fn cohomology_trace(complex: &OrientedComplex, u: &IntMatrix, k: usize) -> Result<i64> {
    let n = complex.count(k);
    let kernel = nullspace(&to_q(&complex.derivative(k)), n);
    let image = if k == 0 { Vec::new() } else { column_basis(&to_q(&complex.derivative(k - 1))) };
    let stacked: QMatrix = (0..n).map(|i| image.iter().chain(&kernel).map(|v| v[i].clone()).collect()).collect();
    let basis = if n == 0 { Vec::new() } else { column_basis(&stacked) };
    let b = image.len();
    let complement = &basis[b..];
    if complement.is_empty() {
        return Ok(0);
    }
    let uq = to_q(u);
    let images: Vec<Vec<BigRational>> = complement.iter().map(|c| apply(&uq, c)).collect();
    let coords = coordinates(&basis, &images)
        .ok_or_else(|| Error::Internal(format!("U_{k} does not preserve the cocycles")))?;
    let trace = (0..complement.len()).fold(BigRational::zero(), |s, i| s + &coords[i][b + i]);
    if !trace.is_integer() {
        return Err(Error::Internal(format!("non-integral trace on H^{k}")));
    }
    trace.to_integer().to_i64().ok_or_else(|| Error::Internal("trace overflow".into()))
}

fn alternating(v: &[i64]) -> i64 {
    v.iter().enumerate().map(|(k, t)| if k % 2 == 0 { *t } else { -t }).sum()
}

/// Lefschetz number of the automorphism `perm` (index map) of `g`. The
/// cohomological, cochain and fixed-clique counts must agree; a mismatch is
/// an internal error.
pub fn lefschetz_number(g: &Graph, perm: &[usize]) -> Result<LefschetzReport> {
    let maps = induced_cochain_maps(g, perm)?;
    let complex = OrientedComplex::new(g);
    let traces = maps.iter().enumerate().map(|(k, u)| cohomology_trace(&complex, u, k)).collect::<Result<Vec<_>>>()?;
    let cochain_traces: Vec<i64> = maps.iter().map(IntMatrix::trace).collect();
    let mut fixed_simplices = Vec::new();
    for k in 0..complex.grades() {
        for sigma in complex.cliques().grade(k) {
            let image: Vec<usize> = sigma.iter().map(|&v| perm[v]).collect();
            let mut sorted = image.clone();
            sorted.sort_unstable();
            if &sorted == sigma {
                let parity = if k % 2 == 0 { 1 } else { -1 };
                fixed_simplices.push(FixedSimplex {
                    clique: sigma.iter().map(|&v| g.label(v)).collect(),
                    sign: parity * sort_sign(&image),
                });
            }
        }
    }
    let report = LefschetzReport {
        lefschetz: alternating(&traces),
        cochain_supertrace: alternating(&cochain_traces),
        traces,
        cochain_traces,
        fixed_simplices,
    };
    let fixed: i64 = report.fixed_simplices.iter().map(|s| s.sign).sum();
    if report.lefschetz != report.cochain_supertrace || report.lefschetz != fixed {
        return Err(Error::Internal(format!(
            "Hopf trace identity fails: L = {}, super-trace = {}, fixed count = {}",
            report.lefschetz, report.cochain_supertrace, fixed
        )));
    }
    if report.lefschetz != 0 && report.fixed_simplices.is_empty() {
        return Err(Error::Internal("nonzero Lefschetz number without fixed cliques".into()));
    }
    Ok(report)
}

/// A family of pairwise linked elements permuted among themselves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSet {
    /// Nerve nodes, i.e. element indices.
    pub nodes: Vec<usize>,
    pub elements: Vec<Element>,
    pub union: VertexSet,
    pub lefschetz: i64,
}

/// Smallest nerve clique mapped onto itself by `a`, with the union of its
/// elements. Guaranteed to exist when the Lefschetz number of `a` on the
/// nerve graph is nonzero; may be absent otherwise.
pub fn fixed_invariant_set(t: &TopologicalGraph, a: &NerveAutomorphism) -> Result<Option<InvariantSet>> {
    let nerve = t.nerve();
    check_automorphism(&nerve.graph, &a.permutation)?;
    if a.permutation.iter().enumerate().any(|(i, &j)| nerve.weights[i] != nerve.weights[j]) {
        return Err(Error::NotAutomorphism("nerve weights are not preserved".into()));
    }
    let lefschetz = lefschetz_number(&nerve.graph, &a.permutation)?.lefschetz;
    let cliques = enumerate_cliques(&nerve.graph, None);
    for k in 0..cliques.num_grades() {
        for sigma in cliques.grade(k) {
            let mut image: Vec<usize> = sigma.iter().map(|&v| a.permutation[v]).collect();
            image.sort_unstable();
            if &image != sigma {
                continue;
            }
            let elements: Vec<Element> = sigma.iter().map(|&i| t.subbasis().elements()[i].clone()).collect();
            let union = elements.iter().fold(VertexSet::empty(), |u, e| u.union(&e.vertices));
            return Ok(Some(InvariantSet { nodes: sigma.clone(), elements, union, lefschetz }));
        }
    }
    if lefschetz != 0 {
        return Err(Error::Internal("nonzero Lefschetz number but no invariant nerve clique".into()));
    }
    Ok(None)
}

/// Identity permutation on `n` points.
pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}
