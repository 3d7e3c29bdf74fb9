//! Inductive dimension, Euler characteristic, curvature and Poincaré–Hopf
//! indices. Everything here is exact.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use serde::Serialize;

use crate::graph::{enumerate_cliques, Graph, VertexSet};
use crate::{Error, Rational, Result};

/// Memoized inductive dimension of induced subgraphs of one host graph.
///
/// `dim(∅) = -1` and `dim(H) = mean over x of (1 + dim(S_H(x)))`.
pub struct DimensionOracle<'g> {
    g: &'g Graph,
    memo: HashMap<FixedBitSet, Rational>,
}

impl<'g> DimensionOracle<'g> {
    pub fn new(g: &'g Graph) -> Self {
        DimensionOracle { g, memo: HashMap::new() }
    }

    /// Dimension of the whole host.
    pub fn whole(&mut self) -> Rational {
        let mut all = FixedBitSet::with_capacity(self.g.order());
        all.insert_range(..);
        self.of_set(&all)
    }

    /// Dimension of the subgraph induced by ascending vertex indices.
    pub fn of_indices(&mut self, idx: &[usize]) -> Rational {
        let mut set = FixedBitSet::with_capacity(self.g.order());
        set.extend(idx.iter().copied());
        self.of_set(&set)
    }

    /// Dimension of the unit sphere of the vertex at index `i`.
    pub fn sphere(&mut self, i: usize) -> Rational {
        let idx = self.g.sphere_indices(i).to_vec();
        self.of_indices(&idx)
    }

    fn of_set(&mut self, set: &FixedBitSet) -> Rational {
        if let Some(d) = self.memo.get(set) {
            return d.clone();
        }
        let n = set.count_ones(..);
        let d = if n == 0 {
            Rational::from_int(-1)
        } else {
            let mut total = Rational::zero();
            for x in set.ones() {
                let mut sphere = FixedBitSet::with_capacity(self.g.order());
                sphere.extend(self.g.neighbors(x).iter().copied().filter(|&y| set.contains(y)));
                total += Rational::one() + self.of_set(&sphere);
            }
            total / Rational::from_int(n as i64)
        };
        self.memo.insert(set.clone(), d.clone());
        d
    }
}

/// Inductive dimension of `g`.
pub fn dimension(g: &Graph) -> Rational {
    DimensionOracle::new(g).whole()
}

/// `dim_G(x) = dim(S_G(x))`, the dimension of a vertex seen from the host.
pub fn vertex_dimension(g: &Graph, x: i64) -> Result<Rational> {
    let i = g.index_of(x)?;
    Ok(DimensionOracle::new(g).sphere(i))
}

/// Mean of `dim(S_G(x))` over `x ∈ w`; spheres are taken in `g`.
pub fn relative_dimension(g: &Graph, w: &VertexSet) -> Result<Rational> {
    relative_dimension_with(&mut DimensionOracle::new(g), w)
}

pub fn relative_dimension_with(oracle: &mut DimensionOracle<'_>, w: &VertexSet) -> Result<Rational> {
    if w.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let idx = oracle.g.indices_of(w)?;
    let mut total = Rational::zero();
    for i in idx {
        total += oracle.sphere(i);
    }
    Ok(total / Rational::from_int(w.len() as i64))
}

/// `Σ_k (-1)^k v_k` over the clique counts.
pub fn euler_characteristic(g: &Graph) -> i64 {
    enumerate_cliques(g, None).euler_characteristic()
}

/// `K(x) = Σ_{k≥0} (-1)^k V_{k-1}(x) / (k+1)` with `V_{-1} = 1` and `V_k(x)`
/// the number of `K_{k+1}` in `S(x)`.
pub fn curvature(g: &Graph, x: i64) -> Result<Rational> {
    let sphere = g.unit_sphere(x)?;
    let counts = enumerate_cliques(&sphere, None).counts();
    let mut k = Rational::one();
    for (j, &v) in counts.iter().enumerate() {
        let term = Rational::new(v as i64, j as i64 + 2);
        if j % 2 == 0 {
            k = k - term;
        } else {
            k = k + term;
        }
    }
    Ok(k)
}

/// An injective function on the vertices together with its lower spheres
/// `S^-(x) = {y ∈ S(x) : f(y) < f(x)}` and indices `1 - χ(S^-(x))`.
#[derive(Debug, Clone, Serialize)]
pub struct MorseData {
    pub f: Vec<Rational>,
    pub lower_spheres: Vec<VertexSet>,
    pub indices: Vec<i64>,
}

impl MorseData {
    /// `f[i]` is the value at the `i`-th vertex in ascending label order.
    pub fn new(g: &Graph, f: &[Rational]) -> Result<Self> {
        check_injective(g, f)?;
        let mut lower_spheres = Vec::with_capacity(g.order());
        let mut indices = Vec::with_capacity(g.order());
        for x in 0..g.order() {
            let lower: Vec<usize> = g.neighbors(x).iter().copied().filter(|&y| f[y] < f[x]).collect();
            indices.push(1 - euler_characteristic(&g.induced(&lower)));
            lower_spheres.push(g.labels_of(&lower));
        }
        Ok(MorseData { f: f.to_vec(), lower_spheres, indices })
    }
}

fn check_injective(g: &Graph, f: &[Rational]) -> Result<()> {
    if f.len() != g.order() {
        return Err(Error::FunctionArity { expected: g.order(), got: f.len() });
    }
    let mut order: Vec<usize> = (0..f.len()).collect();
    order.sort_by(|&a, &b| f[a].cmp(&f[b]));
    if let Some(w) = order.windows(2).find(|w| f[w[0]] == f[w[1]]) {
        return Err(Error::NotInjective(g.label(w[0].min(w[1])), g.label(w[0].max(w[1]))));
    }
    Ok(())
}

/// `i_f(x) = 1 - χ(S^-(x))`.
pub fn poincare_hopf_index(g: &Graph, f: &[Rational], x: i64) -> Result<i64> {
    check_injective(g, f)?;
    let i = g.index_of(x)?;
    let lower: Vec<usize> = g.neighbors(i).iter().copied().filter(|&y| f[y] < f[i]).collect();
    Ok(1 - euler_characteristic(&g.induced(&lower)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincareHopfReport {
    pub sum: i64,
    pub chi: i64,
    pub equal: bool,
}

pub fn poincare_hopf_check(g: &Graph, f: &[Rational]) -> Result<PoincareHopfReport> {
    let data = MorseData::new(g, f)?;
    let sum = data.indices.iter().sum();
    let chi = euler_characteristic(g);
    Ok(PoincareHopfReport { sum, chi, equal: sum == chi })
}

/// Expected index of `x` over uniformly random vertex orderings.
///
/// In a random total order the set of neighbors below `x` has a uniformly
/// random size `0..=d`, and given its size it is a uniform subset, so
/// `E = Σ_{W ⊆ S(x)} (1 - χ(W)) / ((d+1) C(d, |W|))`.
pub fn index_expectation(g: &Graph, x: i64) -> Result<Rational> {
    let sphere = g.unit_sphere(x)?;
    let d = sphere.order();
    if d > 24 {
        return Err(Error::BadParams {
            name: "index_expectation".into(),
            reason: format!("vertex degree {d} is too large for subset enumeration"),
        });
    }
    // signed clique masks: χ(W) = Σ_{c ⊆ W} (-1)^{|c|-1}
    let cliques: Vec<(u32, i64)> = enumerate_cliques(&sphere, None)
        .iter()
        .map(|(k, c)| (c.iter().fold(0u32, |m, &v| m | 1 << v), if k % 2 == 0 { 1 } else { -1 }))
        .collect();
    let binom: Vec<BigInt> = (0..=d)
        .scan(BigInt::from(1), |acc, k| {
            let cur = acc.clone();
            *acc = &*acc * BigInt::from(d - k) / BigInt::from(k + 1);
            Some(cur)
        })
        .collect();
    let mut by_size = vec![0i64; d + 1];
    for w in 0u32..(1u32 << d) {
        let chi: i64 = cliques.iter().filter(|(c, _)| c & w == *c).map(|(_, s)| s).sum();
        by_size[w.count_ones() as usize] += 1 - chi;
    }
    let mut e = Rational::zero();
    for (s, &total) in by_size.iter().enumerate() {
        let denom = BigInt::from(d + 1) * &binom[s];
        e += Rational::from_big(num_rational::BigRational::new(BigInt::from(total), denom));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin;
    use crate::random::{random_graph, random_injective, random_relabeling};

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn complete_graphs_have_dimension_n_minus_one() {
        for n in 1..7 {
            assert_eq!(dimension(&builtin("complete", &[n]).unwrap()), Rational::from_int(n - 1));
        }
        assert_eq!(dimension(&Graph::empty()), Rational::from_int(-1));
    }

    #[test]
    fn reference_dimensions() {
        assert_eq!(dimension(&builtin("bull", &[]).unwrap()), r("22/15"));
        assert_eq!(dimension(&builtin("dumbbell", &[3, 4, 3]).unwrap()), r("319/100"));
        assert_eq!(dimension(&builtin("dumbbell", &[3, 7, 15]).unwrap()), r("319/100"));
        assert_eq!(dimension(&builtin("octahedron", &[]).unwrap()), r("2"));
        assert_eq!(dimension(&builtin("cycle", &[7]).unwrap()), r("1"));
    }

    #[test]
    fn relative_dimension_of_all_vertices_is_dimension_minus_one() {
        for seed in 0..30 {
            let g = random_graph(1 + seed as usize % 9, 0.5, seed);
            let all = g.vertex_set();
            assert_eq!(relative_dimension(&g, &all).unwrap(), dimension(&g) - Rational::one());
        }
        let oct = builtin("octahedron", &[]).unwrap();
        assert_eq!(relative_dimension(&oct, &VertexSet::new([1, 2, 3])).unwrap(), r("1"));
        let k3 = builtin("complete", &[3]).unwrap();
        assert_eq!(relative_dimension(&k3, &VertexSet::new([1])).unwrap(), r("1"));
        assert_eq!(relative_dimension(&k3, &VertexSet::empty()), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn euler_characteristics() {
        let chi = |n: &str| euler_characteristic(&builtin(n, &[]).unwrap());
        assert_eq!(chi("petersen"), -5);
        assert_eq!(chi("utility"), -3);
        assert_eq!(chi("octahedron-antipodal"), 1);
        assert_eq!(chi("cube"), -4);
    }

    #[test]
    fn curvature_values() {
        let ico = builtin("icosahedron", &[]).unwrap();
        assert_eq!(curvature(&ico, 1).unwrap(), r("1/6"));
        assert_eq!(index_expectation(&ico, 1).unwrap(), r("1/6"));
        let c5 = builtin("cycle", &[5]).unwrap();
        assert_eq!(curvature(&c5, 3).unwrap(), Rational::zero());
        let k1 = builtin("complete", &[1]).unwrap();
        assert_eq!(curvature(&k1, 1).unwrap(), Rational::one());
        assert_eq!(index_expectation(&k1, 1).unwrap(), Rational::one());
        let c4 = builtin("cycle", &[4]).unwrap();
        assert_eq!(index_expectation(&c4, 2).unwrap(), Rational::zero());
    }

    #[test]
    fn gauss_bonnet_and_expectation_on_random_graphs() {
        for seed in 0..60 {
            let g = random_graph(1 + seed as usize % 10, [0.3, 0.5, 0.7][seed as usize % 3], seed);
            let mut total = Rational::zero();
            for &x in g.labels() {
                let k = curvature(&g, x).unwrap();
                assert_eq!(index_expectation(&g, x).unwrap(), k);
                total += k;
            }
            assert_eq!(total, Rational::from_int(euler_characteristic(&g)));
        }
    }

    #[test]
    fn poincare_hopf_indices() {
        let c6 = builtin("cycle", &[6]).unwrap();
        let f: Vec<Rational> = (0..6).map(Rational::from_int).collect();
        assert_eq!(poincare_hopf_index(&c6, &f, 1).unwrap(), 1);
        assert_eq!(poincare_hopf_index(&c6, &f, 6).unwrap(), -1);
        // vertex 4 is a local maximum
        let g: Vec<Rational> = [0, 1, 2, 5, 3, 4].into_iter().map(Rational::from_int).collect();
        assert_eq!(poincare_hopf_index(&c6, &g, 4).unwrap(), -1);
        let report = poincare_hopf_check(&builtin("octahedron", &[]).unwrap(), &f).unwrap();
        assert_eq!(report, PoincareHopfReport { sum: 2, chi: 2, equal: true });
        let k5 = builtin("complete", &[5]).unwrap();
        let f5: Vec<Rational> = (0..5).map(Rational::from_int).collect();
        assert_eq!(poincare_hopf_check(&k5, &f5).unwrap().sum, 1);
    }

    #[test]
    fn non_injective_functions_are_rejected() {
        let c4 = builtin("cycle", &[4]).unwrap();
        let f: Vec<Rational> = [1, 2, 2, 3].into_iter().map(Rational::from_int).collect();
        assert_eq!(poincare_hopf_check(&c4, &f).unwrap_err(), Error::NotInjective(2, 3));
        assert!(matches!(poincare_hopf_check(&c4, &f[..3]), Err(Error::FunctionArity { .. })));
    }

    #[test]
    fn poincare_hopf_on_random_orders() {
        for seed in 0..40 {
            let g = random_graph(2 + seed as usize % 9, 0.5, seed);
            let f: Vec<Rational> =
                random_injective(g.order(), seed * 31).into_iter().map(Rational::from_int).collect();
            assert!(poincare_hopf_check(&g, &f).unwrap().equal);
        }
    }

    #[test]
    fn dimension_is_a_graph_invariant() {
        for seed in 0..30 {
            let g = random_graph(2 + seed as usize % 9, 0.45, seed);
            assert_eq!(dimension(&g), dimension(&random_relabeling(&g, seed + 100)));
        }
    }
}
