//! Seeded random graphs and maps for property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph G(n, p) on labels `0..n`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if r.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// The same graph with its labels shuffled.
pub fn random_relabeling(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<i64> = g.labels().to_vec();
    perm.shuffle(&mut rng(seed));
    let map: std::collections::HashMap<i64, i64> = g.labels().iter().copied().zip(perm).collect();
    g.relabel(|l| map[&l]).expect("a permutation of labels is injective")
}

/// A uniformly random total order on the vertices, given as distinct values
/// `0..n` indexed by vertex position.
pub fn random_injective(n: usize, seed: u64) -> Vec<i64> {
    let mut v: Vec<i64> = (0..n as i64).collect();
    v.shuffle(&mut rng(seed));
    v
}
