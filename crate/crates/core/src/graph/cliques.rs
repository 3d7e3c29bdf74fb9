use serde::Serialize;

use super::Graph;

/// All complete subgraphs of a graph, graded by order: grade `k` holds the
/// `K_{k+1}` subgraphs as ascending index tuples in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueSet {
    grades: Vec<Vec<Vec<usize>>>,
}

impl CliqueSet {
    pub fn grade(&self, k: usize) -> &[Vec<usize>] {
        self.grades.get(k).map_or(&[], |g| g.as_slice())
    }

    /// Highest nonempty grade plus one.
    pub fn num_grades(&self) -> usize {
        self.grades.len()
    }

    /// Clique counts `v_0, v_1, ...` up to the highest nonempty grade.
    pub fn counts(&self) -> Vec<usize> {
        self.grades.iter().map(Vec::len).collect()
    }

    /// Alternating sum of clique counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.grades
            .iter()
            .enumerate()
            .map(|(k, g)| if k % 2 == 0 { g.len() as i64 } else { -(g.len() as i64) })
            .sum()
    }

    /// Position of an ascending tuple inside its grade.
    pub fn position(&self, clique: &[usize]) -> Option<usize> {
        let k = clique.len().checked_sub(1)?;
        self.grade(k).binary_search_by(|c| c.as_slice().cmp(clique)).ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.grades.iter().enumerate().flat_map(|(k, g)| g.iter().map(move |c| (k, c.as_slice())))
    }
}

/// Enumerates every clique up to grade `k_max` (all grades when `None`).
///
/// Depth-first extension by higher-indexed common neighbors; visiting
/// vertices in ascending order yields each grade in lexicographic order.
pub fn enumerate_cliques(g: &Graph, k_max: Option<usize>) -> CliqueSet {
    let mut grades: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut current = Vec::new();
    for v in 0..g.order() {
        let cand: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        current.push(v);
        extend(g, &mut current, &cand, k_max, &mut grades);
        current.pop();
    }
    CliqueSet { grades }
}

fn extend(
    g: &Graph,
    current: &mut Vec<usize>,
    cand: &[usize],
    k_max: Option<usize>,
    grades: &mut Vec<Vec<Vec<usize>>>,
) {
    let k = current.len() - 1;
    if grades.len() <= k {
        grades.push(Vec::new());
    }
    grades[k].push(current.clone());
    if k_max.is_some_and(|m| k >= m) {
        return;
    }
    for (pos, &w) in cand.iter().enumerate() {
        let next: Vec<usize> = cand[pos + 1..].iter().copied().filter(|&u| g.has_edge(w, u)).collect();
        current.push(w);
        extend(g, current, &next, k_max, grades);
        current.pop();
    }
}
