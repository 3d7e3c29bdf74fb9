//! Clique-complex cohomology over the rationals.
//!
//! Each clique is oriented by its ascending vertex tuple. Cochains of grade
//! `k` are functions on the `k`-cliques, and `d_k` maps grade `k` to grade
//! `k+1`.

use serde::Serialize;

use crate::graph::{enumerate_cliques, CliqueSet, Graph};
pub use crate::linalg::IntMatrix;
use crate::{Error, Result};

/// A clique complex with the ascending orientation on every clique.
#[derive(Debug, Clone)]
pub struct OrientedComplex {
    cliques: CliqueSet,
}

impl OrientedComplex {
    pub fn new(g: &Graph) -> Self {
        OrientedComplex { cliques: enumerate_cliques(g, None) }
    }

    pub fn cliques(&self) -> &CliqueSet {
        &self.cliques
    }

    /// Number of nonempty grades.
    pub fn grades(&self) -> usize {
        self.cliques.num_grades()
    }

    pub fn count(&self, k: usize) -> usize {
        self.cliques.grade(k).len()
    }

    /// `d_k`: rows are `(k+1)`-cliques, columns are `k`-cliques, and the face
    /// omitting the `j`-th vertex enters with sign `(-1)^j`.
    pub fn derivative(&self, k: usize) -> IntMatrix {
        let rows = self.cliques.grade(k + 1);
        let mut d = IntMatrix::zeros(rows.len(), self.count(k));
        let mut face = Vec::with_capacity(k + 1);
        for (r, tau) in rows.iter().enumerate() {
            for j in 0..tau.len() {
                face.clear();
                face.extend(tau.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &v)| v));
                let c = self.cliques.position(&face).expect("faces of cliques are cliques");
                d.set(r, c, if j % 2 == 0 { 1 } else { -1 });
            }
        }
        d
    }

    /// `L_k = d_k^T d_k + d_{k-1} d_{k-1}^T`.
    pub fn laplacian(&self, k: usize) -> IntMatrix {
        let dk = self.derivative(k);
        let mut l = dk.transpose().mul(&dk);
        if k > 0 {
            let dp = self.derivative(k - 1);
            l = l.add(&dp.mul(&dp.transpose()));
        }
        l
    }

    /// Betti numbers `b_k = v_k - rank d_k - rank d_{k-1}`.
    pub fn betti(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..self.grades()).map(|k| self.derivative(k).rank()).collect();
        (0..self.grades())
            .map(|k| self.count(k) - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 })
            .collect()
    }

    /// Offsets of each grade inside the full cochain space.
    fn offsets(&self) -> Vec<usize> {
        let mut off = vec![0];
        for k in 0..self.grades() {
            off.push(off[k] + self.count(k));
        }
        off
    }

    /// `D = d + d^*` on the direct sum of all cochain spaces.
    pub fn dirac(&self) -> IntMatrix {
        let off = self.offsets();
        let n = *off.last().unwrap();
        let mut dm = IntMatrix::zeros(n, n);
        for k in 0..self.grades().saturating_sub(1) {
            let d = self.derivative(k);
            for r in 0..d.rows() {
                for c in 0..d.cols() {
                    let v = d.get(r, c);
                    if v != 0 {
                        dm.set(off[k + 1] + r, off[k] + c, v);
                        dm.set(off[k] + c, off[k + 1] + r, v);
                    }
                }
            }
        }
        dm
    }
}

/// Betti numbers, clique counts and both sides of the Euler–Poincaré formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyProfile {
    pub betti: Vec<usize>,
    pub counts: Vec<usize>,
    pub chi_combinatorial: i64,
    pub chi_cohomological: i64,
}

fn alternating(v: &[usize]) -> i64 {
    v.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) }).sum()
}

pub fn exterior_derivative(g: &Graph, k: usize) -> IntMatrix {
    OrientedComplex::new(g).derivative(k)
}

pub fn betti_numbers(g: &Graph) -> Result<CohomologyProfile> {
    let cx = OrientedComplex::new(g);
    let betti = cx.betti();
    let counts = cx.cliques().counts();
    let profile = CohomologyProfile {
        chi_combinatorial: alternating(&counts),
        chi_cohomological: alternating(&betti),
        betti,
        counts,
    };
    if profile.chi_combinatorial != profile.chi_cohomological {
        return Err(Error::Internal(format!("Euler–Poincaré fails: {profile:?}")));
    }
    Ok(profile)
}

/// Betti vector with trailing zeros removed; empty for the empty graph.
pub fn betti_vector(g: &Graph) -> Vec<usize> {
    let mut b = OrientedComplex::new(g).betti();
    while b.last() == Some(&0) {
        b.pop();
    }
    b
}

pub fn hodge_laplacian(g: &Graph, k: usize) -> IntMatrix {
    OrientedComplex::new(g).laplacian(k)
}

pub fn dirac_operator(g: &Graph) -> IntMatrix {
    OrientedComplex::new(g).dirac()
}

/// True when `D^2` is block diagonal with the Hodge Laplacians as blocks.
pub fn dirac_square_is_laplacian(g: &Graph) -> bool {
    let cx = OrientedComplex::new(g);
    let d = cx.dirac();
    let sq = d.mul(&d);
    let off = cx.offsets();
    let mut expected = IntMatrix::zeros(sq.rows(), sq.cols());
    for k in 0..cx.grades() {
        let l = cx.laplacian(k);
        for r in 0..l.rows() {
            for c in 0..l.cols() {
                expected.set(off[k] + r, off[k] + c, l.get(r, c));
            }
        }
    }
    sq == expected
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerPoincareReport {
    pub combinatorial: i64,
    pub cohomological: i64,
    pub equal: bool,
}

/// Computes `Σ (-1)^k v_k` and `Σ (-1)^k b_k` independently.
pub fn euler_poincare_check(g: &Graph) -> EulerPoincareReport {
    let cx = OrientedComplex::new(g);
    let combinatorial = cx.cliques().euler_characteristic();
    let cohomological = alternating(&cx.betti());
    EulerPoincareReport { combinatorial, cohomological, equal: combinatorial == cohomological }
}

/// Checks `d_{k+1} d_k = 0` for every grade.
pub fn d_squared_vanishes(g: &Graph) -> bool {
    let cx = OrientedComplex::new(g);
    (0..cx.grades()).all(|k| cx.derivative(k + 1).mul(&cx.derivative(k)).is_zero())
}
