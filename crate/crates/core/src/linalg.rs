//! Dense exact linear algebra: integer matrices with fraction-free rank and
//! rational row reduction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        IntMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Rank over the rationals by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<i128>> =
            (0..self.rows).map(|r| self.row(r).iter().map(|&v| v as i128).collect()).collect();
        bareiss_i128(rows.clone()).unwrap_or_else(|| {
            let big = rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
            bareiss_big(big)
        })
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub(crate) fn to_rational(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect()
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries((0..self.rows).map(|r| self.row(r))).finish()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

/// Bareiss elimination with overflow detection; `None` on overflow.
fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = m[rank][c].checked_mul(m[r][k])?.checked_sub(m[r][c].checked_mul(m[rank][k])?)?;
                m[r][k] = v / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k];
                m[r][k] = v / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub(crate) type QMatrix = Vec<Vec<BigRational>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(m: &mut QMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let (src, dst) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src) {
                    if !s.is_zero() {
                        *d = &*d - &factor * s;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the null space `{x : m x = 0}`; `cols` is needed when `m` has no rows.
pub(crate) fn nullspace(m: &QMatrix, cols: usize) -> Vec<Vec<BigRational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); cols];
            x[f] = BigRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -a[row][f].clone();
            }
            x
        })
        .collect()
}

/// Linearly independent subset of the columns of `m` spanning its column space.
pub(crate) fn column_basis(m: &QMatrix) -> Vec<Vec<BigRational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    pivots.iter().map(|&c| m.iter().map(|row| row[c].clone()).collect()).collect()
}

/// Solves `basis · coeffs = targets[j]` for each target, with the basis given
/// as independent column vectors. Returns `None` if some target is outside
/// the span.
pub(crate) fn coordinates(basis: &[Vec<BigRational>], targets: &[Vec<BigRational>]) -> Option<QMatrix> {
    let n = basis.first().or(targets.first()).map_or(0, Vec::len);
    let b = basis.len();
    let mut aug: QMatrix = (0..n)
        .map(|i| basis.iter().map(|v| v[i].clone()).chain(targets.iter().map(|t| t[i].clone())).collect())
        .collect();
    let pivots = rref(&mut aug);
    if pivots.iter().any(|&p| p >= b) {
        return None;
    }
    debug_assert_eq!(pivots.len(), b, "basis vectors must be independent");
    Some(
        (0..targets.len())
            .map(|j| (0..b).map(|row| aug[row][b + j].clone()).collect())
            .collect(),
    )
}
