//! Exact rank and nullspace over ℚ via fraction-free elimination.
//!
//! Each row is first cleared of denominators (row scaling does not change
//! the row space), then reduced with Bareiss' one-step fraction-free scheme
//! over the integers. Every division in the scheme is exact; this is
//! asserted.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::{Exponents, Poly};
use crate::Rational;

/// A homogeneous linear system `M c = 0` with `columns` unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProblem {
    columns: usize,
    rows: Vec<Vec<Rational>>,
}

/// Row-echelon form produced by [`LinearProblem::solve`].
#[derive(Debug, Clone)]
pub struct Solution {
    columns: usize,
    echelon: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl LinearProblem {
    pub fn new(columns: usize) -> Self {
        LinearProblem {
            columns,
            rows: Vec::new(),
        }
    }

    /// Builds the system from dense rows.
    ///
    /// Panics if a row has the wrong length.
    pub fn from_rows(columns: usize, rows: Vec<Vec<Rational>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), columns, "row length must equal the column count");
        }
        LinearProblem { columns, rows }
    }

    /// One unknown per column; column `c` contributes the polynomial vector
    /// `images[c]` (one polynomial per condition slot). The conditions are
    /// the vanishing of every coefficient of every slot in `Σ c_col images`.
    pub fn from_images(images: &[Vec<Poly>]) -> Self {
        let mut index: BTreeMap<(usize, Exponents), usize> = BTreeMap::new();
        let mut sparse: Vec<Vec<(usize, Rational)>> = Vec::new();
        for (col, slots) in images.iter().enumerate() {
            for (slot, p) in slots.iter().enumerate() {
                for (e, c) in p.terms() {
                    let next = index.len();
                    let row = *index.entry((slot, e.clone())).or_insert(next);
                    if row == sparse.len() {
                        sparse.push(Vec::new());
                    }
                    sparse[row].push((col, c.clone()));
                }
            }
        }
        // Row order follows (slot, exponent) so the matrix is deterministic.
        let columns = images.len();
        let rows = index
            .into_values()
            .map(|r| {
                let mut row = vec![Rational::zero(); columns];
                for (c, v) in std::mem::take(&mut sparse[r]) {
                    row[c] += v;
                }
                row
            })
            .collect();
        LinearProblem { columns, rows }
    }

    pub fn push_row(&mut self, row: Vec<Rational>) {
        assert_eq!(
            row.len(),
            self.columns,
            "row length must equal the column count"
        );
        self.rows.push(row);
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn solve(&self) -> Solution {
        let integer_rows: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .filter(|r| r.iter().any(|v| !v.is_zero()))
            .map(|r| clear_denominators(r))
            .collect();
        let (echelon, pivots) = bareiss(integer_rows, self.columns);
        let s = Solution {
            columns: self.columns,
            echelon,
            pivots,
        };
        assert_eq!(
            s.rank() + s.nullity(),
            self.columns,
            "rank-nullity violated"
        );
        s
    }

    pub fn rank(&self) -> usize {
        self.solve().rank()
    }

    pub fn nullity(&self) -> usize {
        self.solve().nullity()
    }
}

impl Solution {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.columns - self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// A basis of the kernel, one vector per free column, with that free
    /// column set to 1 and the other free columns to 0.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.columns];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.columns).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.columns];
            v[free] = Rational::one();
            for (r, &p) in self.pivots.iter().enumerate().rev() {
                let row = &self.echelon[r];
                let mut acc = Rational::zero();
                for c in p + 1..self.columns {
                    if !row[c].is_zero() && !v[c].is_zero() {
                        acc += Rational::from_integer(row[c].clone()) * &v[c];
                    }
                }
                v[p] = -acc / Rational::from_integer(row[p].clone());
            }
            basis.push(v);
        }
        basis
    }
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
}

/// Fraction-free Gaussian elimination. Returns the echelon rows (only the
/// pivot rows) and the pivot columns.
fn bareiss(mut a: Vec<Vec<BigInt>>, columns: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let m = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..columns {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pv = &pivot_row[c];
        for row in tail.iter_mut() {
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..columns {
                let t = pv * &row[j] - &f * &pivot_row[j];
                if t.is_zero() {
                    row[j] = t;
                } else {
                    let (q, rem) = t.div_rem(&prev);
                    assert!(rem.is_zero(), "inexact fraction-free division");
                    row[j] = q;
                }
            }
        }
        prev = pv.clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}
