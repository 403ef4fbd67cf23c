//! Dense matrices and fraction-free rank.

use super::cyclo_number::CyclotomicNumber;
use super::{ExactDiv, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Precondition("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &T) {
        for j in 0..self.cols {
            let v = self.get(i, j).clone() * c.clone();
            self.set(i, j, v);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }
}

impl<T: ExactDiv> Matrix<T> {
    /// Rank by Bareiss fraction-free elimination.
    ///
    /// Pivot: the first column (left to right) with a nonzero entry among
    /// the unreduced rows, and in that column the topmost nonzero entry.
    /// Every update `(p·a_ij - a_ic·a_kj) / prev` is an exact division.
    pub fn bareiss_rank(&self) -> usize {
        let mut m = self.clone();
        let mut prev = T::one();
        let mut rank = 0;
        let mut col = 0;
        while rank < m.rows && col < m.cols {
            let Some(pivot_row) = (rank..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                col += 1;
                continue;
            };
            m.swap_rows(rank, pivot_row);
            let pivot = m.get(rank, col).clone();
            for i in rank + 1..m.rows {
                let lead = m.get(i, col).clone();
                for j in col + 1..m.cols {
                    let num = pivot.clone() * m.get(i, j).clone()
                        - lead.clone() * m.get(rank, j).clone();
                    let v = num
                        .exact_div(&prev)
                        .expect("Bareiss update divides exactly by the previous pivot");
                    m.set(i, j, v);
                }
                m.set(i, col, T::zero());
            }
            prev = pivot;
            rank += 1;
            col += 1;
        }
        rank
    }
}

impl Matrix<CyclotomicNumber> {
    /// The common conductor of all entries, or an error naming the first
    /// disagreeing entry. Empty matrices report conductor 1.
    pub fn conductor(&self) -> Result<u64> {
        let mut it = self.data.iter().enumerate();
        let Some((_, first)) = it.next() else {
            return Ok(1);
        };
        let n = first.conductor();
        for (idx, e) in it {
            if e.conductor() != n {
                return Err(Error::ConductorMismatch {
                    row: idx / self.cols,
                    col: idx % self.cols,
                    expected: n,
                    found: e.conductor(),
                });
            }
        }
        Ok(n)
    }

    /// Lifts every entry to conductor `m`.
    pub fn lift(&self, m: u64) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e.lift(m)).collect(),
        }
    }
}

/// Rank over `ℚ(ζ_n)`; all entries must carry the same conductor.
pub fn rank(m: &Matrix<CyclotomicNumber>) -> Result<usize> {
    m.conductor()?;
    Ok(m.bareiss_rank())
}
