//! Exact dense matrices over big integers and rationals.
//!
//! Integer elimination is fraction-free (Bareiss), so determinants and
//! ranks of integer matrices never leave the integers. Rational
//! elimination is plain Gaussian and serves as the independent route for
//! cross-checking the integer path.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::input("matrix rows have unequal lengths"));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| Int::from(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Int) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column_submatrix(&self, cols: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn row_submatrix(&self, rows: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(rows.len(), self.cols);
        for (ii, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                out.set(ii, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn max_abs_entry(&self) -> Int {
        self.data
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Int::zero)
    }

    /// Indices of a lexicographically-first maximal independent column
    /// set, found by fraction-free elimination.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut w = self.data.clone();
        let rows = self.rows;
        let cols = self.cols;
        let at = |w: &Vec<Int>, i: usize, j: usize| w[i * cols + j].clone();
        let mut pivots = Vec::new();
        let mut prev = Int::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !w[i * cols + c].is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    w.swap(pr * cols + j, r * cols + j);
                }
            }
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let num = at(&w, r, c) * at(&w, i, j) - at(&w, i, c) * at(&w, r, j);
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                    w[i * cols + j] = num / &prev;
                }
                w[i * cols + c] = Int::zero();
            }
            prev = at(&w, r, c);
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.pivot_columns().len()
    }

    /// Indices of a maximal linearly independent set of rows.
    pub fn row_basis(&self) -> Vec<usize> {
        self.transpose().pivot_columns()
    }

    /// Exact determinant by fraction-free elimination. Matrix must be square.
    pub fn determinant(&self) -> Result<Int> {
        if self.rows != self.cols {
            return Err(Error::input(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Int::one());
        }
        let mut w = self.data.clone();
        let at = |w: &Vec<Int>, i: usize, j: usize| w[i * n + j].clone();
        let mut prev = Int::one();
        let mut negate = false;
        for k in 0..n {
            let Some(pr) = (k..n).find(|&i| !w[i * n + k].is_zero()) else {
                return Ok(Int::zero());
            };
            if pr != k {
                for j in 0..n {
                    w.swap(pr * n + j, k * n + j);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&w, k, k) * at(&w, i, j) - at(&w, i, k) * at(&w, k, j);
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                    w[i * n + j] = num / &prev;
                }
                w[i * n + k] = Int::zero();
            }
            prev = at(&w, k, k);
        }
        let det = at(&w, n - 1, n - 1);
        Ok(if negate { -det } else { det })
    }

    /// `A * diag(d) * A^T` for a diagonal given by `diag` (one entry per column).
    pub fn scaled_gram(&self, diag: &[Int]) -> Result<IntMatrix> {
        if diag.len() != self.cols {
            return Err(Error::input("diagonal length does not match column count"));
        }
        let m = self.rows;
        let mut out = IntMatrix::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let mut acc = Int::zero();
                for h in 0..self.cols {
                    if self.get(i, h).is_zero() || self.get(j, h).is_zero() {
                        continue;
                    }
                    acc += self.get(i, h) * &diag[h] * self.get(j, h);
                }
                out.set(i, j, acc.clone());
                if i != j {
                    out.set(j, i, acc);
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::input("matrix rows have unequal lengths"));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_matrix(m: &IntMatrix) -> Self {
        let mut out = RatMatrix::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, Rat::from_integer(m.get(i, j).clone()));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        self.data[i * self.cols + j] = value;
    }

    pub fn column_submatrix(&self, cols: &[usize]) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut w = self.data.clone();
        let rows = self.rows;
        let cols = self.cols;
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !w[i * cols + c].is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    w.swap(pr * cols + j, r * cols + j);
                }
            }
            let pivot = w[r * cols + c].clone();
            for i in r + 1..rows {
                let factor = &w[i * cols + c] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let delta = &factor * &w[r * cols + j];
                    let cur = &w[i * cols + j] - delta;
                    w[i * cols + j] = cur;
                }
            }
            r += 1;
        }
        r
    }

    pub fn determinant(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::input(format!(
                "determinant of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut w = self.data.clone();
        let mut det = Rat::one();
        for k in 0..n {
            let Some(pr) = (k..n).find(|&i| !w[i * n + k].is_zero()) else {
                return Ok(Rat::zero());
            };
            if pr != k {
                for j in 0..n {
                    w.swap(pr * n + j, k * n + j);
                }
                det = -det;
            }
            let pivot = w[k * n + k].clone();
            det *= &pivot;
            for i in k + 1..n {
                let factor = &w[i * n + k] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    let delta = &factor * &w[k * n + j];
                    let cur = &w[i * n + j] - delta;
                    w[i * n + j] = cur;
                }
            }
        }
        Ok(det)
    }

    /// Solves the square system `self * x = rhs` exactly; `None` when singular.
    pub fn solve(&self, rhs: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if self.rows != self.cols {
            return Err(Error::input("solve requires a square matrix"));
        }
        if rhs.len() != self.rows {
            return Err(Error::input("right-hand side length mismatch"));
        }
        let n = self.rows;
        let mut w = self.data.clone();
        let mut b = rhs.to_vec();
        for k in 0..n {
            let Some(pr) = (k..n).find(|&i| !w[i * n + k].is_zero()) else {
                return Ok(None);
            };
            if pr != k {
                for j in 0..n {
                    w.swap(pr * n + j, k * n + j);
                }
                b.swap(pr, k);
            }
            let pivot = w[k * n + k].clone();
            for i in k + 1..n {
                let factor = &w[i * n + k] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    let delta = &factor * &w[k * n + j];
                    let cur = &w[i * n + j] - delta;
                    w[i * n + j] = cur;
                }
                let delta = &factor * &b[k];
                let cur = &b[i] - delta;
                b[i] = cur;
            }
        }
        let mut x = vec![Rat::zero(); n];
        for k in (0..n).rev() {
            let mut acc = b[k].clone();
            for j in k + 1..n {
                let delta = &w[k * n + j] * &x[j];
                acc -= delta;
            }
            x[k] = acc / &w[k * n + k];
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(m(&[]).determinant().unwrap(), Int::one());
        assert_eq!(m(&[vec![5]]).determinant().unwrap(), Int::from(5));
        assert_eq!(
            m(&[vec![1, 2], vec![3, 4]]).determinant().unwrap(),
            Int::from(-2)
        );
        assert_eq!(
            m(&[vec![2, 0, 1], vec![1, 3, 2], vec![0, 1, 1]])
                .determinant()
                .unwrap(),
            Int::from(3)
        );
        assert_eq!(
            m(&[vec![1, 2], vec![2, 4]]).determinant().unwrap(),
            Int::zero()
        );
    }

    #[test]
    fn rank_and_pivots() {
        let a = m(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.pivot_columns(), vec![0, 1]);
        assert_eq!(a.row_basis(), vec![0, 2]);
        assert_eq!(m(&[vec![0, 0], vec![0, 0]]).rank(), 0);
    }

    #[test]
    fn integer_and_rational_ranks_agree() {
        let a = m(&[vec![2, -1, 3, 0], vec![4, -2, 6, 0], vec![1, 1, 1, 1]]);
        assert_eq!(a.rank(), RatMatrix::from_int_matrix(&a).rank());
    }

    #[test]
    fn scaled_gram_matches_direct_product() {
        let a = m(&[vec![1, 0, 1], vec![0, 1, 1]]);
        let diag = vec![Int::from(2), Int::from(2), Int::from(1)];
        let g = a.scaled_gram(&diag).unwrap();
        assert_eq!(g.get(0, 0), &Int::from(3));
        assert_eq!(g.get(0, 1), &Int::from(1));
        assert_eq!(g.get(1, 1), &Int::from(3));
        assert_eq!(g.determinant().unwrap(), Int::from(8));
    }

    #[test]
    fn rational_solve_round_trips() {
        let t = RatMatrix::from_int_matrix(&m(&[vec![1, 0], vec![1, 1]]));
        let rhs = vec![
            Rat::from_integer(Int::from(3)),
            Rat::from_integer(Int::from(5)),
        ];
        let x = t.solve(&rhs).unwrap().unwrap();
        assert_eq!(x[0], Rat::from_integer(Int::from(3)));
        assert_eq!(x[1], Rat::from_integer(Int::from(2)));
        let singular = RatMatrix::from_int_matrix(&m(&[vec![1, 1], vec![1, 1]]));
        assert!(singular.solve(&rhs).unwrap().is_none());
    }
}
