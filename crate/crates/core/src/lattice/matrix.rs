use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::Scalar;

/// Dense row-major matrix over an exact integer scalar.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds from row vectors.
    ///
    /// # Panics
    /// If the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged rows in matrix literal"
        );
        let n_rows = rows.len();
        Self {
            rows: n_rows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<Vec<T>>) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has the wrong length");
            for (i, x) in col.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Convenience for literals in tests and fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| T::from_i64(x).expect("fits")).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += factor · row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = factor.clone() * self[(src, j)].clone();
            self[(dst, j)] = self[(dst, j)].clone() + delta;
        }
    }

    /// `col[dst] += factor · col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = factor.clone() * self[(i, src)].clone();
            self[(i, dst)] = self[(i, dst)].clone() + delta;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)].clone();
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            self[(i, j)] = -self[(i, j)].clone();
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// # Panics
    /// If the matrix is not square.
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num / prev.clone();
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Matrix::<T>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let delta = a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + delta;
                }
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
