use std::fmt::{self, Display, Write as _};

use super::int::Int;
use super::ring::Ring;

/// Dense row-major matrix over a ring's element type. Zero-sized dimensions
/// are legal and describe zero maps to or from the trivial group.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

pub type IntMatrix = Matrix<Int>;

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Matrix<E> {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<E>>, cols: usize) -> Matrix<E> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(height: usize, cols: &[Vec<E>], zero: E) -> Matrix<E> {
        let mut m = Matrix::filled(height, cols.len(), zero);
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), height, "column of wrong height");
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix<E> {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.rows, other.rows, "hstack height mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Matrix {
            rows: self.rows,
            cols,
            data,
        }
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, other.cols, "vstack width mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_rows(&self, idx: impl IntoIterator<Item = usize>) -> Matrix<E> {
        let mut data = Vec::new();
        let mut n = 0;
        for i in idx {
            data.extend_from_slice(self.row(i));
            n += 1;
        }
        Matrix {
            rows: n,
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix<E> {
        let mut data = Vec::with_capacity(self.rows * idx.len());
        for i in 0..self.rows {
            for &j in idx {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.rows,
            cols: idx.len(),
            data,
        }
    }

    pub fn map<F, T: Clone>(&self, f: F) -> Matrix<T>
    where
        F: Fn(&E) -> T,
    {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<E> std::ops::Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<E> std::ops::IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Ring-aware operations on matrices.
pub trait MatrixOps<R: Ring> {
    fn zeros(ring: &R, rows: usize, cols: usize) -> Self;
    fn identity(ring: &R, n: usize) -> Self;
    fn mul(&self, ring: &R, rhs: &Self) -> Self;
    fn apply(&self, ring: &R, v: &[R::Elem]) -> Vec<R::Elem>;
    fn is_zero(&self, ring: &R) -> bool;
    fn scaled(&self, ring: &R, c: &R::Elem) -> Self;
    fn add(&self, ring: &R, rhs: &Self) -> Self;
}

impl<R: Ring> MatrixOps<R> for Matrix<R::Elem> {
    fn zeros(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, ring.zero())
    }

    fn identity(ring: &R, n: usize) -> Self {
        let mut m = Matrix::filled(n, n, ring.zero());
        for i in 0..n {
            m[(i, i)] = ring.one();
        }
        m
    }

    fn mul(&self, ring: &R, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::filled(self.rows, rhs.cols, ring.zero());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if ring.is_zero(b) {
                        continue;
                    }
                    let t = ring.mul(a, b);
                    out[(i, j)] = ring.add(&out[(i, j)], &t);
                }
            }
        }
        out
    }

    fn apply(&self, ring: &R, v: &[R::Elem]) -> Vec<R::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let mut out = vec![ring.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if ring.is_zero(x) {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self[(i, k)];
                if !ring.is_zero(a) {
                    *o = ring.add(o, &ring.mul(a, x));
                }
            }
        }
        out
    }

    fn is_zero(&self, ring: &R) -> bool {
        self.data.iter().all(|x| ring.is_zero(x))
    }

    fn scaled(&self, ring: &R, c: &R::Elem) -> Self {
        self.map(|x| ring.mul(x, c))
    }

    fn add(&self, ring: &R, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix sum shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| ring.add(a, b))
                .collect(),
        }
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> IntMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Int::from(v)).collect())
                .collect(),
            cols,
        )
    }

    /// Plain-text grid dump used when troubleshooting differentials.
    pub fn to_grid(&self) -> String {
        grid(self)
    }
}

pub fn grid<E: Display>(m: &Matrix<E>) -> String {
    let cells: Vec<String> = m.data.iter().map(|x| x.to_string()).collect();
    let width = cells.iter().map(|c| c.len()).max().unwrap_or(1);
    let mut out = String::new();
    let _ = writeln!(out, "# {}x{}", m.rows, m.cols);
    for i in 0..m.rows {
        let line: Vec<String> = (0..m.cols)
            .map(|j| format!("{:>width$}", cells[i * m.cols + j]))
            .collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

impl<E: Display> Display for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&grid(self))
    }
}
