use std::fmt;

use crate::scalar::Scalar;

/// Dense matrix with exact entries, stored row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    /// Builds a matrix from row vectors; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&v| S::from_i64(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
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

    pub fn mul(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let v = out[(i, j)].clone() + a.clone() * b.clone();
                        out[(i, j)] = v;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Fraction-free forward elimination. Returns the pivot columns; the
    /// matrix is left in row echelon form with zero rows at the bottom.
    fn bareiss(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut prev = S::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let pivot = self[(r, c)].clone();
            for i in r + 1..self.rows {
                let lead = self[(i, c)].clone();
                for j in c + 1..self.cols {
                    let v = (pivot.clone() * self[(i, j)].clone() - lead.clone() * self[(r, j)].clone()) / prev.clone();
                    self[(i, j)] = v;
                }
                self[(i, c)] = S::zero();
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form (pivots normalized to one) and pivot columns.
    pub fn rref(&self) -> (Matrix<S>, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.bareiss();
        for (r, &c) in pivots.iter().enumerate().rev() {
            let inv = S::one() / m[(r, c)].clone();
            for j in c..m.cols {
                let v = m[(r, j)].clone() * inv.clone();
                m[(r, j)] = v;
            }
            for i in 0..r {
                let f = m[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    m[(i, j)] = v;
                }
            }
        }
        m.rows = pivots.len();
        m.data.truncate(m.rows * m.cols);
        (m, pivots)
    }
}

/// Exact rank.
pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    m.clone().bareiss().len()
}

/// Basis of the right null space `{v : m v = 0}`, returned in reduced
/// echelon form (leading entries one, leading positions increasing).
pub fn kernel_basis<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<S>> {
    let (r, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let raw: Vec<Vec<S>> = (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![S::zero(); m.cols];
            v[f] = S::one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -r[(row, f)].clone();
            }
            v
        })
        .collect();
    echelon_basis(m.cols, raw)
}

/// Reduced echelon basis of the span of `vectors` (each of length `dim`).
pub fn echelon_basis<S: Scalar>(dim: usize, vectors: Vec<Vec<S>>) -> Vec<Vec<S>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (r, _) = Matrix::from_rows(dim, vectors).rref();
    (0..r.rows()).map(|i| r.row(i).to_vec()).collect()
}

/// Dimension of the span of `vectors`.
pub fn span_rank<S: Scalar>(dim: usize, vectors: &[Vec<S>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&Matrix::from_rows(dim, vectors.to_vec()))
}

/// True when `v` lies in the span of `vectors`.
pub fn in_span<S: Scalar>(dim: usize, vectors: &[Vec<S>], v: &[S]) -> bool {
    let base = span_rank(dim, vectors);
    let mut all = vectors.to_vec();
    all.push(v.to_vec());
    span_rank(dim, &all) == base
}

/// True when the two families span the same subspace.
pub fn same_span<S: Scalar>(dim: usize, a: &[Vec<S>], b: &[Vec<S>]) -> bool {
    let ra = span_rank(dim, a);
    if ra != span_rank(dim, b) {
        return false;
    }
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    span_rank(dim, &all) == ra
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: fmt::Display> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                self.data[i * self.cols..(i + 1) * self.cols].iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
