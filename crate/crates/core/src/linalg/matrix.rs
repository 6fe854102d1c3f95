use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(QMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(QMatrix { rows: n, cols, data })
    }

    /// Integer-entry convenience constructor. Panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Rational::from(x)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::ONE;
        }
        m
    }

    /// The matrix unit `E_ij` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Rational::ONE;
        m
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Column vector from a coordinate slice.
    pub fn column_vector(v: &[Rational]) -> Self {
        QMatrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
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

    pub fn scale(&self, c: &Rational) -> Self {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    /// `trace(self * other)` without forming the product.
    pub fn trace_of_product(&self, other: &QMatrix) -> Rational {
        assert_eq!((self.cols, self.rows), (other.rows, other.cols));
        let mut acc = Rational::ZERO;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    acc += a * &other[(k, i)];
                }
            }
        }
        acc
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "matrix-vector size mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::ZERO;
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// `self^k` by repeated squaring. Panics if not square.
    pub fn pow(&self, mut k: u32) -> Self {
        let n = self.ensure_square().expect("power of non-square matrix");
        let mut result = Self::identity(n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &QMatrix) -> Self {
        &(self * other) - &(other * self)
    }

    /// Kronecker product.
    pub fn kron(&self, other: &QMatrix) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut m = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            m[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        m
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn direct_sum(&self, other: &QMatrix) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)].is_zero()))
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.ensure_square().ok()?;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let piv = a[(col, col)].recip();
            a.scale_row(col, &piv);
            inv.scale_row(col, &piv);
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    a.add_row_multiple(r, col, &-&f);
                    inv.add_row_multiple(r, col, &-&f);
                }
            }
        }
        Some(inv)
    }

    /// Exact determinant by fraction-tracking elimination.
    pub fn determinant(&self) -> Rational {
        let n = self.ensure_square().expect("determinant of non-square matrix");
        let mut a = self.clone();
        let mut det = Rational::ONE;
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Rational::ZERO;
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let piv = a[(col, col)].clone();
            det *= &piv;
            let inv = piv.recip();
            for r in col + 1..n {
                if !a[(r, col)].is_zero() {
                    let f = -(&a[(r, col)] * &inv);
                    a.add_row_multiple(r, col, &f);
                }
            }
        }
        det
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn scale_row(&mut self, r: usize, c: &Rational) {
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            if !x.is_zero() {
                *x *= c;
            }
        }
    }

    /// `row[target] += factor * row[source]`.
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[source * self.cols + j];
            if !s.is_zero() {
                let delta = s * factor;
                self.data[target * self.cols + j] += delta;
            }
        }
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Mul<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product size mismatch");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum size mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a QMatrix> for &'a QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix difference size mismatch"
        );
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(deserializer)?;
        QMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
