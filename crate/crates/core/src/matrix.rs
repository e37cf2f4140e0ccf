//! Dense square matrices over exact scalars, with Kronecker products and sums.
//!
//! Kronecker convention: the left factor indexes blocks, so `A ⊗ B` has
//! `(p, q)` block equal to `A[p][q]·B`.

use std::fmt;

use num_traits::{One, Zero};

use crate::digits::Base;
use crate::error::{Error, Result};
use crate::exactpoly::{Polynomial, Rational};

/// Default limit on `b^N`.
pub const DEFAULT_DIMENSION_CAP: usize = 4096;

/// Exact commutative ring element usable as a matrix entry.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;

    fn add_assign(&mut self, other: &Self) {
        *self = Scalar::add(self, other);
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
}

impl Scalar for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        Polynomial::scale(self, c)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
}

/// Validated `(b, N)` pair with `b^N` under a dimension cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dims {
    base: Base,
    depth: u32,
    dim: usize,
}

impl Dims {
    pub fn new(base: u32, depth: u32) -> Result<Self> {
        Dims::with_cap(base, depth, DEFAULT_DIMENSION_CAP)
    }

    pub fn with_cap(base: u32, depth: u32, cap: usize) -> Result<Self> {
        let b = Base::new(base)?;
        if depth == 0 {
            return Err(Error::InvalidDepth(depth));
        }
        let too_big = Error::DimensionCap { base, depth, cap };
        let dim = b.checked_pow(depth).ok_or_else(|| too_big.clone())?;
        let dim = usize::try_from(dim).map_err(|_| too_big.clone())?;
        if dim > cap {
            return Err(too_big);
        }
        Ok(Dims {
            base: b,
            depth,
            dim,
        })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn b(&self) -> u32 {
        self.base.get()
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// `b^N`.
    pub fn dim(&self) -> usize {
        self.dim
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

pub type PolyMatrix = Matrix<Polynomial>;
pub type RationalMatrix = Matrix<Rational>;

/// A differing entry between two matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch<T> {
    pub row: usize,
    pub col: usize,
    pub lhs: T,
    pub rhs: T,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![T::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Matrix::from_fn(dim, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Matrix { dim, data }
    }

    /// Builds from rows; all rows must have length equal to the row count.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.data[row * self.dim + col] = value;
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.data[row * self.dim..(row + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    /// Reflection across the anti-diagonal: `out[i][j] = self[n−1−j][n−1−i]`.
    pub fn skew_transpose(&self) -> Self {
        let n = self.dim;
        Matrix::from_fn(n, |i, j| self.get(n - 1 - j, n - 1 - i).clone())
    }

    pub fn neg(&self) -> Self {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| Scalar::add(a, b))
                .collect(),
        }
    }

    /// Matrix product. Zero entries of `self` are skipped.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        let n = self.dim;
        let mut out: Matrix<T> = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b);
                    Scalar::add_assign(&mut out.data[i * n + j], &prod);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: v.len(),
            });
        }
        Ok(self
            .rows()
            .map(|row| {
                let mut acc = T::zero();
                for (a, x) in row.iter().zip(v) {
                    if !a.is_zero() {
                        acc.add_assign(&a.mul(x));
                    }
                }
                acc
            })
            .collect())
    }

    /// `self^exp` by repeated multiplication.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Matrix::identity(self.dim);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn kronecker(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let mut out = Matrix::zeros(n * m);
        for p in 0..n {
            for q in 0..n {
                let a = self.get(p, q);
                if a.is_zero() {
                    continue;
                }
                for r in 0..m {
                    for s in 0..m {
                        let b = other.get(r, s);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(p * m + r, q * m + s, a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Kronecker sum `A ⊕ B = A ⊗ I + I ⊗ B`.
    pub fn kronecker_sum(&self, other: &Self) -> Self {
        let left = self.kronecker(&Matrix::identity(other.dim));
        let right = Matrix::identity(self.dim).kronecker(other);
        left.add(&right)
    }

    /// `depth`-fold Kronecker power, built as `A ⊗ (A ⊗ (…))`.
    pub fn kronecker_power(&self, depth: u32) -> Self {
        assert!(depth >= 1, "Kronecker power needs depth >= 1");
        let mut acc = self.clone();
        for _ in 1..depth {
            acc = self.kronecker(&acc);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.dim)
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.first_nonzero_from_diagonal(1).is_none()
    }

    /// First nonzero entry on or above the diagonal, in row-major order.
    /// `None` means the matrix is strictly lower-triangular.
    pub fn first_nonzero_on_or_above_diagonal(&self) -> Option<(usize, usize)> {
        self.first_nonzero_from_diagonal(0)
    }

    fn first_nonzero_from_diagonal(&self, offset: usize) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (i + offset..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| !self.get(i, j).is_zero())
    }

    /// First differing entry in row-major order.
    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch<T>> {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|idx| Mismatch {
                row: idx / self.dim,
                col: idx % self.dim,
                lhs: self.data[idx].clone(),
                rhs: other.data[idx].clone(),
            })
    }
}

impl<T: Scalar> Matrix<T> {
    /// Entrywise comparison reporting the first difference.
    pub fn compare(&self, other: &Self) -> Comparison<T> {
        Comparison {
            witness: self.first_mismatch(other),
        }
    }
}

/// Outcome of comparing two matrices entrywise.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison<T> {
    pub witness: Option<Mismatch<T>>,
}

impl<T> Comparison<T> {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

impl PolyMatrix {
    /// Evaluates every entry at `x = x0, y = y0`.
    pub fn eval(&self, x0: &Rational, y0: &Rational) -> RationalMatrix {
        self.map(|p| p.eval(x0, y0))
    }
}

impl RationalMatrix {
    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::exactpoly::int(v)).collect())
                .collect(),
        )
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for row in cells.chunks(self.dim.max(1)) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join("  "))?;
        }
        Ok(())
    }
}

impl<T: Scalar + fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix({}x{})", self.dim, self.dim)?;
        fmt::Display::fmt(self, f)
    }
}
