//! Dense exact matrices, tensor products and permutation operators.
//!
//! Basis convention for `V ⊗ V` with `dim V = 2`: `e1⊗e1, e1⊗e2, e2⊗e1, e2⊗e2`,
//! i.e. the first tensor factor is the most significant index.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalars::{RatFunc, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

/// Matrix over the rational function field.
pub type ParamMatrix = Matrix<RatFunc>;

fn shape_err(expected: impl fmt::Display, found: impl fmt::Display) -> Error {
    Error::DimensionMismatch { expected: expected.to_string(), found: found.to_string() }
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(shape_err(rows * cols, entries.len()));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
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

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<U: Scalar>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(shape_err(
                format!("{} rows", self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                out.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, entries: out })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Kronecker product: `(a⊗b)[i·rb + k, j·cb + l] = a[i,j]·b[k,l]`.
    pub fn kron(&self, b: &Self) -> Self {
        let (rb, cb) = (b.rows, b.cols);
        Self::from_fn(self.rows * rb, self.cols * cb, |r, c| {
            let x = self.get(r / rb, c / cb);
            if x.is_zero() {
                T::zero()
            } else {
                x.mul(b.get(r % rb, c % cb))
            }
        })
    }

    /// Fraction-free (Bareiss) forward elimination in place. Pivots are the
    /// first nonzero entry at or below the current row, scanning columns left
    /// to right. Returns the pivot `(row, col)` positions.
    fn bareiss_echelon(&mut self) -> Result<Vec<(usize, usize)>> {
        let mut pivots = Vec::new();
        let mut prev = T::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.entries.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let pivot = self.get(r, c).clone();
            for i in r + 1..self.rows {
                let lead = self.get(i, c).clone();
                for j in c + 1..self.cols {
                    let a = pivot.mul(self.get(i, j));
                    let b = lead.mul(self.get(r, j));
                    let v = a.sub(&b).div(&prev)?;
                    self.set(i, j, v);
                }
                self.set(i, c, T::zero());
            }
            prev = pivot;
            pivots.push((r, c));
            r += 1;
        }
        Ok(pivots)
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.clone().bareiss_echelon()?.len())
    }

    /// Right nullspace basis; one vector per non-pivot column with that
    /// coordinate set to one.
    pub fn nullspace(&self) -> Result<Vec<Vec<T>>> {
        let mut m = self.clone();
        let pivots = m.bareiss_echelon()?;
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for &(r, c) in pivots.iter().rev() {
                let mut acc = T::zero();
                for j in c + 1..self.cols {
                    if !v[j].is_zero() && !m.get(r, j).is_zero() {
                        acc = acc.add(&m.get(r, j).mul(&v[j]));
                    }
                }
                v[c] = acc.neg().div(m.get(r, c))?;
            }
            basis.push(v);
        }
        Ok(basis)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(shape_err("square matrix", format!("{}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let pivots = aug.bareiss_echelon()?;
        if pivots.len() < n || pivots.iter().any(|&(r, c)| r != c) {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for col in 0..n {
            for i in (0..n).rev() {
                let mut acc = aug.get(i, n + col).clone();
                for j in i + 1..n {
                    if !aug.get(i, j).is_zero() {
                        acc = acc.sub(&aug.get(i, j).mul(inv.get(j, col)));
                    }
                }
                inv.set(i, col, acc.div(aug.get(i, i))?);
            }
        }
        Ok(inv)
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.zip_with(rhs, |a, b| a.add(b))
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.zip_with(rhs, |a, b| a.sub(b))
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| x.neg())
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    /// Panics on incompatible shapes; see [`Matrix::try_mul`].
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_mul(rhs).expect("incompatible matrix shapes")
    }
}

/// Kronecker product of two matrices.
pub fn kron<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    a.kron(b)
}

fn require_4x4<T: Scalar>(r: &Matrix<T>) -> Result<()> {
    if r.rows != 4 || r.cols != 4 {
        return Err(shape_err("4x4", format!("{}x{}", r.rows, r.cols)));
    }
    Ok(())
}

/// `P·r·P` with `P` swapping the tensor factors of `V ⊗ V`.
pub fn flip21<T: Scalar>(r: &Matrix<T>) -> Result<Matrix<T>> {
    require_4x4(r)?;
    let p = perm_operator(&PermOperator::transposition(2, 0, 1), 2);
    Ok(&(&p * r) * &p)
}

/// `r ⊗ I₂`.
pub fn embed12<T: Scalar>(r: &Matrix<T>) -> Result<Matrix<T>> {
    require_4x4(r)?;
    Ok(r.kron(&Matrix::identity(2)))
}

/// `I₂ ⊗ r`.
pub fn embed23<T: Scalar>(r: &Matrix<T>) -> Result<Matrix<T>> {
    require_4x4(r)?;
    Ok(Matrix::identity(2).kron(r))
}

/// Permutation of tensor factors. Factor `k` (0-based) of the input is moved
/// to position `sigma[k]` of the output, so `perm(σ)·perm(τ) = perm(σ∘τ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermOperator {
    sigma: Vec<usize>,
}

impl PermOperator {
    /// Panics unless `sigma` is a bijection of `0..sigma.len()`.
    pub fn new(sigma: Vec<usize>) -> Self {
        let mut seen = vec![false; sigma.len()];
        for &s in &sigma {
            assert!(s < sigma.len() && !seen[s], "not a permutation: {sigma:?}");
            seen[s] = true;
        }
        PermOperator { sigma }
    }

    pub fn identity(arity: usize) -> Self {
        PermOperator { sigma: (0..arity).collect() }
    }

    pub fn transposition(arity: usize, i: usize, j: usize) -> Self {
        let mut sigma: Vec<usize> = (0..arity).collect();
        sigma.swap(i, j);
        PermOperator { sigma }
    }

    /// Builds from 1-based cycle notation, e.g. `&[1, 2, 3]` for `1→2→3→1`.
    pub fn cycle(arity: usize, cycle: &[usize]) -> Self {
        let mut sigma: Vec<usize> = (0..arity).collect();
        for (k, &from) in cycle.iter().enumerate() {
            sigma[from - 1] = cycle[(k + 1) % cycle.len()] - 1;
        }
        Self::new(sigma)
    }

    pub fn arity(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PermOperator) -> PermOperator {
        assert_eq!(self.arity(), other.arity());
        PermOperator { sigma: other.sigma.iter().map(|&k| self.sigma[k]).collect() }
    }
}

/// Matrix of a factor permutation acting on the `arity`-fold tensor power of
/// a `dim`-dimensional space.
pub fn perm_operator<T: Scalar>(p: &PermOperator, dim: usize) -> Matrix<T> {
    let n = p.arity();
    let size = dim.pow(n as u32);
    let mut m = Matrix::zeros(size, size);
    let mut digits = vec![0usize; n];
    for col in 0..size {
        let mut rest = col;
        for k in (0..n).rev() {
            digits[k] = rest % dim;
            rest /= dim;
        }
        let mut out = vec![0usize; n];
        for k in 0..n {
            out[p.sigma[k]] = digits[k];
        }
        let row = out.iter().fold(0, |acc, &d| acc * dim + d);
        m.set(row, col, T::one());
    }
    m
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        let mut widths = vec![0; self.cols];
        for (k, s) in cells.iter().enumerate() {
            widths[k % self.cols] = widths[k % self.cols].max(s.chars().count());
        }
        for i in 0..self.rows {
            f.write_str("[ ")?;
            for j in 0..self.cols {
                let s = &cells[i * self.cols + j];
                if j + 1 < self.cols {
                    write!(f, "{s:<w$}  ", w = widths[j])?;
                } else {
                    write!(f, "{s:<w$}", w = widths[j])?;
                }
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}
