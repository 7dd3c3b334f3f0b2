use std::ops::Index;

use nalgebra::DMatrix;

use super::{ExactError, ExactScalar, Exponent, QPoly, Ring};

/// Dense square matrix over a [`Ring`], stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<T>,
}

pub type ScalarMatrix = Matrix<ExactScalar>;
pub type QMatrix = Matrix<QPoly>;

impl<T: Ring> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ExactError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != dim {
                return Err(ExactError::NotSquare { row, len: r.len(), expected: dim });
            }
            entries.extend(r);
        }
        Ok(Matrix { dim, entries })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Matrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(diag: Vec<T>) -> Self {
        let dim = diag.len();
        let mut m = Self::from_fn(dim, |_, _| T::zero());
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = d;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.dim.max(1)).take(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.dim != other.dim {
            return Err(ExactError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(self.mul_unchecked(other))
    }

    /// Product; panics on a dimension mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("matrix dimension mismatch")
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = T::zero();
                for k in 0..n {
                    let a = &self.entries[i * n + k];
                    if a.is_zero() {
                        continue;
                    }
                    let b = &other.entries[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.plus(&a.times(b));
                }
                entries.push(acc);
            }
        }
        Matrix { dim: n, entries }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.dim != other.dim {
            return Err(ExactError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.plus(b)).collect();
        Ok(Matrix { dim: self.dim, entries })
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix { dim: self.dim, entries: self.entries.iter().map(|a| a.times(c)).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    /// Conjugate by the order-reversing permutation of the basis, so that
    /// entry `(i, j)` moves to `(d−1−i, d−1−j)`.
    pub fn reverse_basis(&self) -> Self {
        let n = self.dim;
        Self::from_fn(n, |i, j| self.get(n - 1 - i, n - 1 - j).clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn is_scalar_multiple_of_identity(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| if i == j { self.get(i, i) == self.get(0, 0) } else { self.get(i, j).is_zero() }))
    }

    /// Leibniz expansion; intended for the small dimensions used here.
    pub fn determinant(&self) -> T {
        fn rec<T: Ring>(m: &Matrix<T>, row: usize, used: &mut Vec<bool>, sign: bool) -> T {
            let n = m.dim;
            if row == n {
                return if sign { T::one().negated() } else { T::one() };
            }
            let mut acc = T::zero();
            let mut parity = false;
            for col in 0..n {
                if used[col] {
                    continue;
                }
                let e = m.get(row, col);
                if !e.is_zero() {
                    used[col] = true;
                    let sub = rec(m, row + 1, used, sign ^ parity);
                    used[col] = false;
                    acc = acc.plus(&e.times(&sub));
                }
                parity = !parity;
            }
            acc
        }
        rec(self, 0, &mut vec![false; self.dim], false)
    }

    /// Product of the matrix with itself `n` times, `n >= 0`.
    pub fn pow_nonneg(&self, n: u64) -> Self {
        let mut acc = Self::identity(self.dim);
        let mut sq = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            n >>= 1;
            if n > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        acc
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.dim + j]
    }
}

impl ScalarMatrix {
    pub fn from_integers(rows: &[&[i64]]) -> Result<Self, ExactError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| ExactScalar::from_integer(x)).collect()).collect())
    }

    /// Gauss–Jordan inverse over the exact field.
    pub fn try_inverse(&self) -> Result<Self, ExactError> {
        let n = self.dim;
        let mut a = self.rows();
        let mut inv = Self::identity(n).rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(ExactError::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].try_inverse()?;
            for j in 0..n {
                a[col][j] = a[col][j].try_mul(&p)?;
                inv[col][j] = inv[col][j].try_mul(&p)?;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let x = a[col][j].try_mul(&f)?;
                    a[r][j] = a[r][j].try_sub(&x)?;
                    let y = inv[col][j].try_mul(&f)?;
                    inv[r][j] = inv[r][j].try_sub(&y)?;
                }
            }
        }
        Self::from_rows(inv)
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        if e < 0 {
            Ok(self.try_inverse()?.pow_nonneg(e.unsigned_abs()))
        } else {
            Ok(self.pow_nonneg(e as u64))
        }
    }

    /// The common quadratic radicand of all entries, if any; errors when two
    /// entries live in different fields.
    pub fn radicand(&self) -> Result<Option<u64>, ExactError> {
        let mut m: Option<u64> = None;
        for e in &self.entries {
            match (m, e.radicand()) {
                (Some(x), Some(y)) if x != y => return Err(ExactError::IncompatibleRadicands { left: x, right: y }),
                (None, Some(y)) => m = Some(y),
                _ => {}
            }
        }
        Ok(m)
    }

    pub fn to_f64(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j).to_f64())
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        self.map(|c| QPoly::constant(c.clone()))
    }
}

impl QMatrix {
    /// `diag(q^{e₁}, …, q^{e_d})`.
    pub fn diag_q_powers(exponents: &[Exponent]) -> Self {
        Self::diagonal(exponents.iter().map(|&e| QPoly::q_pow(e)).collect())
    }

    /// Largest exponent over all entries.
    pub fn max_degree(&self) -> Option<Exponent> {
        self.entries.iter().filter_map(QPoly::degree).max()
    }
}
