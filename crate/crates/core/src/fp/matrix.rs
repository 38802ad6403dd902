use std::fmt;

use crate::error::{Error, Result};
use crate::fp::{FpScalar, PrimeModulus};

/// Column vector over F_p, entries stored as reduced `u32`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpVector {
    modulus: PrimeModulus,
    data: Vec<u32>,
}

impl FpVector {
    pub fn zeros(modulus: PrimeModulus, len: usize) -> Self {
        Self { modulus, data: vec![0; len] }
    }

    pub fn from_i64(modulus: PrimeModulus, values: &[i64]) -> Self {
        Self { modulus, data: values.iter().map(|&v| modulus.reduce(v)).collect() }
    }

    pub(crate) fn from_raw(modulus: PrimeModulus, data: Vec<u32>) -> Self {
        debug_assert!(data.iter().all(|&v| v < modulus.get()));
        Self { modulus, data }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> FpScalar {
        self.modulus.elem(self.data[i] as i64)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.modulus;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| m.add(a, b)).collect();
        Self { modulus: m, data }
    }

    pub fn scale(&self, k: u32) -> Self {
        let m = self.modulus;
        Self { modulus: m, data: self.data.iter().map(|&a| m.mul(a, k)).collect() }
    }

    pub fn dot(&self, other: &Self) -> FpScalar {
        let m = self.modulus;
        let s = self.data.iter().zip(&other.data).fold(0u32, |acc, (&a, &b)| m.add(acc, m.mul(a, b)));
        m.elem(s as i64)
    }
}

/// Dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    modulus: PrimeModulus,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`FpMatrix::reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub nullspace: Vec<FpVector>,
    /// Present only for square input.
    pub det: Option<FpScalar>,
}

impl FpMatrix {
    pub fn zeros(modulus: PrimeModulus, rows: usize, cols: usize) -> Self {
        Self { modulus, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(modulus: PrimeModulus, n: usize) -> Self {
        let mut m = Self::zeros(modulus, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % modulus.get();
        }
        m
    }

    pub fn from_rows(modulus: PrimeModulus, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| modulus.reduce(v)).collect();
        Ok(Self { modulus, rows: rows.len(), cols, data })
    }

    pub fn from_columns(modulus: PrimeModulus, columns: &[FpVector]) -> Result<Self> {
        let rows = columns.first().map_or(0, FpVector::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("columns differ in length".into()));
        }
        let mut m = Self::zeros(modulus, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for i in 0..rows {
                m.data[i * m.cols + j] = c.data[i];
            }
        }
        Ok(m)
    }

    pub fn from_row_vectors(modulus: PrimeModulus, cols: usize, vectors: &[FpVector]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != cols) {
            return Err(Error::DimensionMismatch("row vectors differ in length".into()));
        }
        let data = vectors.iter().flat_map(|v| v.data.iter().copied()).collect();
        Ok(Self { modulus, rows: vectors.len(), cols, data })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FpScalar {
        self.modulus.elem(self.data[i * self.cols + j] as i64)
    }

    #[inline]
    pub(crate) fn raw(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = self.modulus.reduce(v);
    }

    pub(crate) fn set_raw(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> FpVector {
        FpVector::from_raw(self.modulus, self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> FpVector {
        FpVector::from_raw(self.modulus, (0..self.rows).map(|i| self.raw(i, j)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Entries as centered-free `u32` rows, handy for assertions and serialization.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[u32]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.modulus, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.raw(i, j);
            }
        }
        t
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus.get(), right: other.modulus.get() });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.modulus.get() as u64;
        let mut out = Self::zeros(self.modulus, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.raw(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (slot, &b) in acc.iter_mut().zip(orow) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (j, &v) in acc.iter().enumerate() {
                out.data[i * other.cols + j] = v as u32;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &FpVector) -> Result<FpVector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!("{} columns vs vector of {}", self.cols, v.len())));
        }
        let m = self.modulus;
        let data = (0..self.rows)
            .map(|i| (0..self.cols).fold(0u32, |acc, j| m.add(acc, m.mul(self.raw(i, j), v.data[j]))))
            .collect();
        Ok(FpVector::from_raw(m, data))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Result<Self> {
        self.check_same(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("shape mismatch".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect();
        Ok(self.with_data(data))
    }

    fn with_data(&self, data: Vec<u32>) -> Self {
        Self { modulus: self.modulus, rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let m = self.modulus;
        self.zip_with(other, |a, b| m.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let m = self.modulus;
        self.zip_with(other, |a, b| m.sub(a, b))
    }

    pub fn scale(&self, k: i64) -> Self {
        let m = self.modulus;
        let k = m.reduce(k);
        self.with_data(self.data.iter().map(|&a| m.mul(a, k)).collect())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn pow(&self, mut exp: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of non-square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.modulus, self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Sub-block copy `[r0, r0+nr) x [c0, c0+nc)`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        let mut out = Self::zeros(self.modulus, nr, nc);
        for i in 0..nr {
            for j in 0..nc {
                out.data[i * nc + j] = self.raw(r0 + i, c0 + j);
            }
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = b.raw(i, j);
            }
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
        }
        Self { modulus: self.modulus, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut out = Self::zeros(self.modulus, self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                out.data[i * idx.len() + jj] = self.raw(i, j);
            }
        }
        out
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(Error::DimensionMismatch("vstack column mismatch".into()));
        }
        let cols = if self.rows == 0 { other.cols } else { self.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self { modulus: self.modulus, rows: self.rows + other.rows, cols, data })
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row mismatch".into()));
        }
        let mut out = Self::zeros(self.modulus, self.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, other);
        Ok(out)
    }

    /// In-place reduced row echelon form with first-nonzero pivoting.
    /// Returns pivot columns and the determinant factor accumulated from
    /// swaps and pivot normalisation (meaningful only for square input).
    pub(crate) fn rref_in_place(&mut self) -> (Vec<usize>, u32) {
        let m = self.modulus;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut det = 1 % m.get();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                det = 0;
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(r * cols + j, pr * cols + j);
                }
                det = m.neg(det);
            }
            let pv = self.data[r * cols + c];
            det = m.mul(det, pv);
            let inv = m.inv(pv).expect("nonzero pivot");
            for j in c..cols {
                let x = &mut self.data[r * cols + j];
                *x = m.mul(*x, inv);
            }
            let (head, tail) = self.data.split_at_mut(r * cols);
            let (prow, rest) = tail.split_at_mut(cols);
            for row in head.chunks_mut(cols).chain(rest.chunks_mut(cols)) {
                let f = row[c];
                if f == 0 {
                    continue;
                }
                for j in c..cols {
                    row[j] = m.sub(row[j], m.mul(f, prow[j]));
                }
            }
            pivots.push(c);
            r += 1;
        }
        if pivots.len() < self.rows.min(cols) || self.rows != cols {
            det = 0;
        }
        (pivots, det)
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let (piv, _) = m.rref_in_place();
        (m, piv)
    }

    /// Rank, nullspace basis and (for square input) determinant.
    pub fn reduce(&self) -> Reduction {
        let mut r = self.clone();
        let (pivots, det) = r.rref_in_place();
        let m = self.modulus;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let nullspace = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u32; self.cols];
                v[free] = 1 % m.get();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = m.neg(r.raw(i, free));
                }
                FpVector::from_raw(m, v)
            })
            .collect();
        Reduction { rank: pivots.len(), pivots, nullspace, det: self.is_square().then(|| m.elem(det as i64)) }
    }

    pub fn rank(&self) -> usize {
        let mut r = self.clone();
        r.rref_in_place().0.len()
    }

    pub fn nullspace(&self) -> Vec<FpVector> {
        self.reduce().nullspace
    }

    pub fn det(&self) -> Result<FpScalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of non-square matrix".into()));
        }
        Ok(self.reduce().det.expect("square"))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = self.hstack(&Self::identity(self.modulus, n))?;
        let (pivots, _) = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        Ok(aug.block(0, n, n, n))
    }

    /// Solve `self * x = b` for one particular solution (free variables zero).
    pub fn solve(&self, b: &FpVector) -> Option<FpVector> {
        let aug = self.hstack(&Self::from_columns(self.modulus, std::slice::from_ref(b)).ok()?).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.raw(i, self.cols);
        }
        Some(FpVector::from_raw(self.modulus, x))
    }
}

/// Rank, nullspace basis and determinant in one elimination pass.
pub fn mat_reduce(m: &FpMatrix) -> Reduction {
    m.reduce()
}

pub fn mat_inverse(m: &FpMatrix) -> Result<FpMatrix> {
    m.inverse()
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix over F_{} ({}x{})", self.modulus, self.rows, self.cols)?;
        for row in self.to_rows() {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}
