use std::fmt;

use crate::error::{Error, Result};
use crate::fp::{FpMatrix, FpScalar, FpVector, PrimeModulus};

/// Polynomial over F_p, coefficients lowest degree first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPolynomial {
    modulus: PrimeModulus,
    coeffs: Vec<u32>,
}

impl FpPolynomial {
    pub fn new(modulus: PrimeModulus, coeffs: &[i64]) -> Self {
        let mut p = Self { modulus, coeffs: coeffs.iter().map(|&c| modulus.reduce(c)).collect() };
        p.trim();
        p
    }

    fn from_raw(modulus: PrimeModulus, coeffs: Vec<u32>) -> Self {
        let mut p = Self { modulus, coeffs };
        p.trim();
        p
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        Self { modulus, coeffs: Vec::new() }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self::new(modulus, &[1])
    }

    /// `x - a`
    pub fn linear(modulus: PrimeModulus, root: i64) -> Self {
        Self::new(modulus, &[-root, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FpScalar {
        self.modulus.elem(self.coeffs.get(i).copied().unwrap_or(0) as i64)
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| m.add(*self.coeffs.get(i).unwrap_or(&0), *other.coeffs.get(i).unwrap_or(&0))).collect();
        Self::from_raw(m, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let m = self.modulus;
        let k = m.reduce(k);
        Self::from_raw(m, self.coeffs.iter().map(|&c| m.mul(c, k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let m = self.modulus;
        if self.is_zero() || other.is_zero() {
            return Self::zero(m);
        }
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = m.add(c[i + j], m.mul(a, b));
            }
        }
        Self::from_raw(m, c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.modulus), |acc, _| acc.mul(self))
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let m = self.modulus;
        let d = divisor.degree().ok_or(Error::DivisionByZero(m.get()))?;
        let lead_inv = m.inv(*divisor.coeffs.last().unwrap()).expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; self.coeffs.len().saturating_sub(d)];
        while rem.len() > d && !rem.is_empty() {
            let k = rem.len() - 1 - d;
            let f = m.mul(*rem.last().unwrap(), lead_inv);
            quot[k] = f;
            for (i, &c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = m.sub(rem[k + i], m.mul(f, c));
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        Ok((Self::from_raw(m, quot), Self::from_raw(m, rem)))
    }

    /// True when `self` divides `other` with zero remainder.
    pub fn divides(&self, other: &Self) -> bool {
        self.div_rem_of(other).map(|r| r.is_zero()).unwrap_or(false)
    }

    fn div_rem_of(&self, other: &Self) -> Result<Self> {
        Ok(other.div_rem(self)?.1)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = self.modulus.inv(lead).expect("nonzero lead");
                self.scale(inv as i64)
            }
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: FpScalar) -> FpScalar {
        let m = self.modulus;
        let v = self.coeffs.iter().rev().fold(0u32, |acc, &c| m.add(m.mul(acc, x.value()), c));
        m.elem(v as i64)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, t: &FpMatrix) -> Result<FpMatrix> {
        if !t.is_square() {
            return Err(Error::DimensionMismatch("polynomial of non-square matrix".into()));
        }
        let n = t.rows();
        let id = FpMatrix::identity(self.modulus, n);
        let mut acc = FpMatrix::zeros(self.modulus, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(t)?.add(&id.scale(c as i64))?;
        }
        Ok(acc)
    }

    /// `self(T) v` without forming `self(T)`.
    pub fn apply(&self, t: &FpMatrix, v: &FpVector) -> Result<FpVector> {
        let m = self.modulus;
        let mut acc = FpVector::zeros(m, v.len());
        for &c in self.coeffs.iter().rev() {
            acc = t.mul_vec(&acc)?.add(&v.scale(c));
        }
        Ok(acc)
    }
}

impl fmt::Debug for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic least-degree `m` with `m(T) v = 0`. The zero vector yields `1`.
pub fn krylov_min_poly(t: &FpMatrix, v: &FpVector) -> Result<FpPolynomial> {
    let m = t.modulus();
    if !t.is_square() || t.rows() != v.len() {
        return Err(Error::DimensionMismatch("krylov input shapes".into()));
    }
    let mut basis = vec![v.clone()];
    loop {
        let k = FpMatrix::from_columns(m, &basis)?;
        let red = k.reduce();
        if let Some(null) = red.nullspace.first() {
            // first dependency: the last column is a combination of the others
            let d = basis.len() - 1;
            let lead = null.as_slice()[d];
            let inv = m.inv(lead).expect("the newest Krylov vector carries the dependency");
            let coeffs: Vec<i64> = null.as_slice().iter().map(|&c| m.mul(c, inv) as i64).collect();
            return Ok(FpPolynomial::new(m, &coeffs));
        }
        let next = t.mul_vec(basis.last().unwrap())?;
        basis.push(next);
    }
}

/// Monic least-degree `m` with `m(T) = 0`, found from the first linear
/// dependency among `I, T, T^2, ...` viewed as flat vectors.
pub fn matrix_min_poly(t: &FpMatrix) -> Result<FpPolynomial> {
    let m = t.modulus();
    if !t.is_square() {
        return Err(Error::DimensionMismatch("minimal polynomial of non-square matrix".into()));
    }
    let n = t.rows();
    let flat = |a: &FpMatrix| FpVector::from_raw(m, a.to_rows().concat());
    let mut power = FpMatrix::identity(m, n);
    let mut cols = vec![flat(&power)];
    loop {
        let red = FpMatrix::from_columns(m, &cols)?.reduce();
        if let Some(null) = red.nullspace.first() {
            let d = cols.len() - 1;
            let inv = m.inv(null.as_slice()[d]).expect("newest power carries the dependency");
            let coeffs: Vec<i64> = null.as_slice().iter().map(|&c| m.mul(c, inv) as i64).collect();
            return Ok(FpPolynomial::new(m, &coeffs));
        }
        power = power.mul(t)?;
        cols.push(flat(&power));
    }
}

/// `x^2 - tr(T) x + det(T)` for a 2x2 block.
pub fn charpoly_2x2(t: &FpMatrix) -> Result<FpPolynomial> {
    if t.rows() != 2 || t.cols() != 2 {
        return Err(Error::DimensionMismatch("charpoly_2x2 needs a 2x2 block".into()));
    }
    let tr = t.get(0, 0) + t.get(1, 1);
    let det = t.det()?;
    Ok(FpPolynomial::new(t.modulus(), &[det.value() as i64, -(tr.value() as i64), 1]))
}

/// Characteristic polynomial via reduction to upper Hessenberg form and the
/// standard determinant recurrence. Valid over any field.
pub fn characteristic_polynomial(t: &FpMatrix) -> Result<FpPolynomial> {
    let md = t.modulus();
    if !t.is_square() {
        return Err(Error::DimensionMismatch("charpoly of non-square matrix".into()));
    }
    let n = t.rows();
    let mut h = t.clone();
    // similarity transforms to Hessenberg form
    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&i| h.raw(i, k) != 0) else {
            continue;
        };
        if piv != k + 1 {
            for j in 0..n {
                let (a, b) = (h.raw(piv, j), h.raw(k + 1, j));
                h.set_raw(piv, j, b);
                h.set_raw(k + 1, j, a);
            }
            for i in 0..n {
                let (a, b) = (h.raw(i, piv), h.raw(i, k + 1));
                h.set_raw(i, piv, b);
                h.set_raw(i, k + 1, a);
            }
        }
        let inv = md.inv(h.raw(k + 1, k)).expect("nonzero pivot");
        for i in k + 2..n {
            let f = md.mul(h.raw(i, k), inv);
            if f == 0 {
                continue;
            }
            for j in 0..n {
                let v = md.sub(h.raw(i, j), md.mul(f, h.raw(k + 1, j)));
                h.set_raw(i, j, v);
            }
            for r in 0..n {
                let v = md.add(h.raw(r, k + 1), md.mul(f, h.raw(r, i)));
                h.set_raw(r, k + 1, v);
            }
        }
    }
    // p_0 = 1, p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_i
    let mut polys = vec![FpPolynomial::one(md)];
    for k in 0..n {
        let mut next = FpPolynomial::linear(md, h.raw(k, k) as i64).mul(&polys[k]);
        let mut prod = 1u32;
        for i in (0..k).rev() {
            prod = md.mul(prod, h.raw(i + 1, i));
            let coef = md.mul(prod, h.raw(i, k));
            if coef != 0 {
                next = next.sub(&polys[i].scale(coef as i64));
            }
        }
        polys.push(next);
    }
    Ok(polys.pop().unwrap())
}
