use std::{fmt, ops};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fp::{FpScalar, PrimeModulus};

/// Per-site exponents `(x, z)` of the generalized Pauli `X^x Z^z`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SympPair {
    x_exp: FpScalar,
    z_exp: FpScalar,
}

impl SympPair {
    pub fn new(modulus: PrimeModulus, x: i64, z: i64) -> Self {
        Self { x_exp: modulus.elem(x), z_exp: modulus.elem(z) }
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        Self::new(modulus, 0, 0)
    }

    pub fn modulus(self) -> PrimeModulus {
        self.x_exp.modulus()
    }

    pub fn x(self) -> FpScalar {
        self.x_exp
    }

    pub fn z(self) -> FpScalar {
        self.z_exp
    }

    pub fn raw(self) -> [u32; 2] {
        [self.x_exp.value(), self.z_exp.value()]
    }

    /// Centered integer representatives.
    pub fn centered(self) -> [i64; 2] {
        [self.x_exp.centered(), self.z_exp.centered()]
    }

    pub fn is_zero(self) -> bool {
        self.x_exp.is_zero() && self.z_exp.is_zero()
    }

    pub fn scale(self, k: i64) -> Self {
        let k = self.modulus().elem(k);
        Self { x_exp: self.x_exp * k, z_exp: self.z_exp * k }
    }

    /// `<a, b> = a1 b2 - a2 b1`.
    pub fn symplectic(self, other: Self) -> Result<FpScalar> {
        let m = self.modulus();
        if m != other.modulus() {
            return Err(Error::ModulusMismatch { left: m.get(), right: other.modulus().get() });
        }
        Ok(self.x_exp * other.z_exp - self.z_exp * other.x_exp)
    }

    /// Apply the 2x2 matrix `[[a, b], [c, d]]` to the column `(x, z)`.
    pub fn transform(self, m: [[i64; 2]; 2]) -> Self {
        let [x, z] = self.raw().map(i64::from);
        Self::new(self.modulus(), m[0][0] * x + m[0][1] * z, m[1][0] * x + m[1][1] * z)
    }
}

pub fn symplectic_product(a: SympPair, b: SympPair) -> Result<FpScalar> {
    a.symplectic(b)
}

impl ops::Add for SympPair {
    type Output = Self;

    fn add(self, other: Self) -> Self {
        Self { x_exp: self.x_exp + other.x_exp, z_exp: self.z_exp + other.z_exp }
    }
}

impl ops::Neg for SympPair {
    type Output = Self;

    fn neg(self) -> Self {
        Self { x_exp: -self.x_exp, z_exp: -self.z_exp }
    }
}

impl fmt::Debug for SympPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x_exp, self.z_exp)
    }
}

impl fmt::Display for SympPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for SympPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.raw().serialize(s)
    }
}
