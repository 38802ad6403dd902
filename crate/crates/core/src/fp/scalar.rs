use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime modulus `p`, checked by trial division at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(Self(p))
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Reduce an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    pub fn elem(self, x: i64) -> FpScalar {
        FpScalar { value: self.reduce(x), modulus: self }
    }

    pub fn zero(self) -> FpScalar {
        self.elem(0)
    }

    pub fn one(self) -> FpScalar {
        self.elem(1)
    }

    #[inline]
    pub(crate) fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub(crate) fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 as u64 - b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub(crate) fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub(crate) fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub(crate) fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub(crate) fn inv(self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.0) {
            return None;
        }
        let (mut r0, mut r1) = (self.0 as i64, (a % self.0) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce(t0))
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> u32 {
        let p = self.0;
        if p == 2 {
            return 1;
        }
        let order = p - 1;
        let factors = prime_factors(order);
        (2..p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (order / q) as u64) != 1))
            .expect("every prime field has a primitive root")
    }

    /// Centered representative in `(-p/2, p/2]`.
    pub fn centered(self, a: u32) -> i64 {
        let a = a as i64;
        let p = self.0 as i64;
        if 2 * a > p {
            a - p
        } else {
            a
        }
    }
}

impl TryFrom<u32> for PrimeModulus {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Self::new(p)
    }
}

impl From<PrimeModulus> for u32 {
    fn from(p: PrimeModulus) -> u32 {
        p.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element of F_p. Operator impls panic on mixed moduli; use the
/// `checked_*` forms where moduli come from untrusted input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpScalar {
    value: u32,
    modulus: PrimeModulus,
}

impl FpScalar {
    pub fn new(value: i64, modulus: PrimeModulus) -> Self {
        modulus.elem(value)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn centered(self) -> i64 {
        self.modulus.centered(self.value)
    }

    pub fn inv(self) -> Result<Self> {
        self.modulus
            .inv(self.value)
            .map(|value| Self { value, modulus: self.modulus })
            .ok_or(Error::DivisionByZero(self.modulus.get()))
    }

    pub fn pow(self, exp: u64) -> Self {
        Self { value: self.modulus.pow(self.value, exp), modulus: self.modulus }
    }

    fn same(self, other: Self) -> Result<PrimeModulus> {
        if self.modulus == other.modulus {
            Ok(self.modulus)
        } else {
            Err(Error::ModulusMismatch { left: self.modulus.get(), right: other.modulus.get() })
        }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let m = self.same(rhs)?;
        Ok(Self { value: m.add(self.value, rhs.value), modulus: m })
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        let m = self.same(rhs)?;
        Ok(Self { value: m.sub(self.value, rhs.value), modulus: m })
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let m = self.same(rhs)?;
        Ok(Self { value: m.mul(self.value, rhs.value), modulus: m })
    }
}

/// Multiplicative inverse of a nonzero scalar.
pub fn fp_inv(x: FpScalar) -> Result<FpScalar> {
    x.inv()
}

impl Add for FpScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("F_p addition across moduli")
    }
}

impl Sub for FpScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("F_p subtraction across moduli")
    }
}

impl Mul for FpScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("F_p multiplication across moduli")
    }
}

impl Neg for FpScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self { value: self.modulus.neg(self.value), modulus: self.modulus }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
