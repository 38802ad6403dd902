use std::fmt;

use num_rational::Ratio;

/// Element of `Q(w)`, `w = exp(2 pi i / p)`, stored on the basis `1, w, ..., w^(p-2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    p: u32,
    coeffs: Vec<Ratio<i64>>,
}

impl Cyclotomic {
    pub fn zero(p: u32) -> Self {
        Self { p, coeffs: vec![Ratio::from_integer(0); p as usize - 1] }
    }

    pub fn one(p: u32) -> Self {
        Self::omega_pow(p, 0)
    }

    pub fn rational(p: u32, r: Ratio<i64>) -> Self {
        let mut c = Self::zero(p);
        c.coeffs[0] = r;
        c
    }

    /// `w^k`.
    pub fn omega_pow(p: u32, k: i64) -> Self {
        let mut full = vec![Ratio::from_integer(0); p as usize];
        full[k.rem_euclid(p as i64) as usize] = Ratio::from_integer(1);
        Self::from_full(p, full)
    }

    /// Reduce a length-`p` coefficient list using `1 + w + ... + w^(p-1) = 0`.
    fn from_full(p: u32, mut full: Vec<Ratio<i64>>) -> Self {
        let top = full.pop().expect("p >= 2");
        Self { p, coeffs: full.into_iter().map(|c| c - top).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == Ratio::from_integer(0))
    }

    pub fn coefficients(&self) -> &[Ratio<i64>] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { p: self.p, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { p: self.p, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, r: Ratio<i64>) -> Self {
        Self { p: self.p, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.p as usize;
        let mut full = vec![Ratio::from_integer(0); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == Ratio::from_integer(0) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                full[(i + j) % p] += a * b;
            }
        }
        Self::from_full(self.p, full)
    }

    /// Multiply by `w^k`.
    pub fn rotate(&self, k: i64) -> Self {
        self.mul(&Self::omega_pow(self.p, k))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != Ratio::from_integer(0))
            .map(|(k, c)| if k == 0 { format!("{c}") } else { format!("{c}w^{k}") })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for p in [3, 5, 7] {
            let s = (0..p as i64).fold(Cyclotomic::zero(p), |acc, k| acc.add(&Cyclotomic::omega_pow(p, k)));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn powers_multiply() {
        let p = 5;
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(
                    Cyclotomic::omega_pow(p, a).mul(&Cyclotomic::omega_pow(p, b)),
                    Cyclotomic::omega_pow(p, a + b)
                );
            }
        }
    }

    #[test]
    fn representation_is_canonical() {
        // w^2 built directly and as -(1 + w) at p = 3
        let direct = Cyclotomic::omega_pow(3, 2);
        let indirect = Cyclotomic::one(3).add(&Cyclotomic::omega_pow(3, 1)).neg();
        assert_eq!(direct, indirect);
    }
}
