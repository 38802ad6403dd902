use std::collections::HashMap;

use serde::Serialize;

use crate::code::{PauliConfig, Site};
use crate::error::{Error, Result};
use crate::fp::{FpScalar, PrimeModulus};

/// `w^phase * prod_site X^x Z^z`, each site written X before Z.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PhasedPauli {
    #[serde(skip)]
    modulus: PrimeModulus,
    sites: Vec<Site>,
    x: Vec<u32>,
    z: Vec<u32>,
    phase: u32,
}

impl PhasedPauli {
    pub fn new(modulus: PrimeModulus, sites: Vec<Site>, x: &[i64], z: &[i64], phase: i64) -> Result<Self> {
        if x.len() != sites.len() || z.len() != sites.len() {
            return Err(Error::DimensionMismatch("exponent vectors differ from the site list".into()));
        }
        Ok(Self {
            modulus,
            sites,
            x: x.iter().map(|&v| modulus.reduce(v)).collect(),
            z: z.iter().map(|&v| modulus.reduce(v)).collect(),
            phase: modulus.reduce(phase),
        })
    }

    pub fn identity(modulus: PrimeModulus, sites: Vec<Site>) -> Self {
        let n = sites.len();
        Self { modulus, sites, x: vec![0; n], z: vec![0; n], phase: 0 }
    }

    /// Phase-free config on an explicit site list.
    pub fn from_config(config: &PauliConfig, sites: Vec<Site>) -> Result<Self> {
        let index: HashMap<Site, usize> = sites.iter().enumerate().map(|(k, &s)| (s, k)).collect();
        let mut out = Self::identity(config.modulus(), sites);
        for (s, p) in config.iter() {
            let k = *index.get(&s).ok_or(Error::SiteSetMismatch)?;
            [out.x[k], out.z[k]] = p.raw();
        }
        Ok(out)
    }

    /// Phase `-(x.z)/2`, the choice under which spatial inversion of an
    /// antisymmetric operator is exactly its inverse.
    pub fn weyl(config: &PauliConfig, sites: Vec<Site>) -> Result<Self> {
        let m = config.modulus();
        if m.get() == 2 {
            return Err(Error::UnsupportedModulus(2, "halving needs an odd prime"));
        }
        let mut out = Self::from_config(config, sites)?;
        let dot = out.x.iter().zip(&out.z).fold(0u32, |acc, (&a, &b)| m.add(acc, m.mul(a, b)));
        let half = m.elem(2).inv()?.value();
        out.phase = m.neg(m.mul(half, dot));
        Ok(out)
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn x(&self) -> &[u32] {
        &self.x
    }

    pub fn z(&self) -> &[u32] {
        &self.z
    }

    pub fn phase(&self) -> u32 {
        self.phase
    }

    pub fn is_identity(&self) -> bool {
        self.phase == 0 && self.x.iter().chain(&self.z).all(|&v| v == 0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus.get(), right: other.modulus.get() });
        }
        if self.sites != other.sites {
            return Err(Error::SiteSetMismatch);
        }
        Ok(())
    }

    /// `Z^b X^a = w^(-ab) X^a Z^b` moves every Z of `self` past every X of `other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.modulus;
        let cross = self.z.iter().zip(&other.x).fold(0u32, |acc, (&b, &a)| m.add(acc, m.mul(b, a)));
        Ok(Self {
            modulus: m,
            sites: self.sites.clone(),
            x: self.x.iter().zip(&other.x).map(|(&a, &b)| m.add(a, b)).collect(),
            z: self.z.iter().zip(&other.z).map(|(&a, &b)| m.add(a, b)).collect(),
            phase: m.sub(m.add(self.phase, other.phase), cross),
        })
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::identity(self.modulus, self.sites.clone());
        for _ in 0..e {
            acc = acc.mul(self).expect("same sites");
        }
        acc
    }

    pub fn inverse(&self) -> Self {
        self.pow(self.modulus.get() as u64 - 1)
    }

    /// Exponent `e` with `U V = V U w^e`.
    pub fn commutator_exponent(&self, other: &Self) -> Result<FpScalar> {
        self.check(other)?;
        let m = self.modulus;
        let mut e = 0u32;
        for k in 0..self.sites.len() {
            e = m.add(e, m.sub(m.mul(self.x[k], other.z[k]), m.mul(self.z[k], other.x[k])));
        }
        Ok(m.elem(e as i64))
    }

    /// Move the operator on site `k` to site `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::identity(self.modulus, self.sites.clone());
        out.phase = self.phase;
        for (k, &t) in perm.iter().enumerate() {
            out.x[t] = self.x[k];
            out.z[t] = self.z[k];
        }
        out
    }
}

pub fn pauli_mul(u: &PhasedPauli, v: &PhasedPauli) -> Result<PhasedPauli> {
    u.mul(v)
}

pub fn commutator_exponent(u: &PhasedPauli, v: &PhasedPauli) -> Result<FpScalar> {
    u.commutator_exponent(v)
}

pub fn pauli_power(u: &PhasedPauli, e: u64) -> PhasedPauli {
    u.pow(e)
}
