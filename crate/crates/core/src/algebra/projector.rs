use std::collections::{BTreeMap, HashMap};

use num_rational::Ratio;
use serde::Serialize;

use super::cyclotomic::Cyclotomic;
use super::pauli::PhasedPauli;
use crate::code::{CodeParams, CubeGenerator, InversionCenter, Parity, Site, TorusDims};
use crate::error::{Error, Result};
use crate::fp::{FpScalar, PrimeModulus};

type ExponentKey = (Vec<u32>, Vec<u32>);

/// Limits on projector construction. The default allows a 2x2x2 torus at p = 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraGuard {
    pub max_sites: usize,
    pub max_modulus: u32,
}

impl Default for AlgebraGuard {
    fn default() -> Self {
        Self { max_sites: 8, max_modulus: 3 }
    }
}

impl AlgebraGuard {
    pub fn unlimited() -> Self {
        Self { max_sites: usize::MAX, max_modulus: u32::MAX }
    }

    pub fn check(&self, modulus: PrimeModulus, sites: usize) -> Result<()> {
        if sites > self.max_sites || modulus.get() > self.max_modulus {
            return Err(Error::SizeGuard(format!(
                "{sites} sites at p = {} exceeds the limit of {} sites at p <= {}",
                modulus.get(),
                self.max_sites,
                self.max_modulus
            )));
        }
        Ok(())
    }
}

/// Linear combination of normal-ordered Pauli strings with cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorSum {
    modulus: PrimeModulus,
    sites: Vec<Site>,
    terms: BTreeMap<ExponentKey, Cyclotomic>,
}

impl OperatorSum {
    pub fn zero(modulus: PrimeModulus, sites: Vec<Site>) -> Self {
        Self { modulus, sites, terms: BTreeMap::new() }
    }

    pub fn identity(modulus: PrimeModulus, sites: Vec<Site>) -> Self {
        Self::from_pauli(&PhasedPauli::identity(modulus, sites))
    }

    pub fn from_pauli(u: &PhasedPauli) -> Self {
        let p = u.modulus().get();
        let mut out = Self::zero(u.modulus(), u.sites().to_vec());
        out.insert((u.x().to_vec(), u.z().to_vec()), Cyclotomic::omega_pow(p, u.phase() as i64));
        out
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentKey, &Cyclotomic)> {
        self.terms.iter()
    }

    fn insert(&mut self, key: ExponentKey, c: Cyclotomic) {
        let sum = match self.terms.remove(&key) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
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

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.modulus, self.sites.clone());
        for (k, v) in &self.terms {
            out.insert(k.clone(), v.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.modulus;
        let mut out = Self::zero(m, self.sites.clone());
        for ((xa, za), ca) in &self.terms {
            for ((xb, zb), cb) in &other.terms {
                let cross = za.iter().zip(xb).fold(0u32, |acc, (&b, &a)| m.add(acc, m.mul(b, a)));
                let x = xa.iter().zip(xb).map(|(&a, &b)| m.add(a, b)).collect();
                let z = za.iter().zip(zb).map(|(&a, &b)| m.add(a, b)).collect();
                out.insert((x, z), ca.mul(cb).rotate(-(cross as i64)));
            }
        }
        Ok(out)
    }

    /// Move the operator on site `k` to site `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.modulus, self.sites.clone());
        for ((x, z), c) in &self.terms {
            let mut nx = vec![0; x.len()];
            let mut nz = vec![0; z.len()];
            for (k, &t) in perm.iter().enumerate() {
                nx[t] = x[k];
                nz[t] = z[k];
            }
            out.insert((nx, nz), c.clone());
        }
        out
    }
}

fn require_odd(m: PrimeModulus) -> Result<()> {
    if m.get() == 2 {
        return Err(Error::UnsupportedModulus(2, "projector algebra needs an odd prime"));
    }
    Ok(())
}

/// `(1/p) sum_m w^(rm) s^m`.
pub fn build_projector(s: &PhasedPauli, r: FpScalar, guard: &AlgebraGuard) -> Result<OperatorSum> {
    let m = s.modulus();
    require_odd(m)?;
    guard.check(m, s.sites().len())?;
    let p = m.get();
    if !s.pow(p as u64).is_identity() {
        return Err(Error::NotOrderP);
    }
    let mut out = OperatorSum::zero(m, s.sites().to_vec());
    let mut power = PhasedPauli::identity(m, s.sites().to_vec());
    for k in 0..p as i64 {
        let term = OperatorSum::from_pauli(&power).scale(&Cyclotomic::omega_pow(p, r.value() as i64 * k));
        out = out.add(&term)?;
        power = power.mul(s)?;
    }
    Ok(out.scale(&Cyclotomic::rational(p, Ratio::new(1, p as i64))))
}

/// Site permutation of a point reflection; fails if the site list is not closed under it.
pub fn inversion_permutation(sites: &[Site], center: InversionCenter, torus: Option<TorusDims>) -> Result<Vec<usize>> {
    let index: HashMap<Site, usize> = sites.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let d = center.doubled();
    sites
        .iter()
        .map(|s| {
            let raw = Site([0, 1, 2].map(|i| d[i] - s.0[i]));
            let img = torus.map_or(raw, |t| t.wrap(raw));
            index.get(&img).copied().ok_or(Error::InvalidCenter)
        })
        .collect()
}

pub fn inversion_conjugate(
    sum: &OperatorSum,
    center: InversionCenter,
    torus: Option<TorusDims>,
) -> Result<OperatorSum> {
    let perm = inversion_permutation(sum.sites(), center, torus)?;
    Ok(sum.permuted(&perm))
}

/// Weyl-phased cube generator at the origin of `torus`.
pub fn torus_generator(params: &CodeParams, torus: TorusDims) -> Result<PhasedPauli> {
    let generator = CubeGenerator::new(params);
    let config = generator.at_on_torus(Site::ORIGIN, torus);
    PhasedPauli::weyl(&config, torus.sites().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InversionCheck {
    pub r: u32,
    pub expected: u32,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraReport {
    pub modulus: u32,
    pub parity: Parity,
    pub dims: [i64; 3],
    pub xz_phase: u32,
    pub zx_phase: u32,
    pub xz_commutator: u32,
    pub phase_law: bool,
    pub projector_terms: Vec<usize>,
    pub idempotent: bool,
    pub orthogonal: bool,
    pub complete: bool,
    pub inversion: Vec<InversionCheck>,
}

impl AlgebraReport {
    pub fn all_hold(&self) -> bool {
        self.phase_law && self.idempotent && self.orthogonal && self.complete && self.inversion.iter().all(|c| c.holds)
    }
}

/// Phase law, projector identities and inversion action for the cube generator on `torus`.
pub fn verify_projector_algebra(params: &CodeParams, torus: TorusDims, guard: &AlgebraGuard) -> Result<AlgebraReport> {
    let m = params.modulus();
    require_odd(m)?;
    guard.check(m, torus.volume())?;
    let p = m.get();

    let one = vec![Site::ORIGIN];
    let x = PhasedPauli::new(m, one.clone(), &[1], &[0], 0)?;
    let z = PhasedPauli::new(m, one, &[0], &[1], 0)?;
    let xz = x.mul(&z)?;
    let zx = z.mul(&x)?;
    let comm = x.commutator_exponent(&z)?.value();
    let phase_law = xz.phase() == 0 && zx.phase() == p - 1 && comm == 1 && zx.x() == xz.x() && zx.z() == xz.z();

    let s = torus_generator(params, torus)?;
    let projectors: Vec<OperatorSum> =
        (0..p as i64).map(|r| build_projector(&s, m.elem(r), guard)).collect::<Result<_>>()?;
    let sites = s.sites().to_vec();

    let mut idempotent = true;
    let mut orthogonal = true;
    for (i, a) in projectors.iter().enumerate() {
        for (j, b) in projectors.iter().enumerate() {
            let prod = a.mul(b)?;
            if i == j {
                idempotent &= prod == *a;
            } else {
                orthogonal &= prod.is_empty();
            }
        }
    }
    let total = projectors.iter().try_fold(OperatorSum::zero(m, sites.clone()), |acc, q| acc.add(q))?;
    let complete = total == OperatorSum::identity(m, sites);

    let center = InversionCenter::cube(Site::ORIGIN);
    let inversion = projectors
        .iter()
        .enumerate()
        .map(|(r, q)| {
            let expected = match params.parity() {
                Parity::Symmetric => r as u32,
                Parity::Antisymmetric => m.reduce(-(r as i64)),
            };
            let image = inversion_conjugate(q, center, Some(torus))?;
            Ok(InversionCheck { r: r as u32, expected, holds: image == projectors[expected as usize] })
        })
        .collect::<Result<_>>()?;

    Ok(AlgebraReport {
        modulus: p,
        parity: params.parity(),
        dims: torus.sides(),
        xz_phase: xz.phase(),
        zx_phase: zx.phase(),
        xz_commutator: comm,
        phase_law,
        projector_terms: projectors.iter().map(OperatorSum::len).collect(),
        idempotent,
        orthogonal,
        complete,
        inversion,
    })
}
