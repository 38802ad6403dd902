use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::code::SympPair;
use crate::error::{Error, Result};
use crate::fp::{FpScalar, PrimeModulus};

/// Integer lattice site.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Site(pub [i64; 3]);

impl Site {
    pub const ORIGIN: Site = Site([0, 0, 0]);

    pub fn new(x: i64, y: i64, z: i64) -> Self {
        Site([x, y, z])
    }

    pub fn offset(self, d: [i64; 3]) -> Self {
        Site([self.0[0] + d[0], self.0[1] + d[1], self.0[2] + d[2]])
    }

    pub fn coord(self, axis: usize) -> i64 {
        self.0[axis]
    }
}

impl fmt::Debug for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.0;
        write!(f, "({x},{y},{z})")
    }
}

/// Periodic box `L_x x L_y x L_z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TorusDims([i64; 3]);

impl TorusDims {
    pub fn new(lx: i64, ly: i64, lz: i64) -> Result<Self> {
        for side in [lx, ly, lz] {
            if side < 2 {
                return Err(Error::TorusTooSmall(side));
            }
        }
        Ok(Self([lx, ly, lz]))
    }

    pub fn cube(side: i64) -> Result<Self> {
        Self::new(side, side, side)
    }

    pub fn sides(self) -> [i64; 3] {
        self.0
    }

    pub fn side(self, axis: usize) -> i64 {
        self.0[axis]
    }

    pub fn volume(self) -> usize {
        (self.0[0] * self.0[1] * self.0[2]) as usize
    }

    pub fn wrap(self, s: Site) -> Site {
        Site([0, 1, 2].map(|i| s.0[i].rem_euclid(self.0[i])))
    }

    /// Row-major index `x + L_x (y + L_y z)` of a wrapped site.
    pub fn index(self, s: Site) -> usize {
        let Site([x, y, z]) = self.wrap(s);
        (x + self.0[0] * (y + self.0[1] * z)) as usize
    }

    pub fn sites(self) -> impl Iterator<Item = Site> {
        let [lx, ly, lz] = self.0;
        (0..lz).flat_map(move |z| (0..ly).flat_map(move |y| (0..lx).map(move |x| Site([x, y, z]))))
    }
}

impl std::str::FromStr for TorusDims {
    type Err = Error;
    /// Accepts `4x4x4` or `4,4,4`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<i64> = s
            .split(['x', 'X', ','])
            .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("dims {s:?}: {e}"))))
            .collect::<Result<_>>()?;
        match parts[..] {
            [a, b, c] => Self::new(a, b, c),
            _ => Err(Error::Parse(format!("dims {s:?}: expected three sides"))),
        }
    }
}

/// Phase-free Pauli operator: a finitely supported map from sites to pairs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliConfig {
    modulus: PrimeModulus,
    torus: Option<TorusDims>,
    support: BTreeMap<Site, SympPair>,
}

impl PauliConfig {
    pub fn new(modulus: PrimeModulus) -> Self {
        Self { modulus, torus: None, support: BTreeMap::new() }
    }

    pub fn on_torus(modulus: PrimeModulus, torus: TorusDims) -> Self {
        Self { modulus, torus: Some(torus), support: BTreeMap::new() }
    }

    pub fn single(site: Site, pair: SympPair) -> Self {
        let mut c = Self::new(pair.modulus());
        c.add_at(site, pair);
        c
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn torus(&self) -> Option<TorusDims> {
        self.torus
    }

    fn canonical(&self, s: Site) -> Site {
        self.torus.map_or(s, |t| t.wrap(s))
    }

    /// Multiply by `pair` at `site`; the stored value drops out when it cancels.
    pub fn add_at(&mut self, site: Site, pair: SympPair) {
        assert_eq!(pair.modulus(), self.modulus, "pair modulus differs from config modulus");
        let site = self.canonical(site);
        let sum = self.get(site) + pair;
        if sum.is_zero() {
            self.support.remove(&site);
        } else {
            self.support.insert(site, sum);
        }
    }

    pub fn set(&mut self, site: Site, pair: SympPair) {
        let site = self.canonical(site);
        if pair.is_zero() {
            self.support.remove(&site);
        } else {
            self.support.insert(site, pair);
        }
    }

    pub fn get(&self, site: Site) -> SympPair {
        self.support.get(&self.canonical(site)).copied().unwrap_or_else(|| SympPair::zero(self.modulus))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Site, SympPair)> + '_ {
        self.support.iter().map(|(&s, &p)| (s, p))
    }

    pub fn sites(&self) -> impl Iterator<Item = Site> + '_ {
        self.support.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus.get(), right: other.modulus.get() });
        }
        if self.torus != other.torus {
            return Err(Error::TorusMismatch);
        }
        Ok(())
    }

    /// Operator product (pairs add sitewise).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (s, p) in other.iter() {
            out.add_at(s, p);
        }
        Ok(out)
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut out = Self { support: BTreeMap::new(), ..self.clone() };
        for (s, p) in self.iter() {
            out.set(s, p.scale(k));
        }
        out
    }

    pub fn translate(&self, d: [i64; 3]) -> Self {
        let mut out = Self { support: BTreeMap::new(), ..self.clone() };
        for (s, p) in self.iter() {
            out.add_at(s.offset(d), p);
        }
        out
    }

    /// Re-home the config on a torus, wrapping every site.
    pub fn wrapped(&self, torus: TorusDims) -> Self {
        let mut out = Self::on_torus(self.modulus, torus);
        for (s, p) in self.iter() {
            out.add_at(s, p);
        }
        out
    }
}

/// Exponent `e` with `A B = B A w^e`: the sum of sitewise symplectic products.
pub fn commutation_exponent(a: &PauliConfig, b: &PauliConfig) -> Result<FpScalar> {
    a.same_space(b)?;
    let (small, large, sign) = if a.len() <= b.len() { (a, b, 1) } else { (b, a, -1) };
    let mut acc = a.modulus.zero();
    for (s, p) in small.iter() {
        if let Some(&q) = large.support.get(&s) {
            acc = acc + p.symplectic(q)?;
        }
    }
    Ok(if sign == 1 { acc } else { -acc })
}

/// Doubled coordinates of an inversion center: all even for a lattice site,
/// all odd for a cube center.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InversionCenter([i64; 3]);

impl InversionCenter {
    pub fn from_doubled(d: [i64; 3]) -> Result<Self> {
        let parity = d[0].rem_euclid(2);
        if d.iter().any(|c| c.rem_euclid(2) != parity) {
            return Err(Error::InvalidCenter);
        }
        Ok(Self(d))
    }

    pub fn site(s: Site) -> Self {
        Self(s.0.map(|c| 2 * c))
    }

    /// Center of the unit cube whose lowest corner is `origin`.
    pub fn cube(origin: Site) -> Self {
        Self(origin.0.map(|c| 2 * c + 1))
    }

    pub fn doubled(self) -> [i64; 3] {
        self.0
    }
}

/// Reflect the support through `center`; pairs are carried unchanged.
pub fn inversion_image(c: &PauliConfig, center: InversionCenter) -> Result<PauliConfig> {
    let mut out = PauliConfig { support: BTreeMap::new(), ..c.clone() };
    for (s, p) in c.iter() {
        let img = Site([0, 1, 2].map(|i| center.0[i] - s.0[i]));
        out.add_at(img, p);
    }
    Ok(out)
}

impl fmt::Debug for PauliConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.support.iter()).finish()
    }
}

#[derive(Serialize)]
struct SiteEntry {
    site: [i64; 3],
    pair: [u32; 2],
}

impl Serialize for PauliConfig {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<SiteEntry> =
            self.iter().map(|(site, pair)| SiteEntry { site: site.0, pair: pair.raw() }).collect();
        entries.serialize(s)
    }
}
