use serde::Serialize;

use crate::code::{commutation_exponent, CodeParams, PauliConfig, Site, SympPair, TorusDims};
use crate::error::Result;
use crate::fp::PrimeModulus;

/// Vertex `(x, y, z)` of the unit cube, `x, y, z` in `{0, 1}`.
pub type Vertex = [u8; 3];

pub fn vertex_index(v: Vertex) -> usize {
    v[0] as usize + 2 * v[1] as usize + 4 * v[2] as usize
}

pub fn vertex_of(index: usize) -> Vertex {
    [(index & 1) as u8, ((index >> 1) & 1) as u8, ((index >> 2) & 1) as u8]
}

/// The single stabilizer generator attached to every unit cube.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CubeGenerator {
    labels: [SympPair; 8],
}

impl CubeGenerator {
    /// Places `alpha` at the origin, `beta`, `gamma`, `delta` on the
    /// `+x`, `+y`, `+z` neighbours, and `s` times each at its antipode.
    pub fn new(params: &CodeParams) -> Self {
        Self::with_scale(params, params.parity().sign())
    }

    /// Same layout with an arbitrary antipodal scale `s`. Only `s = +-1`
    /// gives a commuting family; other values exist to exercise the checker.
    pub fn with_scale(params: &CodeParams, s: i64) -> Self {
        let [a, b, c, d] = params.pairs();
        let mut labels = [a; 8];
        let mut place = |v: Vertex, pair: SympPair| {
            labels[vertex_index(v)] = pair;
            labels[vertex_index(v.map(|t| 1 - t))] = pair.scale(s);
        };
        place([0, 0, 0], a);
        place([1, 0, 0], b);
        place([0, 1, 0], c);
        place([0, 0, 1], d);
        Self { labels }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.labels[0].modulus()
    }

    pub fn label(&self, v: Vertex) -> SympPair {
        self.labels[vertex_index(v)]
    }

    pub fn labels(&self) -> &[SympPair; 8] {
        &self.labels
    }

    /// `(site offset, pair)` for each vertex.
    pub fn vertices(&self) -> impl Iterator<Item = ([i64; 3], SympPair)> + '_ {
        self.labels.iter().enumerate().map(|(i, &p)| (vertex_of(i).map(i64::from), p))
    }

    /// Generator on the cube with lowest corner `origin`.
    pub fn at(&self, origin: Site) -> PauliConfig {
        let mut c = PauliConfig::new(self.modulus());
        for (d, p) in self.vertices() {
            c.add_at(origin.offset(d), p);
        }
        c
    }

    pub fn at_on_torus(&self, origin: Site, torus: TorusDims) -> PauliConfig {
        let mut c = PauliConfig::on_torus(self.modulus(), torus);
        for (d, p) in self.vertices() {
            c.add_at(origin.offset(d), p);
        }
        c
    }
}

pub fn build_generator(params: &CodeParams) -> CubeGenerator {
    CubeGenerator::new(params)
}

/// All 26 nonzero offsets in `{-1, 0, 1}^3`.
pub fn neighbour_offsets() -> Vec<[i64; 3]> {
    let mut out = Vec::with_capacity(26);
    for x in -1..=1 {
        for y in -1..=1 {
            for z in -1..=1 {
                if (x, y, z) != (0, 0, 0) {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OffsetExponent {
    pub offset: [i64; 3],
    pub shared_sites: usize,
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutationReport {
    pub checked: Vec<OffsetExponent>,
    pub failures: Vec<OffsetExponent>,
}

impl CommutationReport {
    pub fn is_consistent(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Commutation of a generator with each overlapping translate of itself.
pub fn verify_generator_commutation(generator: &CubeGenerator) -> Result<CommutationReport> {
    let base = generator.at(Site::ORIGIN);
    let mut checked = Vec::new();
    for d in neighbour_offsets() {
        let shifted = generator.at(Site(d));
        let shared_sites = base.sites().filter(|&s| !shifted.get(s).is_zero()).count();
        let exponent = commutation_exponent(&base, &shifted)?.value();
        checked.push(OffsetExponent { offset: d, shared_sites, exponent });
    }
    let failures = checked.iter().filter(|e| e.exponent != 0).cloned().collect();
    Ok(CommutationReport { checked, failures })
}

pub fn verify_translation_commutation(params: &CodeParams) -> Result<CommutationReport> {
    verify_generator_commutation(&CubeGenerator::new(params))
}
