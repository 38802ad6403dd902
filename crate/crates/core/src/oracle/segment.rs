use std::collections::{BTreeSet, HashMap};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::code::{CodeParams, CubeGenerator, PauliConfig, Site};
use crate::error::Result;
use crate::fp::{FpMatrix, FpVector, PrimeModulus};
use crate::oracle::{KindFamily, PlaneOrientation, SegmentGeometry};

/// Linear system whose kernel is the set of operators on a segment support
/// commuting with every generator that meets the support and avoids both anchors.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub geometry: SegmentGeometry,
    /// Support sites; site `k` owns columns `2k` (x exponent) and `2k + 1` (z exponent).
    pub sites: Vec<Site>,
    pub labeling: HashMap<Site, usize>,
    /// Lowest corner of the cube behind each row.
    pub row_cubes: Vec<Site>,
    pub matrix: FpMatrix,
}

impl ConstraintSystem {
    pub fn modulus(&self) -> PrimeModulus {
        self.matrix.modulus()
    }

    pub fn columns_of(&self, t: usize) -> std::ops::Range<usize> {
        let w = self.geometry.width;
        2 * w * t..2 * w * (t + 1)
    }

    /// Unknown vector back to a lattice config.
    pub fn config(&self, v: &FpVector) -> PauliConfig {
        let m = self.modulus();
        let mut c = PauliConfig::new(m);
        for (k, &s) in self.sites.iter().enumerate() {
            let pair = crate::code::SympPair::new(m, v.as_slice()[2 * k] as i64, v.as_slice()[2 * k + 1] as i64);
            c.set(s, pair);
        }
        c
    }

    /// Coefficient vector of a generator restricted to the support.
    fn restricted(&self, generator: &CubeGenerator, origin: Site) -> FpVector {
        let m = self.modulus();
        let mut data = vec![0u32; 2 * self.sites.len()];
        for (d, pair) in generator.vertices() {
            if let Some(&k) = self.labeling.get(&origin.offset(d)) {
                let [x, z] = pair.raw();
                data[2 * k] = m.add(data[2 * k], x);
                data[2 * k + 1] = m.add(data[2 * k + 1], z);
            }
        }
        FpVector::from_i64(m, &data.iter().map(|&x| x as i64).collect::<Vec<_>>())
    }
}

/// Cube origins whose footprint meets the support and stays clear of both anchors.
pub fn interior_cubes(geom: &SegmentGeometry) -> Vec<Site> {
    let cross = geom.cross_section();
    let mut origins = BTreeSet::new();
    for t in 0..geom.length as i64 - 1 {
        for &(u, v) in &cross {
            for du in [-1, 0] {
                for dv in [-1, 0] {
                    origins.insert((t, u + du, v + dv));
                }
            }
        }
    }
    origins.into_iter().map(|(t, u, v)| geom.orientation.site(t, u, v)).collect()
}

pub fn build_segment_constraints(params: &CodeParams, geom: &SegmentGeometry) -> Result<ConstraintSystem> {
    let geom = SegmentGeometry::new(geom.kind, geom.width, geom.length, geom.orientation)?;
    let m = params.modulus();
    let generator = CubeGenerator::new(params);
    let sites = geom.support();
    let labeling: HashMap<Site, usize> = sites.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let row_cubes = interior_cubes(&geom);
    let mut matrix = FpMatrix::zeros(m, row_cubes.len(), 2 * sites.len());
    for (r, &origin) in row_cubes.iter().enumerate() {
        for (d, g) in generator.vertices() {
            if let Some(&k) = labeling.get(&origin.offset(d)) {
                // <g, O> = g1 O2 - g2 O1
                let [g1, g2] = g.raw().map(i64::from);
                let x = matrix.get(r, 2 * k).value() as i64 - g2;
                let z = matrix.get(r, 2 * k + 1).value() as i64 + g1;
                matrix.set(r, 2 * k, x);
                matrix.set(r, 2 * k + 1, z);
            }
        }
    }
    Ok(ConstraintSystem { geometry: geom, sites, labeling, row_cubes, matrix })
}

/// Verdict for one geometry.
#[derive(Clone, Debug, Serialize)]
pub struct SegmentSolution {
    pub geometry: SegmentGeometry,
    pub nullspace_dim: usize,
    pub nontrivial: bool,
    pub witness: Option<PauliConfig>,
}

fn rank_of(m: PrimeModulus, cols: usize, rows: &[FpVector]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    FpMatrix::from_row_vectors(m, cols, rows).expect("uniform rows").rank()
}

fn project(v: &FpVector, range: std::ops::Range<usize>) -> FpVector {
    FpVector::from_i64(v.modulus(), &v.as_slice()[range].iter().map(|&x| x as i64).collect::<Vec<_>>())
}

/// Solve a segment geometry. A solution counts as nontrivial when its end
/// columns cannot be cleared by generators lying wholly inside the support.
pub fn solve_system(params: &CodeParams, sys: &ConstraintSystem) -> SegmentSolution {
    let m = params.modulus();
    let null = sys.matrix.nullspace();
    let last = sys.geometry.length - 1;
    let (first_cols, last_cols) = (sys.columns_of(0), sys.columns_of(last));
    let width = first_cols.len();

    let generator = CubeGenerator::new(params);
    let support: BTreeSet<Site> = sys.sites.iter().copied().collect();
    let cleanup: Vec<FpVector> = sys
        .row_cubes
        .iter()
        .filter(|&&o| generator.vertices().all(|(d, _)| support.contains(&o.offset(d))))
        .map(|&o| sys.restricted(&generator, o))
        .collect();

    let good_at = |cols: std::ops::Range<usize>| {
        let base: Vec<FpVector> = cleanup.iter().map(|g| project(g, cols.clone())).collect();
        let base_rank = rank_of(m, width, &base);
        move |v: &FpVector| {
            let mut rows = base.clone();
            rows.push(project(v, cols.clone()));
            rank_of(m, width, &rows) > base_rank
        }
    };
    let good_first = good_at(first_cols);
    let good_last = good_at(last_cols);

    let v = null.iter().find(|v| good_first(v));
    let w = null.iter().find(|v| good_last(v));
    let witness = match (v, w) {
        (Some(v), Some(w)) => Some(if good_last(v) {
            v.clone()
        } else if good_first(w) {
            w.clone()
        } else {
            v.add(w)
        }),
        _ => None,
    };
    SegmentSolution {
        geometry: sys.geometry,
        nullspace_dim: null.len(),
        nontrivial: witness.is_some(),
        witness: witness.map(|v| sys.config(&v)),
    }
}

pub fn solve_geometry(params: &CodeParams, geom: &SegmentGeometry) -> Result<SegmentSolution> {
    Ok(solve_system(params, &build_segment_constraints(params, geom)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct LengthEntry {
    pub length: usize,
    pub geometries: usize,
    pub max_nullspace_dim: usize,
    pub nontrivial_geometries: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub geometry: SegmentGeometry,
    pub config: PauliConfig,
}

#[derive(Clone, Debug, Serialize)]
pub struct SegmentReport {
    pub width: usize,
    pub lengths: Vec<LengthEntry>,
    pub max_nontrivial_length: Option<usize>,
    #[serde(serialize_with = "ratio_string")]
    pub aspect_ratio: Option<Ratio<i64>>,
    pub witness: Option<Witness>,
}

fn ratio_string<S: Serializer>(r: &Option<Ratio<i64>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    r.map(|r| r.to_string()).serialize(s)
}

impl SegmentReport {
    fn from_solutions(width: usize, solutions: Vec<SegmentSolution>) -> Self {
        let mut lengths: Vec<LengthEntry> = Vec::new();
        for sol in &solutions {
            let l = sol.geometry.length;
            if lengths.last().map(|e| e.length) != Some(l) {
                lengths.push(LengthEntry { length: l, geometries: 0, max_nullspace_dim: 0, nontrivial_geometries: 0 });
            }
            let e = lengths.last_mut().unwrap();
            e.geometries += 1;
            e.max_nullspace_dim = e.max_nullspace_dim.max(sol.nullspace_dim);
            e.nontrivial_geometries += sol.nontrivial as usize;
        }
        let best = solutions.into_iter().filter(|s| s.nontrivial).fold(None::<SegmentSolution>, |acc, s| match acc {
            Some(a) if a.geometry.length >= s.geometry.length => Some(a),
            _ => Some(s),
        });
        let max = best.as_ref().map(|s| s.geometry.length);
        Self {
            width,
            lengths,
            max_nontrivial_length: max,
            aspect_ratio: max.map(|l| Ratio::new(l as i64, width as i64)),
            witness: best.map(|s| Witness { geometry: s.geometry, config: s.witness.expect("nontrivial") }),
        }
    }
}

/// One geometry as a single-entry report.
pub fn solve_segment(params: &CodeParams, geom: &SegmentGeometry) -> Result<SegmentReport> {
    let sol = solve_geometry(params, geom)?;
    Ok(SegmentReport::from_solutions(geom.width, vec![sol]))
}

/// Every geometry scanned by [`max_nontrivial_length`], in report order.
pub fn scan_geometries(width: usize, l_max: usize, family: KindFamily) -> Vec<SegmentGeometry> {
    let mut out = Vec::new();
    for length in 2..=l_max {
        for orientation in PlaneOrientation::all() {
            for kind in family.variants(width) {
                out.push(SegmentGeometry { kind, width, length, orientation });
            }
        }
    }
    out
}

/// Longest nontrivial segment of the given width over all orientations and
/// cross-sections of one family, scanning lengths `2..=l_max`.
pub fn max_nontrivial_length(
    params: &CodeParams,
    width: usize,
    l_max: usize,
    family: KindFamily,
) -> Result<SegmentReport> {
    let geoms = scan_geometries(width, l_max, family);
    let solutions: Vec<SegmentSolution> = geoms.par_iter().map(|g| solve_geometry(params, g)).collect::<Result<_>>()?;
    Ok(SegmentReport::from_solutions(width, solutions))
}

/// Default scan bound `2w + 4`.
pub fn default_l_max(width: usize) -> usize {
    2 * width + 4
}
