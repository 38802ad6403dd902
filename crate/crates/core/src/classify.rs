//! Enumeration of parameter tuples and their orbits under relabelling,
//! symplectic change of basis and scaling.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{CodeParams, Parity, RawTuple, SympPair};
use crate::conditions::{check_deformability, theorem1_report};
use crate::error::{Error, Result};
use crate::fp::PrimeModulus;
use crate::oracle::{default_l_max, max_nontrivial_length, KindFamily};

/// Default orbit size cap.
pub const DEFAULT_ORBIT_CAP: usize = 1 << 20;

fn nonzero_pairs(m: PrimeModulus) -> Vec<[u32; 2]> {
    let p = m.get();
    (0..p).flat_map(|x| (0..p).map(move |z| [x, z])).filter(|&v| v != [0, 0]).collect()
}

fn proportional(m: PrimeModulus, a: [u32; 2], b: [u32; 2]) -> bool {
    m.sub(m.mul(a[0], b[1]), m.mul(a[1], b[0])) == 0
}

/// All ordered 4-tuples of nonzero, pairwise non-proportional pairs, in lexicographic order.
pub fn enumerate_deformable(m: PrimeModulus) -> Vec<RawTuple> {
    let pairs = nonzero_pairs(m);
    let mut out = Vec::new();
    let mut stack: Vec<[u32; 2]> = Vec::with_capacity(4);
    fn rec(m: PrimeModulus, pairs: &[[u32; 2]], stack: &mut Vec<[u32; 2]>, out: &mut Vec<RawTuple>) {
        if stack.len() == 4 {
            out.push([stack[0], stack[1], stack[2], stack[3]]);
            return;
        }
        for &p in pairs {
            if stack.iter().all(|&q| !proportional(m, p, q)) {
                stack.push(p);
                rec(m, pairs, stack, out);
                stack.pop();
            }
        }
    }
    rec(m, &pairs, &mut stack, &mut out);
    out
}

/// One generator of the equivalence group, acting on raw tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TupleMap {
    /// Swap positions `i` and `i + 1`.
    Transposition(usize),
    /// Left multiplication of every pair by a 2x2 matrix.
    Linear([[i64; 2]; 2]),
    Scalar(u32),
    /// `A -> -A` on all four pairs; exchanges the two parities in the bulk.
    ParityFlip,
}

impl TupleMap {
    pub fn apply(self, t: RawTuple, m: PrimeModulus) -> RawTuple {
        let map_pairs = |f: &dyn Fn([u32; 2]) -> [u32; 2]| t.map(f);
        match self {
            TupleMap::Transposition(i) => {
                let mut out = t;
                out.swap(i, i + 1);
                out
            }
            TupleMap::Linear(mat) => map_pairs(&|v| {
                let [x, z] = v.map(i64::from);
                [m.reduce(mat[0][0] * x + mat[0][1] * z), m.reduce(mat[1][0] * x + mat[1][1] * z)]
            }),
            TupleMap::Scalar(k) => map_pairs(&|v| v.map(|c| m.mul(c, k))),
            TupleMap::ParityFlip => map_pairs(&|v| v.map(|c| m.neg(c))),
        }
    }

    pub fn is_parity_flip(self) -> bool {
        matches!(self, TupleMap::ParityFlip)
    }
}

/// Adjacent transpositions, the two standard SL(2, p) generators, a primitive-root
/// scaling and the parity flip.
pub fn group_generators(m: PrimeModulus) -> Vec<TupleMap> {
    vec![
        TupleMap::Transposition(0),
        TupleMap::Transposition(1),
        TupleMap::Transposition(2),
        TupleMap::Linear([[1, 1], [0, 1]]),
        TupleMap::Linear([[0, -1], [1, 0]]),
        TupleMap::Scalar(m.primitive_root()),
        TupleMap::ParityFlip,
    ]
}

/// Breadth-first closure of `t`.
pub fn orbit(t: RawTuple, m: PrimeModulus, include_flip: bool, cap: usize) -> Result<Vec<RawTuple>> {
    let gens: Vec<TupleMap> = group_generators(m).into_iter().filter(|g| include_flip || !g.is_parity_flip()).collect();
    let mut seen = HashSet::from([t]);
    let mut queue = VecDeque::from([t]);
    let mut out = vec![t];
    while let Some(cur) = queue.pop_front() {
        for g in &gens {
            let next = g.apply(cur, m);
            if seen.insert(next) {
                if seen.len() > cap {
                    return Err(Error::OrbitOverflow { cap });
                }
                out.push(next);
                queue.push_back(next);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Lexicographic minimum of the orbit, comparing `(a1, a2, b1, ..., d2)`.
pub fn orbit_canonical(t: RawTuple, m: PrimeModulus, include_flip: bool, cap: usize) -> Result<RawTuple> {
    Ok(orbit(t, m, include_flip, cap)?[0])
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSummary {
    pub width: usize,
    pub l_max: usize,
    pub max_flat: Option<usize>,
    pub max_cornered: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TupleOrbit {
    pub representative: RawTuple,
    pub size: usize,
    pub deformability: bool,
    pub minimal_string: [bool; 3],
    pub pairing_squares: [bool; 3],
    pub overall: bool,
    pub oracle: Vec<OracleSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub modulus: u32,
    pub parity: Parity,
    pub tuple_count: usize,
    pub orbits: Vec<TupleOrbit>,
    pub notes: Vec<String>,
}

/// Partition every deformable tuple into orbits. Orbits are listed by representative.
pub fn orbit_partition(m: PrimeModulus, include_flip: bool, cap: usize) -> Result<Vec<Vec<RawTuple>>> {
    let tuples = enumerate_deformable(m);
    let mut seen: HashSet<RawTuple> = HashSet::with_capacity(tuples.len());
    let mut orbits = Vec::new();
    for &t in &tuples {
        if seen.contains(&t) {
            continue;
        }
        let o = orbit(t, m, include_flip, cap)?;
        seen.extend(o.iter().copied());
        orbits.push(o);
    }
    Ok(orbits)
}

pub fn oracle_summary(params: &CodeParams, wmax: usize) -> Result<Vec<OracleSummary>> {
    (1..=wmax)
        .map(|w| {
            let l_max = default_l_max(w);
            let flat = max_nontrivial_length(params, w, l_max, KindFamily::Flat)?;
            let corner = max_nontrivial_length(params, w, l_max, KindFamily::Cornered)?;
            Ok(OracleSummary {
                width: w,
                l_max,
                max_flat: flat.max_nontrivial_length,
                max_cornered: corner.max_nontrivial_length,
            })
        })
        .collect()
}

/// Canonical form of every orbit of deformable tuples, sorted.
pub fn canonical_representatives(m: PrimeModulus, cap: usize) -> Result<Vec<RawTuple>> {
    Ok(orbit_partition(m, false, cap)?.into_iter().map(|o| o[0]).collect())
}

/// Orbits of deformable tuples for one parity, each with its condition verdicts
/// and an oracle summary up to width `oracle_wmax`.
pub fn classify_orbits_with(m: PrimeModulus, parity: Parity, oracle_wmax: usize, cap: usize) -> Result<OrbitReport> {
    classify_representatives(m, parity, &canonical_representatives(m, cap)?, oracle_wmax, cap)
}

/// Same as [`classify_orbits_with`] starting from known canonical forms, e.g. read from a cache file.
pub fn classify_representatives(
    m: PrimeModulus,
    parity: Parity,
    representatives: &[RawTuple],
    oracle_wmax: usize,
    cap: usize,
) -> Result<OrbitReport> {
    let mut reps = representatives.to_vec();
    reps.sort_unstable();
    reps.dedup();
    let orbits = reps
        .par_iter()
        .map(|&rep| {
            if !is_deformable(m, rep) {
                return Err(Error::InvalidCode(format!("{rep:?} is not deformable")));
            }
            let o = orbit(rep, m, false, cap)?;
            if o[0] != rep {
                return Err(Error::InvalidCode(format!("{rep:?} is not the canonical form of its orbit")));
            }
            let params = CodeParams::from_raw(m, rep, parity)?;
            let r = theorem1_report(&params);
            Ok(TupleOrbit {
                representative: rep,
                size: o.len(),
                deformability: r.deformability,
                minimal_string: r.minimal_string,
                pairing_squares: r.pairing_squares,
                overall: r.overall,
                oracle: oracle_summary(&params, oracle_wmax)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let tuple_count = orbits.iter().map(|o| o.size).sum();
    let with_flip: HashSet<RawTuple> = reps.iter().map(|&r| orbit_canonical(r, m, true, cap)).collect::<Result<_>>()?;
    let notes = if with_flip.len() == orbits.len() {
        vec!["adding the parity flip merges no orbits; each orbit carries both parities".into()]
    } else {
        vec![format!("adding the parity flip merges {} orbits into {}", orbits.len(), with_flip.len())]
    };
    Ok(OrbitReport { modulus: m.get(), parity, tuple_count, orbits, notes })
}

pub fn classify_orbits(m: PrimeModulus, parity: Parity) -> Result<OrbitReport> {
    classify_orbits_with(m, parity, 0, DEFAULT_ORBIT_CAP)
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    pub parity: Parity,
    pub representative: RawTuple,
    pub oracle: Vec<OracleSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem1Scan {
    pub modulus: u32,
    pub deformable_tuples: usize,
    pub orbits: usize,
    /// Representatives passing all three literal conditions.
    pub all_conditions: Vec<ScanEntry>,
    /// Representatives passing the first two conditions whose oracle lengths stay within `2w`.
    pub bounded_strings: Vec<ScanEntry>,
}

/// Scan every orbit at both parities, running the oracle up to width `wmax`.
pub fn scan_theorem1(m: PrimeModulus, wmax: usize) -> Result<Theorem1Scan> {
    let partition = orbit_partition(m, false, DEFAULT_ORBIT_CAP)?;
    let deformable_tuples = partition.iter().map(Vec::len).sum();
    let jobs: Vec<(Parity, RawTuple)> =
        Parity::both().into_iter().flat_map(|par| partition.iter().map(move |o| (par, o[0]))).collect();
    let results = jobs
        .par_iter()
        .map(|&(parity, rep)| {
            let params = CodeParams::from_raw(m, rep, parity)?;
            let r = theorem1_report(&params);
            let oracle = if r.first_two() { oracle_summary(&params, wmax)? } else { Vec::new() };
            Ok((parity, rep, r.overall, r.first_two(), oracle))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut all_conditions = Vec::new();
    let mut bounded_strings = Vec::new();
    for (parity, representative, overall, first_two, oracle) in results {
        if overall {
            all_conditions.push(ScanEntry { parity, representative, oracle: oracle.clone() });
        }
        let bounded = oracle.iter().all(|s| {
            let lim = 2 * s.width;
            s.max_flat.is_none_or(|l| l <= lim) && s.max_cornered.is_none_or(|l| l <= lim)
        });
        if first_two && bounded {
            bounded_strings.push(ScanEntry { parity, representative, oracle });
        }
    }
    let key = |e: &ScanEntry| (e.representative, e.parity);
    all_conditions.sort_by_key(key);
    bounded_strings.sort_by_key(key);
    Ok(Theorem1Scan { modulus: m.get(), deformable_tuples, orbits: partition.len(), all_conditions, bounded_strings })
}

/// One tuple per line, `a1 a2 b1 b2 g1 g2 d1 d2`.
pub fn format_cache(tuples: &[RawTuple]) -> String {
    let mut s = String::new();
    for t in tuples {
        let flat: Vec<String> = t.iter().flatten().map(u32::to_string).collect();
        let _ = writeln!(s, "{}", flat.join(" "));
    }
    s
}

pub fn parse_cache(text: &str) -> Result<Vec<RawTuple>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let v: Vec<u32> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|e| Error::Parse(format!("cache line {line:?}: {e}"))))
                .collect::<Result<_>>()?;
            if v.len() != 8 {
                return Err(Error::Parse(format!("cache line {line:?}: expected 8 integers")));
            }
            Ok([[v[0], v[1]], [v[2], v[3]], [v[4], v[5]], [v[6], v[7]]])
        })
        .collect()
}

/// Whether the raw tuple is deformable.
pub fn is_deformable(m: PrimeModulus, t: RawTuple) -> bool {
    let pairs = t.map(|[x, z]| SympPair::new(m, x as i64, z as i64));
    match CodeParams::new(m, pairs, Parity::Symmetric) {
        Ok(p) => check_deformability(&p),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn m(p: u32) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn counts() {
        assert!(enumerate_deformable(m(2)).is_empty());
        assert_eq!(enumerate_deformable(m(3)).len(), 8 * 6 * 4 * 2);
        assert_eq!(enumerate_deformable(m(5)).len(), 24 * 20 * 16 * 12);
    }

    #[test]
    fn generator_examples() {
        let d3 = [[1, 0], [0, 1], [1, 1], [1, 2]];
        assert_eq!(TupleMap::Transposition(0).apply(d3, m(3)), [[0, 1], [1, 0], [1, 1], [1, 2]]);
        let d5 = [[1, 0], [0, 1], [1, 1], [3, 2]];
        assert_eq!(TupleMap::Scalar(2).apply(d5, m(5)), [[2, 0], [0, 2], [2, 2], [1, 4]]);
        let shear = TupleMap::Linear([[1, 1], [0, 1]]).apply([[0, 1], [1, 0], [1, 0], [1, 0]], m(5));
        assert_eq!(shear[0], [1, 1]);
        assert_eq!(m(5).primitive_root(), 2);
    }

    #[test]
    fn parity_flip_is_an_involution() {
        for t in enumerate_deformable(m(3)) {
            let f = TupleMap::ParityFlip;
            assert_eq!(f.apply(f.apply(t, m(3)), m(3)), t);
        }
    }

    #[test]
    fn generators_preserve_deformability() {
        for t in enumerate_deformable(m(3)) {
            for g in group_generators(m(3)) {
                assert!(is_deformable(m(3), g.apply(t, m(3))));
            }
        }
    }

    #[test]
    fn p3_has_two_orbits() {
        let parts = orbit_partition(m(3), false, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts.iter().map(Vec::len).sum::<usize>(), 384);
        let canon = |t| orbit_canonical(t, m(3), false, DEFAULT_ORBIT_CAP).unwrap();
        let a = canon([[1, 0], [0, 1], [1, 1], [1, 2]]);
        let b = canon([[1, 0], [0, 1], [1, 1], [2, 1]]);
        assert_ne!(a, b);
        let reps: Vec<RawTuple> = parts.iter().map(|o| o[0]).collect();
        assert!(reps.contains(&a) && reps.contains(&b));
    }

    #[test]
    fn canonical_is_invariant_and_idempotent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for p in [3, 5] {
            let q = m(p);
            let tuples = enumerate_deformable(q);
            let gens = group_generators(q);
            for _ in 0..100 {
                let t = tuples[rng.gen_range(0..tuples.len())];
                let mut g = t;
                for _ in 0..rng.gen_range(1..12) {
                    g = gens[rng.gen_range(0..gens.len() - 1)].apply(g, q);
                }
                let c = orbit_canonical(t, q, false, DEFAULT_ORBIT_CAP).unwrap();
                assert_eq!(orbit_canonical(g, q, false, DEFAULT_ORBIT_CAP).unwrap(), c);
                assert_eq!(orbit_canonical(c, q, false, DEFAULT_ORBIT_CAP).unwrap(), c);
            }
        }
    }

    #[test]
    fn orbit_cap_is_enforced() {
        let err = orbit([[1, 0], [0, 1], [1, 1], [1, 2]], m(3), false, 10).unwrap_err();
        assert_eq!(err, Error::OrbitOverflow { cap: 10 });
    }

    #[test]
    fn verdicts_are_constant_on_p3_orbits() {
        for parity in Parity::both() {
            for o in orbit_partition(m(3), false, DEFAULT_ORBIT_CAP).unwrap() {
                let verdicts: HashSet<(bool, bool)> = o
                    .iter()
                    .map(|&t| {
                        let r = theorem1_report(&CodeParams::from_raw(m(3), t, parity).unwrap());
                        (r.overall, r.first_two())
                    })
                    .collect();
                assert_eq!(verdicts.len(), 1);
            }
        }
    }

    #[test]
    fn orbit_sizes_divide_group_order() {
        // |S4| * |{a M}| with a M ranging over scalar multiples of SL(2, 5)
        let group = 24 * 120 * 2;
        let parts = orbit_partition(m(5), false, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(parts.iter().map(Vec::len).sum::<usize>(), 92160);
        assert!(parts.iter().all(|o| group % o.len() == 0));
    }

    #[test]
    fn cached_representatives_reproduce_report() {
        let m = PrimeModulus::new(3).unwrap();
        let reps = parse_cache(&format_cache(&canonical_representatives(m, DEFAULT_ORBIT_CAP).unwrap())).unwrap();
        let from_cache = classify_representatives(m, Parity::Antisymmetric, &reps, 1, DEFAULT_ORBIT_CAP).unwrap();
        let direct = classify_orbits_with(m, Parity::Antisymmetric, 1, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(serde_json::to_string(&from_cache).unwrap(), serde_json::to_string(&direct).unwrap());
        let mut bad = reps[0];
        bad.swap(0, 1);
        assert!(matches!(
            classify_representatives(m, Parity::Symmetric, &[bad], 0, DEFAULT_ORBIT_CAP),
            Err(Error::InvalidCode(_))
        ));
    }

    #[test]
    fn cache_round_trip() {
        let t = enumerate_deformable(m(3));
        assert_eq!(parse_cache(&format_cache(&t[..5])).unwrap(), t[..5].to_vec());
        assert!(parse_cache("1 2 3").is_err());
    }

    #[test]
    fn qubit_scan_is_empty() {
        let s = scan_theorem1(m(2), 1).unwrap();
        assert_eq!((s.deformable_tuples, s.orbits), (0, 0));
        assert!(s.all_conditions.is_empty() && s.bounded_strings.is_empty());
        assert!(classify_orbits(m(2), Parity::Symmetric).unwrap().orbits.is_empty());
    }
}
