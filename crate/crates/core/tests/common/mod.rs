//! Randomized property drivers shared by the property and acceptance suites.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cubic_qupit::classify::{group_generators, is_deformable};
use cubic_qupit::code::{commutation_exponent, CodeParams, CubeGenerator, Parity, RawTuple, Site, SympPair};
use cubic_qupit::conditions::{base_matrix, minimal_string_det, rel_transition, theorem1_report, TransitionMatrix};
use cubic_qupit::fp::{
    characteristic_polynomial, krylov_min_poly, matrix_min_poly, FpMatrix, FpPolynomial, FpVector, PrimeModulus,
};
use cubic_qupit::oracle::{solve_geometry, KindFamily, PlaneOrientation, SegmentGeometry};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CASES: usize = 1000;

#[derive(Debug, Default)]
pub struct PropertyRun {
    pub cases: usize,
    pub failures: Vec<String>,
    pub detail: String,
}

impl PropertyRun {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn modulus(p: u32) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

pub fn random_matrix(rng: &mut impl Rng, m: PrimeModulus, rows: usize, cols: usize) -> FpMatrix {
    let p = m.get() as i64;
    // sparse entries make singular matrices common enough to exercise both branches
    let density = rng.gen_range(0.3..1.0);
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| if rng.gen_bool(density) { rng.gen_range(0..p) } else { 0 }).collect())
        .collect();
    FpMatrix::from_rows(m, &data).unwrap()
}

pub fn random_vector(rng: &mut impl Rng, m: PrimeModulus, len: usize) -> FpVector {
    let p = m.get() as i64;
    FpVector::from_i64(m, &(0..len).map(|_| rng.gen_range(0..p)).collect::<Vec<_>>())
}

pub fn random_pair(rng: &mut impl Rng, m: PrimeModulus) -> SympPair {
    let p = m.get() as i64;
    loop {
        let pair = SympPair::new(m, rng.gen_range(0..p), rng.gen_range(0..p));
        if !pair.is_zero() {
            return pair;
        }
    }
}

fn is_zero_poly_at(poly: &FpPolynomial, t: &FpMatrix) -> bool {
    poly.eval_matrix(t).unwrap().is_zero()
}

/// Krylov polynomial divides the minimal polynomial, which divides the
/// characteristic polynomial; each annihilates what it should.
pub fn divisibility_chain(cases: usize, seed: u64) -> PropertyRun {
    let mut run = PropertyRun::default();
    let mut rng = rng(seed);
    for case in 0..cases {
        let m = modulus(*[2, 3, 5, 7].choose(&mut rng).unwrap());
        let n = rng.gen_range(1..=6);
        let t = random_matrix(&mut rng, m, n, n);
        let v = random_vector(&mut rng, m, n);
        let krylov = krylov_min_poly(&t, &v).unwrap();
        let min = matrix_min_poly(&t).unwrap();
        let chr = characteristic_polynomial(&t).unwrap();
        run.cases += 1;
        run.check(krylov.divides(&min), || format!("case {case}: krylov {krylov} does not divide min {min}"));
        run.check(min.divides(&chr), || format!("case {case}: min {min} does not divide char {chr}"));
        run.check(krylov.apply(&t, &v).unwrap().is_zero(), || format!("case {case}: krylov polynomial misses v"));
        run.check(is_zero_poly_at(&min, &t), || format!("case {case}: min polynomial does not annihilate"));
        run.check(is_zero_poly_at(&chr, &t), || format!("case {case}: characteristic polynomial does not annihilate"));
        run.check(chr.degree() == Some(n) && chr.is_monic(), || format!("case {case}: char degree {:?}", chr.degree()));
        // minimality: no proper monic divisor of min annihilates t
        let d = min.degree().unwrap();
        if d > 0 {
            let mut lower = t.pow(0).unwrap();
            let mut powers = vec![lower.clone()];
            for _ in 1..d {
                lower = lower.mul(&t).unwrap();
                powers.push(lower.clone());
            }
            let stacked: Vec<FpVector> = powers
                .iter()
                .map(|p| FpVector::from_i64(m, &p.to_rows().concat().iter().map(|&x| x as i64).collect::<Vec<_>>()))
                .collect();
            let rank = FpMatrix::from_row_vectors(m, n * n, &stacked).unwrap().rank();
            run.check(rank == d, || format!("case {case}: I..T^{} dependent, min degree {d}", d - 1));
        }
    }
    run
}

fn symplectic(a: SympPair, b: SympPair) -> u32 {
    a.symplectic(b).unwrap().value()
}

/// Composition and inversion of relative transition matrices, and the base determinant.
pub fn transition_identities(cases: usize, seed: u64) -> PropertyRun {
    let mut run = PropertyRun::default();
    let mut rng = rng(seed);
    let mut case = 0;
    while run.cases < cases {
        case += 1;
        let m = modulus(*[3, 5, 7].choose(&mut rng).unwrap());
        let [a, b, c, d, e, f] = [(); 6].map(|_| random_pair(&mut rng, m));
        let (x, y, z) = ((a, b), (c, d), (e, f));
        let base_x = base_matrix(a, b);
        run.check(base_x.det() == symplectic(b, a), || format!("case {case}: det base {} vs <b,a>", base_x.det()));
        let (Ok(xy), Ok(yz), Ok(xz), Ok(yx)) =
            (rel_transition(x, y), rel_transition(y, z), rel_transition(x, z), rel_transition(y, x))
        else {
            continue;
        };
        run.cases += 1;
        let composed = yz.mul(&xy).unwrap();
        run.check(composed.matrix() == xz.matrix(), || format!("case {case}: rel(y,z) rel(x,y) != rel(x,z)"));
        let inv = xy.inverse().unwrap();
        run.check(inv.matrix() == yx.matrix(), || format!("case {case}: rel(x,y)^-1 != rel(y,x)"));
        // det rel = <num> / <den>
        let ratio = m.elem(symplectic(b, a) as i64) * m.elem(symplectic(d, c) as i64).inv().unwrap();
        run.check(xy.det() == ratio.value(), || {
            format!("case {case}: det rel {} vs ratio {}", xy.det(), ratio.value())
        });
        // det(T - T^-1) recomputed entrywise
        let t = xy.matrix();
        let ti = t.inverse().unwrap();
        let diff = t.sub(&ti).unwrap();
        let direct = m.elem(
            diff.get(0, 0).value() as i64 * diff.get(1, 1).value() as i64
                - diff.get(0, 1).value() as i64 * diff.get(1, 0).value() as i64,
        );
        let via = minimal_string_det(&TransitionMatrix::new(t.clone()).unwrap()).unwrap();
        run.check(direct.value() == via, || format!("case {case}: det(T - T^-1) {via} vs {}", direct.value()));
    }
    run
}

/// Uniform deformable tuple by rejection.
pub fn random_deformable(rng: &mut impl Rng, m: PrimeModulus) -> RawTuple {
    let p = m.get();
    loop {
        let t: RawTuple = [(); 4].map(|_| [rng.gen_range(0..p), rng.gen_range(0..p)]);
        if is_deformable(m, t) {
            return t;
        }
    }
}

fn random_code(rng: &mut impl Rng, primes: &[u32]) -> CodeParams {
    let m = modulus(*primes.choose(rng).unwrap());
    let t = random_deformable(rng, m);
    let parity = *Parity::both().choose(rng).unwrap();
    CodeParams::from_raw(m, t, parity).unwrap()
}

fn random_geometry(rng: &mut impl Rng) -> SegmentGeometry {
    let width = rng.gen_range(1..=3);
    let length = rng.gen_range(2..=2 * width + 3);
    let family = if width > 1 && rng.gen_bool(0.5) { KindFamily::Cornered } else { KindFamily::Flat };
    let kind = *family.variants(width).choose(rng).unwrap();
    let orientation = *PlaneOrientation::all().choose(rng).unwrap();
    SegmentGeometry::new(kind, width, length, orientation).unwrap()
}

/// Every cube whose footprint meets the support and avoids both anchors.
fn definition_window(geom: &SegmentGeometry) -> Vec<Site> {
    let support: BTreeSet<Site> = geom.support().into_iter().collect();
    let (first, last) = geom.anchors();
    let anchors: BTreeSet<Site> = first.into_iter().chain(last).collect();
    let mut out = BTreeSet::new();
    for &s in &support {
        for dx in -1..=0 {
            for dy in -1..=0 {
                for dz in -1..=0 {
                    let o = s.offset([dx, dy, dz]);
                    let touches_anchor =
                        (0..8).any(|i| anchors.contains(&o.offset([i & 1, (i >> 1) & 1, (i >> 2) & 1])));
                    if !touches_anchor {
                        out.insert(o);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Witnesses returned by the oracle commute with every window cube, avoid the
/// anchors, and reach both end columns in a way no in-support generator can clear.
pub fn witness_reverification(cases: usize, seed: u64) -> PropertyRun {
    let mut run = PropertyRun::default();
    let mut rng = rng(seed);
    let mut witnesses = 0;
    for case in 0..cases {
        let params = random_code(&mut rng, &[3, 5, 7]);
        let geom = random_geometry(&mut rng);
        let sol = solve_geometry(&params, &geom).unwrap();
        run.cases += 1;
        run.check(sol.nontrivial == sol.witness.is_some(), || format!("case {case}: verdict without witness"));
        let Some(wit) = sol.witness else { continue };
        witnesses += 1;
        let g = CubeGenerator::new(&params);
        let support: BTreeSet<Site> = geom.support().into_iter().collect();
        run.check(wit.sites().all(|s| support.contains(&s)), || format!("case {case}: witness leaves the support"));
        for o in definition_window(&geom) {
            let e = commutation_exponent(&g.at(o), &wit).unwrap();
            run.check(e.is_zero(), || {
                format!("case {case} {params} {geom:?}: cube at {o:?} has exponent {}", e.value())
            });
        }
        let cross = geom.cross_section();
        let inside: Vec<Site> = support
            .iter()
            .flat_map(|&s| (0..8).map(move |i| s.offset([-(i & 1), -((i >> 1) & 1), -((i >> 2) & 1)])))
            .filter(|o| g.vertices().all(|(d, _)| support.contains(&o.offset(d))))
            .collect();
        for t in [0, geom.length as i64 - 1] {
            let column: Vec<Site> = cross.iter().map(|&(u, v)| geom.orientation.site(t, u, v)).collect();
            let vec_of = |c: &cubic_qupit::code::PauliConfig| {
                let data: Vec<i64> = column.iter().flat_map(|&s| c.get(s).raw()).map(i64::from).collect();
                FpVector::from_i64(params.modulus(), &data)
            };
            let base: Vec<FpVector> = inside.iter().map(|&o| vec_of(&g.at(o))).collect();
            let base_rank = if base.is_empty() {
                0
            } else {
                FpMatrix::from_row_vectors(params.modulus(), 2 * column.len(), &base).unwrap().rank()
            };
            let mut with = base.clone();
            with.push(vec_of(&wit));
            let rank = FpMatrix::from_row_vectors(params.modulus(), 2 * column.len(), &with).unwrap().rank();
            run.check(rank > base_rank, || format!("case {case}: end column {t} can be cleared"));
        }
    }
    run.check(witnesses >= cases / 10, || format!("only {witnesses} witnesses among {cases} cases"));
    run.detail = format!("{witnesses} witnesses re-verified");
    run
}

/// Condition verdicts agree along random words in the equivalence group.
pub fn orbit_invariance(cases: usize, seed: u64) -> PropertyRun {
    let mut run = PropertyRun::default();
    let mut rng = rng(seed);
    for case in 0..cases {
        let p = *[3, 5, 7].choose(&mut rng).unwrap();
        let m = modulus(p);
        let t = random_deformable(&mut rng, m);
        let gens: Vec<_> = group_generators(m).into_iter().filter(|g| !g.is_parity_flip()).collect();
        let mut image = t;
        for _ in 0..rng.gen_range(1..=12) {
            image = gens.choose(&mut rng).unwrap().apply(image, m);
        }
        let parity = *Parity::both().choose(&mut rng).unwrap();
        let a = theorem1_report(&CodeParams::from_raw(m, t, parity).unwrap());
        let b = theorem1_report(&CodeParams::from_raw(m, image, parity).unwrap());
        let sorted = |mut f: [bool; 3]| {
            f.sort();
            f
        };
        run.cases += 1;
        run.check(
            (a.deformability, a.first_two(), a.overall, sorted(a.minimal_string))
                == (b.deformability, b.first_two(), b.overall, sorted(b.minimal_string)),
            || format!("case {case}: p={p} {t:?} and {image:?} disagree"),
        );
    }
    run
}
