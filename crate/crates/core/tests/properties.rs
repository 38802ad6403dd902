mod common;

use common::{modulus, random_matrix, random_pair, random_vector, rng, CASES};
use cubic_qupit::algebra::{commutator_exponent, pauli_mul, Cyclotomic, PhasedPauli};
use cubic_qupit::code::{commutation_exponent, PauliConfig, Site, SympPair};
use cubic_qupit::fp::{FpMatrix, PrimeModulus};
use num_rational::Ratio;
use proptest::prelude::*;
use rand::Rng;

fn report(name: &str, run: &common::PropertyRun) {
    assert!(run.passed(), "{name}: {} of {} cases failed: {:#?}", run.failures.len(), run.cases, run.failures);
    assert_eq!(run.cases, CASES, "{name}");
}

#[test]
fn polynomial_divisibility_chain() {
    report("divisibility", &common::divisibility_chain(CASES, 1));
}

#[test]
fn transition_matrix_identities() {
    report("transition", &common::transition_identities(CASES, 2));
}

#[test]
fn oracle_witnesses_reverify() {
    let run = common::witness_reverification(CASES, 3);
    eprintln!("{}", run.detail);
    report("witness", &run);
}

#[test]
fn verdicts_are_orbit_invariant() {
    report("orbit", &common::orbit_invariance(CASES, 4));
}

#[test]
fn seeded_linear_algebra() {
    let mut rng = rng(5);
    for _ in 0..CASES {
        let m = modulus([2, 3, 5, 7, 11][rng.gen_range(0..5)]);
        let (r, c) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
        let a = random_matrix(&mut rng, m, r, c);
        let rank = a.rank();
        assert_eq!(rank, a.transpose().rank());
        let null = a.nullspace();
        assert_eq!(null.len(), c - rank);
        for v in &null {
            assert!(a.mul_vec(v).unwrap().is_zero());
        }
        if r == c {
            let det = a.det().unwrap();
            assert_eq!(det.is_zero(), !null.is_empty());
            match a.inverse() {
                Ok(inv) => {
                    assert!(!det.is_zero());
                    assert_eq!(a.mul(&inv).unwrap(), FpMatrix::identity(m, r));
                    assert_eq!(inv.mul(&a).unwrap(), FpMatrix::identity(m, r));
                }
                Err(_) => assert!(det.is_zero()),
            }
            let x = random_vector(&mut rng, m, c);
            let b = a.mul_vec(&x).unwrap();
            let y = a.solve(&b).expect("consistent system");
            assert_eq!(a.mul_vec(&y).unwrap(), b);
        }
    }
}

#[test]
fn seeded_commutation_agreement() {
    let mut rng = rng(6);
    for _ in 0..CASES {
        let m = modulus([3, 5, 7][rng.gen_range(0..3)]);
        let sites: Vec<Site> = (0..rng.gen_range(1..=5)).map(|i| Site::new(i, 0, 0)).collect();
        let mut a = PauliConfig::new(m);
        let mut b = PauliConfig::new(m);
        for &s in &sites {
            a.set(s, random_pair(&mut rng, m));
            b.set(s, random_pair(&mut rng, m));
        }
        let u = PhasedPauli::from_config(&a, sites.clone()).unwrap();
        let v = PhasedPauli::from_config(&b, sites).unwrap();
        let exact = commutator_exponent(&u, &v).unwrap();
        assert_eq!(exact, commutation_exponent(&a, &b).unwrap());
        assert_eq!(exact, -commutator_exponent(&v, &u).unwrap());
        let uv = pauli_mul(&u, &v).unwrap();
        let vu = pauli_mul(&v, &u).unwrap();
        assert_eq!(uv.phase(), m.reduce(vu.phase() as i64 + exact.value() as i64));
    }
}

fn prime() -> impl Strategy<Value = PrimeModulus> {
    prop::sample::select(vec![3u32, 5, 7, 11]).prop_map(|p| PrimeModulus::new(p).unwrap())
}

fn pair(m: PrimeModulus) -> impl Strategy<Value = SympPair> {
    let p = m.get() as i64;
    (0..p, 0..p).prop_map(move |(x, z)| SympPair::new(m, x, z))
}

fn pauli(m: PrimeModulus, n: usize) -> impl Strategy<Value = PhasedPauli> {
    let p = m.get() as i64;
    (prop::collection::vec(0..p, n), prop::collection::vec(0..p, n), 0..p).prop_map(move |(x, z, c)| {
        let sites = (0..n as i64).map(|i| Site::new(i, 0, 0)).collect();
        PhasedPauli::new(m, sites, &x, &z, c).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn symplectic_form_is_bilinear_and_alternating(
        (a, b, c, k) in prime().prop_flat_map(|m| (pair(m), pair(m), pair(m), 0..m.get() as i64))
    ) {
        prop_assert!(a.symplectic(a).unwrap().is_zero());
        prop_assert_eq!(a.symplectic(b).unwrap(), -b.symplectic(a).unwrap());
        prop_assert_eq!((a + b).symplectic(c).unwrap(), a.symplectic(c).unwrap() + b.symplectic(c).unwrap());
        prop_assert_eq!(a.scale(k).symplectic(c).unwrap(), a.symplectic(c).unwrap() * a.modulus().elem(k));
    }

    #[test]
    fn pauli_product_is_associative(
        (u, v, w) in (prime(), 1usize..4).prop_flat_map(|(m, n)| (pauli(m, n), pauli(m, n), pauli(m, n)))
    ) {
        let left = pauli_mul(&pauli_mul(&u, &v).unwrap(), &w).unwrap();
        let right = pauli_mul(&u, &pauli_mul(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(pauli_mul(&u, &u.inverse()).unwrap().is_identity());
    }

    #[test]
    fn cyclotomic_reduction_is_canonical(
        p in prop::sample::select(vec![3u32, 5, 7]),
        terms in prop::collection::vec((0i64..20, -6i64..6, 1i64..4), 1..8),
        shift in 0i64..7,
    ) {
        // the same element built in two orders, and once padded with a full sum of roots
        let build = |order: &mut dyn Iterator<Item = &(i64, i64, i64)>| {
            order.fold(Cyclotomic::zero(p), |acc, &(k, n, d)| {
                acc.add(&Cyclotomic::omega_pow(p, k).scale(Ratio::new(n, d)))
            })
        };
        let forward = build(&mut terms.iter());
        let backward = build(&mut terms.iter().rev());
        prop_assert_eq!(&forward, &backward);
        let padding = (0..p as i64).fold(Cyclotomic::zero(p), |acc, k| acc.add(&Cyclotomic::omega_pow(p, k + shift)));
        prop_assert_eq!(&forward.add(&padding), &forward);
        prop_assert_eq!(forward.rotate(shift).rotate(p as i64 - shift), forward);
    }
}
