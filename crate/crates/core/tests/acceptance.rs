//! The twelve acceptance criteria, one PASS/FAIL line each.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use cubic_qupit::algebra::{verify_projector_algebra, AlgebraGuard};
use cubic_qupit::classify::{classify_orbits, enumerate_deformable, orbit_canonical, DEFAULT_ORBIT_CAP};
use cubic_qupit::cli;
use cubic_qupit::code::{reference, verify_translation_commutation, CodeParams, Parity, TorusDims};
use cubic_qupit::conditions::theorem1_report;
use cubic_qupit::logical::{encoded_qudit_count, planar_census, product_of_all_generators, TorusCode};
use cubic_qupit::oracle::{
    build_segment_constraints, canonical_reduction, default_l_max, max_nontrivial_length, solve_geometry,
    width1_criterion, KindFamily, SegmentGeometry,
};
use rand::seq::SliceRandom;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_dims() -> Vec<TorusDims> {
    let mut out = Vec::new();
    for x in 2..=5 {
        for y in 2..=5 {
            for z in 2..=5 {
                out.push(TorusDims::new(x, y, z).unwrap());
            }
        }
    }
    out
}

fn scan_p2() -> Outcome {
    let out = cli::run(["cubic-qupit", "scan", "--p", "2"]);
    ensure(out.code == 0, || format!("exit code {}: {}", out.code, out.stderr))?;
    let report: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    let n = &report["results"]["deformable_tuples"];
    ensure(*n == 0, || format!("{n} deformable tuples"))?;
    Ok("scan --p 2 reports 0 deformable tuples".into())
}

fn d3_orbits() -> Outcome {
    let m = reference::d3_first(Parity::Symmetric).modulus();
    let expected: Vec<_> = [reference::d3_first(Parity::Symmetric), reference::d3_second(Parity::Symmetric)]
        .iter()
        .map(|c| orbit_canonical(c.raw(), m, false, DEFAULT_ORBIT_CAP).unwrap())
        .collect();
    ensure(expected[0] != expected[1], || "the two parameter sets share an orbit".into())?;
    for parity in Parity::both() {
        let report = classify_orbits(m, parity).map_err(|e| e.to_string())?;
        let mut reps: Vec<_> = report.orbits.iter().map(|o| o.representative).collect();
        reps.sort();
        let mut want = expected.clone();
        want.sort();
        ensure(reps == want, || format!("parity {parity}: representatives {reps:?}"))?;
    }
    Ok("2 orbits per parity, one per reference parameter set".into())
}

fn d3_conditions() -> Outcome {
    for parity in Parity::both() {
        for params in [reference::d3_first(parity), reference::d3_second(parity)] {
            let r = theorem1_report(&params);
            ensure(r.first_two() && !r.overall, || {
                format!(
                    "{params}: deformability {}, minimal string {:?}, overall {}",
                    r.deformability, r.minimal_string, r.overall
                )
            })?;
        }
    }
    Ok("both parameter sets pass the first two conditions and fail the third at both parities".into())
}

fn d3_string_bound() -> Outcome {
    let params = reference::d3_first(Parity::Symmetric);
    let mut seen = Vec::new();
    for w in 1..=6 {
        for family in [KindFamily::Flat, KindFamily::Cornered] {
            let r = max_nontrivial_length(&params, w, default_l_max(w), family).map_err(|e| e.to_string())?;
            let l = r.max_nontrivial_length;
            ensure(l.is_none_or(|l| l <= w + 1), || format!("w={w} {family:?}: length {l:?}"))?;
            seen.push(l.unwrap_or(0));
        }
    }
    Ok(format!("max lengths (flat, cornered) per width 1..6: {seen:?}, all <= w+1"))
}

fn d5_bound() -> Outcome {
    let mut seen = Vec::new();
    for parity in Parity::both() {
        let params = reference::d5(parity);
        for w in 1..=4 {
            for family in [KindFamily::Flat, KindFamily::Cornered] {
                let r = max_nontrivial_length(&params, w, default_l_max(w), family).map_err(|e| e.to_string())?;
                let l = r.max_nontrivial_length;
                ensure(l.is_none_or(|l| l <= 2 * w), || format!("{parity} w={w} {family:?}: length {l:?}"))?;
                if parity == Parity::Symmetric {
                    seen.push(l.unwrap_or(0));
                }
            }
        }
        let r = theorem1_report(&params);
        ensure(!r.overall && !r.discrepancies.is_empty(), || "literal third condition not flagged".into())?;
    }
    Ok(format!("lengths {seen:?} within 2w; literal third condition fails and is logged as a discrepancy"))
}

fn generator_consistency() -> Outcome {
    for parity in Parity::both() {
        for params in [reference::d3_first(parity), reference::d3_second(parity), reference::d5(parity)] {
            let r = verify_translation_commutation(&params).map_err(|e| e.to_string())?;
            ensure(r.checked.len() == 26 && r.is_consistent(), || format!("{params}: {:?}", r.failures))?;
        }
    }
    Ok("all 26 offsets commute for both parities of each reference code".into())
}

fn width1_agreement() -> Outcome {
    let mut rng = common::rng(7);
    let p3 = common::modulus(3);
    let p5 = common::modulus(5);
    let mut jobs: Vec<CodeParams> = Vec::new();
    for t in enumerate_deformable(p3) {
        for parity in Parity::both() {
            jobs.push(CodeParams::from_raw(p3, t, parity).unwrap());
        }
    }
    let exhaustive = jobs.len();
    for _ in 0..500 {
        let t = common::random_deformable(&mut rng, p5);
        jobs.push(CodeParams::from_raw(p5, t, *Parity::both().choose(&mut rng).unwrap()).unwrap());
    }
    let mut strings = 0;
    for params in &jobs {
        let r = width1_criterion(params, default_l_max(1)).map_err(|e| e.to_string())?;
        ensure(r.agrees, || format!("{params}: {r:?}"))?;
        strings += r.directions.iter().filter(|d| d.oracle_max_length.is_some()).count();
    }
    Ok(format!("{exhaustive} tuples at p=3 and 500 at p=5 agree; {strings} directions carry width-1 strings"))
}

fn pipeline_equality() -> Outcome {
    let mut compared = 0;
    for parity in Parity::both() {
        for params in [reference::d3_first(parity), reference::d5(parity)] {
            for w in 1..=4 {
                for l in 2..=8 {
                    let geom = SegmentGeometry::flat(w, l).unwrap();
                    let sys = build_segment_constraints(&params, &geom).map_err(|e| e.to_string())?;
                    let shape = (sys.matrix.rows(), sys.matrix.cols());
                    ensure(shape == (2 * (w + 1) * (l - 1), 2 * w * l), || format!("w={w} l={l}: shape {shape:?}"))?;
                    let canon = canonical_reduction(&params, w, l).map_err(|e| e.to_string())?;
                    let direct = solve_geometry(&params, &geom).map_err(|e| e.to_string())?;
                    ensure(canon.nullspace_dim == direct.nullspace_dim, || {
                        format!(
                            "{params} w={w} l={l}: canonical {} vs direct {}",
                            canon.nullspace_dim, direct.nullspace_dim
                        )
                    })?;
                    compared += 1;
                }
            }
        }
    }
    let shape =
        build_segment_constraints(&reference::d3_first(Parity::Symmetric), &SegmentGeometry::flat(2, 3).unwrap())
            .map_err(|e| e.to_string())?
            .matrix;
    Ok(format!(
        "{compared} (code, w, l) cases agree; w=2 l=3 system is {}x{} = 2(w+1)(l-1) x 2wl",
        shape.rows(),
        shape.cols()
    ))
}

fn census_table() -> Outcome {
    let mut checked = 0;
    for parity in Parity::both() {
        for params in [reference::d3_first(parity), reference::d5(parity)] {
            for dims in all_dims() {
                for c in planar_census(&params, dims).map_err(|e| e.to_string())? {
                    let (a, b) = c.in_plane_sides;
                    let even = (a % 2 == 0) as usize + (b % 2 == 0) as usize;
                    let want = [1, 2, 4][even];
                    ensure(c.count == want, || {
                        format!("{params} {:?} normal {:?}: {} vs {want}", dims.sides(), c.normal, c.count)
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (code, torus, orientation) counts match 4/2/1"))
}

fn antisymmetric_relation() -> Outcome {
    let mut ks = Vec::new();
    for params in [
        reference::d3_first(Parity::Antisymmetric),
        reference::d3_second(Parity::Antisymmetric),
        reference::d5(Parity::Antisymmetric),
    ] {
        for dims in all_dims() {
            let code = TorusCode::new(&params, dims).map_err(|e| e.to_string())?;
            ensure(product_of_all_generators(&code).is_empty(), || {
                format!("{params} {:?}: product nonzero", dims.sides())
            })?;
            let k = encoded_qudit_count(&code);
            ensure(k >= 1, || format!("{params} {:?}: k = 0", dims.sides()))?;
            ks.push(k);
        }
    }
    Ok(format!(
        "{} tori, product is identity, k ranges {}..{}",
        ks.len(),
        ks.iter().min().unwrap(),
        ks.iter().max().unwrap()
    ))
}

fn exact_algebra() -> Outcome {
    let torus = TorusDims::cube(2).unwrap();
    for parity in Parity::both() {
        for params in [reference::d3_first(parity), reference::d3_second(parity)] {
            let r = verify_projector_algebra(&params, torus, &AlgebraGuard::default()).map_err(|e| e.to_string())?;
            ensure(r.all_hold(), || format!("{params}: {r:?}"))?;
            let images: Vec<u32> = r.inversion.iter().map(|c| c.expected).collect();
            let want = if parity == Parity::Symmetric { vec![0, 1, 2] } else { vec![0, 2, 1] };
            ensure(images == want, || format!("{params}: inversion images {images:?}"))?;
        }
    }
    Ok("phase law, idempotence, orthogonality, completeness and inversion hold exactly".into())
}

fn property_suites() -> Outcome {
    let runs = [
        ("divisibility", common::divisibility_chain(common::CASES, 101)),
        ("transition", common::transition_identities(common::CASES, 102)),
        ("witness", common::witness_reverification(common::CASES, 103)),
        ("orbit", common::orbit_invariance(common::CASES, 104)),
    ];
    for (name, run) in &runs {
        ensure(run.passed() && run.cases == common::CASES, || format!("{name}: {:?}", run.failures))?;
    }
    Ok(format!("4 x {} cases, zero failures ({})", common::CASES, runs[2].1.detail))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 12] = [
        ("no deformable tuple at p = 2", scan_p2),
        ("p = 3 orbit classification", d3_orbits),
        ("p = 3 condition verdicts", d3_conditions),
        ("p = 3 string length within w+1", d3_string_bound),
        ("p = 5 string length within 2w", d5_bound),
        ("generator consistency", generator_consistency),
        ("width-1 determinant vs oracle", width1_agreement),
        ("canonical reduction vs direct nullspace", pipeline_equality),
        ("planar census 4/2/1", census_table),
        ("antisymmetric generator product", antisymmetric_relation),
        ("exact projector algebra", exact_algebra),
        ("randomized property suites", property_suites),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr().lock();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        let line = match &outcome {
            Ok(detail) => format!("PASS criterion {}: {name} ({secs:.2}s) {detail}", i + 1),
            Err(why) => format!("FAIL criterion {}: {name} ({secs:.2}s) {why}", i + 1),
        };
        let _ = writeln!(err, "{line}");
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
