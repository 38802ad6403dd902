//! Longest nontrivial string segment per width, the width-1 determinant test
//! and the block-eliminated canonical form.

use cubic_qupit::code::{reference, Parity};
use cubic_qupit::oracle::{
    canonical_reduction, default_l_max, max_nontrivial_length, solve_geometry, width1_criterion, KindFamily,
    SegmentGeometry,
};

fn main() -> cubic_qupit::Result<()> {
    for params in
        [reference::d3_first(Parity::Symmetric), reference::d5(Parity::Symmetric), reference::qubit(Parity::Symmetric)]
    {
        println!("{params}");
        for w in 1..=4 {
            let l_max = default_l_max(w);
            let flat = max_nontrivial_length(&params, w, l_max, KindFamily::Flat)?;
            let corner = max_nontrivial_length(&params, w, l_max, KindFamily::Cornered)?;
            println!(
                "  w={w}: flat {:?}, cornered {:?} (scanned to {l_max})",
                flat.max_nontrivial_length, corner.max_nontrivial_length
            );
        }
        let w1 = width1_criterion(&params, 6)?;
        for d in &w1.directions {
            println!("  width 1 along {:?}: det {:?}, oracle {:?}", d.direction, d.det, d.oracle_max_length);
        }
    }

    let params = reference::d5(Parity::Symmetric);
    let form = canonical_reduction(&params, 2, 5)?;
    let direct = solve_geometry(&params, &SegmentGeometry::flat(2, 5)?)?;
    println!(
        "canonical form w=2 l=5: rank {} <= {}, nullspace {} (direct {})",
        form.rank, form.rank_bound, form.nullspace_dim, direct.nullspace_dim
    );
    Ok(())
}
