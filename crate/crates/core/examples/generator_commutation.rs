//! Build the cube generator of the p = 5 reference code and check that every
//! translate commutes with it. A bad vertex scale breaks consistency.

use cubic_qupit::code::{commutation_exponent, verify_generator_commutation};
use cubic_qupit::code::{reference, verify_translation_commutation, CubeGenerator, Parity, Site};

fn main() -> cubic_qupit::Result<()> {
    let params = reference::d5(Parity::Antisymmetric);
    println!("code {params}");
    let generator = CubeGenerator::new(&params);
    for (vertex, pair) in generator.vertices() {
        println!("  vertex {vertex:?} -> {:?}", pair.centered());
    }

    let report = verify_translation_commutation(&params)?;
    println!("{} offsets checked, consistent: {}", report.checked.len(), report.is_consistent());

    let a = generator.at(Site::ORIGIN);
    let b = generator.at(Site::new(1, 1, 0));
    println!("exponent at offset (1,1,0): {}", commutation_exponent(&a, &b)?.value());

    let bad = CubeGenerator::with_scale(&params, 2);
    let broken = verify_generator_commutation(&bad)?;
    println!("scale 2 breaks {} offsets, e.g. {:?}", broken.failures.len(), broken.failures.first());
    Ok(())
}
