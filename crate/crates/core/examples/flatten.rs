//! Push an operator inside a box onto two faces by multiplying in generators.
//! The input is a flat row dressed with stabilizers from the box interior.

use cubic_qupit::code::PauliConfig;
use cubic_qupit::code::{reference, CubeGenerator, Parity, Site, SympPair};
use cubic_qupit::oracle::{flatten_segment, FlattenBox};

fn main() -> cubic_qupit::Result<()> {
    let params = reference::d5(Parity::Antisymmetric);
    let m = params.modulus();
    let g = CubeGenerator::new(&params);
    let bx = FlattenBox::new(3, 3, 5);

    let mut input = PauliConfig::new(m);
    for t in 0..5 {
        input.set(Site::new(t, 0, 0), SympPair::new(m, t + 1, 2));
    }
    let dressing = g.at(Site::new(0, 1, 1)).mul(&g.at(Site::new(2, 0, 1)).pow(3))?;
    let input = input.mul(&dressing)?;
    println!("input on {} sites", input.len());

    let out = flatten_segment(&params, &input, bx)?;
    println!("flattened to {} sites using {} generators", out.config.len(), out.applied.len());
    for (site, pair) in out.config.iter() {
        println!("  {site:?} {:?}", pair.raw());
    }
    println!("all on the profile: {}", out.config.sites().all(|s| bx.on_profile(s)));
    Ok(())
}
