//! Exact syndrome projectors of the p = 3 cube generator on a 2x2x2 torus.

use cubic_qupit::algebra::{build_projector, torus_generator, verify_projector_algebra, AlgebraGuard, PhasedPauli};
use cubic_qupit::code::{reference, Parity, Site, TorusDims};

fn main() -> cubic_qupit::Result<()> {
    let m = reference::d3_first(Parity::Symmetric).modulus();
    let x = PhasedPauli::new(m, vec![Site::ORIGIN], &[1], &[0], 0)?;
    let z = PhasedPauli::new(m, vec![Site::ORIGIN], &[0], &[1], 0)?;
    println!("X Z phase {}, Z X phase {}", x.mul(&z)?.phase(), z.mul(&x)?.phase());

    let torus = TorusDims::cube(2)?;
    let guard = AlgebraGuard::default();
    for parity in Parity::both() {
        let params = reference::d3_first(parity);
        let s = torus_generator(&params, torus)?;
        let p1 = build_projector(&s, m.elem(1), &guard)?;
        println!("{params}: P_1 has {} terms", p1.len());
        let r = verify_projector_algebra(&params, torus, &guard)?;
        println!(
            "  idempotent {} orthogonal {} complete {} inversion {:?}",
            r.idempotent,
            r.orthogonal,
            r.complete,
            r.inversion.iter().map(|c| (c.r, c.expected, c.holds)).collect::<Vec<_>>()
        );
    }
    Ok(())
}
