//! Evaluate the three algebraic conditions on the reference codes.

use cubic_qupit::code::Axis;
use cubic_qupit::code::{reference, Parity};
use cubic_qupit::conditions::{direction_transition, minimal_string_det, theorem1_report};

fn main() -> cubic_qupit::Result<()> {
    for parity in Parity::both() {
        for params in [reference::d3_first(parity), reference::d3_second(parity), reference::d5(parity)] {
            let r = theorem1_report(&params);
            println!("{params}");
            println!(
                "  deformable {}  minimal string {:?}  pairing squares {:?}  all {}",
                r.deformability, r.minimal_string, r.pairing_squares, r.overall
            );
            for axis in Axis::ALL {
                let t = direction_transition(&params, axis)?;
                println!("  {axis:?}: T = {:?}, det(T - T^-1) = {}", t.matrix().to_rows(), minimal_string_det(&t)?);
            }
            for d in &r.discrepancies {
                println!("  note: {d}");
            }
        }
    }
    Ok(())
}
