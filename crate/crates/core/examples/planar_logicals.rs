//! Planar logical census and encoded-qudit counts on small tori.

use cubic_qupit::code::{reference, Parity, TorusDims};
use cubic_qupit::logical::logical_summary;

fn main() -> cubic_qupit::Result<()> {
    for params in [reference::d3_first(Parity::Antisymmetric), reference::d5(Parity::Symmetric)] {
        println!("{params}");
        for dims in ["2x2x2", "3x3x3", "4x4x4", "2x3x4"] {
            let dims: TorusDims = dims.parse()?;
            let s = logical_summary(&params, dims)?;
            let census: Vec<_> = s.census.iter().map(|c| (c.normal, c.count)).collect();
            let nonzero = s.commutation_table.iter().flatten().filter(|&&e| e != 0).count();
            println!(
                "  {:?}: k={} product trivial={} census {census:?} nonzero pairings {nonzero}",
                s.dims, s.encoded_qudits, s.generator_product_is_identity
            );
        }
    }
    Ok(())
}
