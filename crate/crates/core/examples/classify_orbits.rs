//! Orbits of deformable tuples at p = 3 and p = 5.

use cubic_qupit::classify::{classify_orbits_with, DEFAULT_ORBIT_CAP};
use cubic_qupit::code::Parity;
use cubic_qupit::fp::PrimeModulus;

fn main() -> cubic_qupit::Result<()> {
    for p in [3, 5] {
        let m = PrimeModulus::new(p)?;
        for parity in Parity::both() {
            let report = classify_orbits_with(m, parity, 2, DEFAULT_ORBIT_CAP)?;
            println!("p={p} parity {parity}: {} tuples in {} orbits", report.tuple_count, report.orbits.len());
            for o in report.orbits.iter().filter(|o| o.deformability && o.minimal_string.iter().all(|&f| f)) {
                let lengths: Vec<_> = o.oracle.iter().map(|s| (s.max_flat, s.max_cornered)).collect();
                println!("  {:?} size {} third {:?} oracle {:?}", o.representative, o.size, o.pairing_squares, lengths);
            }
            for note in &report.notes {
                println!("  {note}");
            }
        }
    }
    Ok(())
}
