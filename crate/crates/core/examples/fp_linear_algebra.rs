//! Rank, nullspace, inverse and the polynomial chain over F_7.

use cubic_qupit::fp::{characteristic_polynomial, krylov_min_poly, matrix_min_poly, FpMatrix, FpVector, PrimeModulus};

fn main() -> cubic_qupit::Result<()> {
    let f7 = PrimeModulus::new(7)?;
    let a = FpMatrix::from_rows(f7, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 5]])?;
    println!("rank {} (transpose {})", a.rank(), a.transpose().rank());
    for v in a.nullspace() {
        println!("kernel vector {:?}", v.as_slice());
    }
    println!("det {}", a.det()?.value());

    let t = FpMatrix::from_rows(f7, &[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 3]])?;
    let inv = t.inverse()?;
    println!("inverse {:?}", inv.to_rows());

    let v = FpVector::from_i64(f7, &[1, 0, 0]);
    let krylov = krylov_min_poly(&t, &v)?;
    let min = matrix_min_poly(&t)?;
    let chr = characteristic_polynomial(&t)?;
    println!("krylov {krylov} | min {min} | char {chr}");
    println!("divisibility holds: {}", krylov.divides(&min) && min.divides(&chr));
    Ok(())
}
