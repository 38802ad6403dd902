//! Exact arithmetic and dense linear algebra over a prime field.

mod matrix;
mod poly;
mod scalar;

pub use matrix::{mat_inverse, mat_reduce, FpMatrix, FpVector, Reduction};
pub use poly::{characteristic_polynomial, charpoly_2x2, krylov_min_poly, matrix_min_poly, FpPolynomial};
pub use scalar::{fp_inv, is_prime, FpScalar, PrimeModulus};
