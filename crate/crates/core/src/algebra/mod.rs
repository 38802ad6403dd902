//! Exact phase-tracking Pauli and projector algebra for odd primes.
//!
//! Each site is written `X^a Z^b` with X to the left, so `X Z = Z X w`.

mod cyclotomic;
mod pauli;
mod projector;

pub use cyclotomic::Cyclotomic;
pub use pauli::{commutator_exponent, pauli_mul, pauli_power, PhasedPauli};
pub use projector::{
    build_projector, inversion_conjugate, inversion_permutation, torus_generator, verify_projector_algebra,
    AlgebraGuard, AlgebraReport, InversionCheck, OperatorSum,
};
