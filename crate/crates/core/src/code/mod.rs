//! Codes, cube generators and phase-free lattice Pauli operators.

mod config;
mod generator;
mod pair;
mod params;

pub use config::{commutation_exponent, inversion_image, InversionCenter, PauliConfig, Site, TorusDims};
pub use generator::{
    build_generator, neighbour_offsets, verify_generator_commutation, verify_translation_commutation, vertex_index,
    vertex_of, CommutationReport, CubeGenerator, OffsetExponent, Vertex,
};
pub use pair::{symplectic_product, SympPair};
pub use params::{CodeParams, Label, ParamsFile, Parity, RawTuple};

/// Lattice axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn unit(self) -> [i64; 3] {
        let mut u = [0; 3];
        u[self.index()] = 1;
        u
    }

    /// The axis distinct from both arguments.
    pub fn third(a: Axis, b: Axis) -> Axis {
        Axis::ALL[3 - a.index() - b.index()]
    }

    pub fn name(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }
}

/// Reference codes used throughout the examples and tests.
pub mod reference {
    use super::{CodeParams, Parity};

    /// `p = 3`, `{(1,0),(0,1),(1,1),(1,2)}`.
    pub fn d3_first(parity: Parity) -> CodeParams {
        CodeParams::from_ints(3, [[1, 0], [0, 1], [1, 1], [1, 2]], parity).expect("valid")
    }

    /// `p = 3`, `{(1,0),(0,1),(1,1),(2,1)}`.
    pub fn d3_second(parity: Parity) -> CodeParams {
        CodeParams::from_ints(3, [[1, 0], [0, 1], [1, 1], [2, 1]], parity).expect("valid")
    }

    /// `p = 5`, `{(1,0),(0,1),(1,1),(3,-3)}`.
    pub fn d5(parity: Parity) -> CodeParams {
        CodeParams::from_ints(5, [[1, 0], [0, 1], [1, 1], [3, -3]], parity).expect("valid")
    }

    /// A `p = 2` tuple; every `p = 2` tuple repeats a pair up to scale.
    pub fn qubit(parity: Parity) -> CodeParams {
        CodeParams::from_ints(2, [[1, 0], [0, 1], [1, 1], [1, 1]], parity).expect("valid")
    }
}
