use thiserror::Error;

use crate::code::Site;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),

    #[error("modulus mismatch: F_{left} vs F_{right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("symplectic pair must be nonzero ({0})")]
    ZeroPair(&'static str),

    #[error("torus side {0} is below 2")]
    TorusTooSmall(i64),

    #[error("configurations live on different tori")]
    TorusMismatch,

    #[error("inversion center must lie on the lattice or on cube centers")]
    InvalidCenter,

    #[error("denominator pairs have zero symplectic product")]
    SingularDenominator,

    #[error("prerequisite failed: {0}")]
    PrerequisiteFailed(String),

    #[error("degenerate segment geometry: {0}")]
    DegenerateGeometry(String),

    #[error("flattening blocked at site {site:?}")]
    FlattenFailed { site: Site },

    #[error("pivot block is rank-deficient at column pair {column}")]
    PivotFailure { column: usize },

    #[error("orbit closure exceeded the cap of {cap} tuples")]
    OrbitOverflow { cap: usize },

    #[error("generators do not commute: {0}")]
    InvalidCode(String),

    #[error("operator does not satisfy s^p = identity")]
    NotOrderP,

    #[error("modulus {0} not supported here: {1}")]
    UnsupportedModulus(u32, &'static str),

    #[error("operators act on different site sets")]
    SiteSetMismatch,

    #[error("period-2 tile does not close on odd side along {axis}")]
    WrapSeam { axis: char },

    #[error("operator sum exceeds the configured size guard: {0}")]
    SizeGuard(String),

    #[error("parse error: {0}")]
    Parse(String),
}
