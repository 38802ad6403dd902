//! Exact decision procedure for logical string segments.

mod flatten;
mod geometry;
mod reduction;
mod segment;

pub use flatten::{flatten_segment, FlattenBox, Flattened};
pub use geometry::{KindFamily, PlaneOrientation, SegmentGeometry, SegmentKind};
pub use reduction::{
    canonical_reduction, canonical_reduction_oriented, corner_check, width1_criterion, CanonicalForm, CornerCheck,
    Width1Direction, Width1Report,
};
pub use segment::{
    build_segment_constraints, default_l_max, interior_cubes, max_nontrivial_length, scan_geometries, solve_geometry,
    solve_segment, solve_system, ConstraintSystem, LengthEntry, SegmentReport, SegmentSolution, Witness,
};
