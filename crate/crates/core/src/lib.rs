//! Normal surfaces in one-vertex triangulations, their boundary curves, and
//! the gate constant for amalgamated Heegaard splittings.
//!
//! The crate is organised bottom-up: [`triangulation`] parses and validates
//! gluing data, [`normal`] handles surface coordinates, [`hilbert`]
//! enumerates solution cones, [`curves`] works on the boundary surface,
//! [`distance`] bounds curve complex distances and [`gate`] assembles the
//! pipelines and reports.

pub mod cache;
pub mod curves;
pub mod distance;
pub mod error;
pub mod gate;
pub mod hilbert;
pub mod normal;
pub mod perm;
pub mod triangulation;

pub use cache::Cache;
pub use error::{Error, Result};
pub use hilbert::{
    Classification, ClassifiedSolution, EfficiencyReport, EnumOptions, SolutionSet, SupportFace, Verdict,
};
pub use normal::{BoundaryArcVector, MatchingSystem, NormalVector};
pub use perm::Perm;
pub use triangulation::{BoundaryTriangulation, SkeletonOrbits, Triangulation};
