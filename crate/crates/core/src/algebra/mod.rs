//! Exact-arithmetic engine for finite-dimensional quotients of path
//! algebras: graded basis construction, quiver representations, Hom and Ext
//! via minimal projective resolutions, radicals, extension realisation,
//! resolution truncation, and the exact-tilting splitting criterion.

mod basis;
mod extension;
mod hom;
mod module;
mod quiver;
mod resolution;
mod tilting_check;

pub use basis::{default_path_cap, AlgebraBasis, Path, DEFAULT_PATH_CAP};
pub use extension::{ext1_classes, realize_extension, universal_extension_module, Ext1Classes};
pub use hom::{hom_space, is_isomorphic, radical_hom, ModuleHom};
pub use module::Module;
pub use quiver::{Arrow, QuiverPresentation, Relation, RelationTerm};
pub use resolution::{
    ext_groups, global_dimension, minimal_projective_resolution, projective_cover,
    truncate_projective_complex, ProjectiveComplex, DEFAULT_RESOLUTION_CAP,
};
pub use tilting_check::{exact_tilting_check, TiltingVerdict};

use thiserror::Error;


#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("algebra not finite-dimensional within path length cap {cap}")]
    NotFiniteDimensional { cap: usize },
    #[error("resolution exceeds max_length {cap}")]
    ResolutionTooLong { cap: usize },
    #[error("isomorphism test inconclusive: coefficient grid bound exhausted")]
    IsoInconclusive,
    #[error("summand {index} is not indecomposable (dim End/rad = {end_over_rad})")]
    NotIndecomposable { index: usize, end_over_rad: usize },
    #[error("extension classes are linearly dependent in Ext^1")]
    DependentClasses,
    #[error("tail not exact: last differential is not surjective")]
    TailNotExact,
}
