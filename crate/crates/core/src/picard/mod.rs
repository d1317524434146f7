//! Picard lattices of blow-ups of the plane and of the quadric, with
//! involutions acting on them: reflections, invariant ranks, exceptional
//! classes, minimality and the classification of minimal pairs.

mod classify;
mod conic_bundle;
mod exceptional;
mod lattice;

pub use classify::{classify_pair, PairClass};
pub use conic_bundle::{elementary_transformation, ConicBundleModel, TransformCenter};
pub use exceptional::{degree_bound, exceptional_classes, is_minimal, Minimality, MinimalityFailure};
pub use lattice::{
    anti_reflection_in_K, fixed_rank, make_lattice, reflection_through, DivClass, LatticeInvolution, LatticeMatrix,
    LatticeModel, PicLattice,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PicardError {
    #[error("matrix or class has size {found}, lattice rank is {rank}")]
    SizeMismatch { rank: usize, found: usize },
    #[error("matrix does not preserve the intersection form")]
    NotIsometry,
    #[error("matrix does not square to the identity")]
    NotInvolution,
    #[error("matrix does not fix the canonical class")]
    MovesCanonical,
    #[error("reflection through a class of square {0} is not integral")]
    NonIntegralReflection(i64),
    #[error("K^2 = {0}; anti-reflection needs K^2 in {{1, 2}}")]
    KSquaredOutOfRange(i64),
    #[error("exceptional classes are infinite or out of range for {0} points")]
    TooManyPoints(usize),
    #[error("invariant rank 1 with K^2 = {0} matches no case")]
    Unclassified(i64),
    #[error("no contact point with index {0}")]
    NoContactPoint(usize),
    #[error("contact point {0} is transversal")]
    NotTangent(usize),
}
