//! Projective points, harmonic conjugation on lines, and plane rational maps
//! with composition, identity testing and conjugation.

mod basepoints;
mod harmonic;
mod map;
mod point;

pub use basepoints::{base_points, BasePoints};
pub use harmonic::{cross_ratio, harmonic_conjugate, LineParam};
pub use map::{compose, conjugate, is_identity, MapValue, RationalMap};
pub use point::{cross, ProjPoint};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("map components have different degrees")]
    UnequalDegrees,
    #[error("all map components are zero")]
    ZeroMap,
    #[error("composition is identically zero")]
    ZeroComposition,
    #[error("linear map is singular")]
    SingularMatrix,
    #[error("supplied inverse is not a two-sided inverse")]
    NotInverse,
    #[error("degenerate quadratic (zero leading coefficient or double root)")]
    DegenerateQuadratic,
    #[error("fewer than three distinct points")]
    TooFewDistinct,
    #[error("base locus could not be resolved")]
    BaseLocus,
}
