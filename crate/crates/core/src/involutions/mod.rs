//! De Jonquières, Geiser and Bertini involutions: validated constructors,
//! closed-form maps where available and exact per-point evaluators.

mod bertini;
mod config;
mod dj;
mod geiser;
mod instances;
mod interpolate;
mod record;
mod residual;

pub use bertini::{bertini_eval, BertiniInvolution};
pub use config::{cubic_system, sextic_system, ConfigKind, ConfigReport, PointConfig};
pub use dj::{DjData, DjReport};
pub use geiser::{geiser_eval, geiser_fixed_sextic, is_singular_at, GeiserInvolution};
pub use instances::{dj_instance, dj_instance_moved};
pub use interpolate::{interpolate_geiser, interpolate_map, octic_triple_point_system};
pub use record::{
    bertini_record, dj_from_conic, dj_involution, geiser_record, Evaluator, InvolutionKind, InvolutionRecord,
};
pub use residual::{FactorBookkeeping, MAX_ATTEMPTS};

use thiserror::Error;

use crate::exactpoly::PolyError;
use crate::projmaps::MapError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("curve degree {0} is below 2")]
    DegreeTooSmall(u32),
    #[error("curve is zero")]
    ZeroCurve,
    #[error("multiplicity at the center is {found}, expected {expected}")]
    CenterMultiplicity { expected: u32, found: u32 },
    #[error("tangent cone at the center is not ordinary")]
    NonOrdinary,
    #[error("curve contains a line through the center")]
    LineThroughCenter,
    #[error("curve has a singular point other than the center")]
    ExtraSingularity,
    #[error("discriminant is zero or not squarefree")]
    DiscriminantNotSquarefree,
    #[error("map degree dropped to {found}, expected {expected}")]
    DegreeDrop { expected: u32, found: u32 },
    #[error("expected a conic, got degree {0}")]
    NotAConic(u32),
    #[error("conic is singular")]
    SingularConic,
    #[error("center lies on the conic")]
    PointOnConic,
    #[error("expected {expected} points, got {found}")]
    PointCount { expected: usize, found: usize },
    #[error("points {0} and {1} coincide")]
    RepeatedPoint(usize, usize),
    #[error("points {0}, {1}, {2} are collinear")]
    Collinear(usize, usize, usize),
    #[error("linear system has dimension {found}, expected {expected}")]
    SystemDimension { expected: usize, found: usize },
    #[error("input point is a base point of the construction")]
    BasePointInput,
    #[error("residual point extraction failed after {attempts} coordinate changes")]
    ResidualExtraction { attempts: u32 },
    #[error("Jacobian of the net vanishes identically")]
    DegenerateJacobian,
    #[error("interpolation failed: {0}")]
    Interpolation(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Map(#[from] MapError),
}
