use std::path::PathBuf;

use thiserror::Error;

use cremona::exactpoly::PolyError;
use cremona::fixedcurve::FixedCurveError;
use cremona::involutions::InvolutionError;
use cremona::picard::PicardError;
use cremona::projmaps::MapError;

use crate::parse::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{}: {source}", path.display())]
    InFile {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Involution(#[from] InvolutionError),
    #[error(transparent)]
    FixedCurve(#[from] FixedCurveError),
    #[error(transparent)]
    Picard(#[from] PicardError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("round trip failed at {0}")]
    RoundTrip(String),
    #[error("{0}")]
    Usage(String),
}

fn internal_poly(_: &PolyError) -> bool {
    true
}

fn internal_involution(e: &InvolutionError) -> bool {
    match e {
        InvolutionError::ResidualExtraction { .. }
        | InvolutionError::DegenerateJacobian
        | InvolutionError::Interpolation(_) => true,
        InvolutionError::Poly(p) => internal_poly(p),
        InvolutionError::Map(m) => internal_map(m),
        _ => false,
    }
}

fn internal_map(e: &MapError) -> bool {
    matches!(e, MapError::BaseLocus | MapError::ZeroComposition)
}

impl CliError {
    /// A procedure failed on input that passed validation.
    pub fn is_internal(&self) -> bool {
        match self {
            CliError::RoundTrip(_) => true,
            CliError::Involution(e) => internal_involution(e),
            CliError::Map(e) => internal_map(e),
            CliError::FixedCurve(e) => match e {
                FixedCurveError::CrossCheck(_) => true,
                FixedCurveError::Poly(p) => internal_poly(p),
                FixedCurveError::Map(m) => internal_map(m),
                FixedCurveError::Involution(i) => internal_involution(i),
                _ => false,
            },
            _ => false,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_internal() {
            1
        } else {
            2
        }
    }
}
