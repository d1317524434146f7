use crate::projmaps::ProjPoint;

use super::config::{ConfigKind, PointConfig};
use super::residual::{through_point, FactorBookkeeping, Residual};
use super::InvolutionError;

/// Evaluator sending `x` to the residual base point of the net of sextics
/// through `x` singular at the eight configuration points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BertiniInvolution {
    config: PointConfig,
    seed: u64,
}

impl BertiniInvolution {
    pub fn new(config: PointConfig, seed: u64) -> Result<Self, InvolutionError> {
        if config.kind() != ConfigKind::Bertini {
            return Err(InvolutionError::PointCount {
                expected: 8,
                found: config.points().len(),
            });
        }
        Ok(BertiniInvolution { config, seed })
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Two eliminants of degree 36 each lose `4` per configuration point and
    /// `1` at `x`; the gcd of the two cubic residuals is the image.
    pub fn eval_traced(&self, x: &ProjPoint) -> Result<(ProjPoint, FactorBookkeeping), InvolutionError> {
        if self.config.points().contains(x) {
            return Err(InvolutionError::BasePointInput);
        }
        let net = through_point(self.config.system(), x)?;
        if net.len() != 3 {
            return Err(InvolutionError::SystemDimension {
                expected: 3,
                found: net.len(),
            });
        }
        Residual {
            gens: net,
            base: self.config.points(),
            base_mult: 4,
            input: x,
            seed: self.seed,
        }
        .solve()
    }

    pub fn eval(&self, x: &ProjPoint) -> Result<ProjPoint, InvolutionError> {
        self.eval_traced(x).map(|(p, _)| p)
    }
}

pub fn bertini_eval(config: &PointConfig, x: &ProjPoint, seed: u64) -> Result<ProjPoint, InvolutionError> {
    BertiniInvolution::new(config.clone(), seed)?.eval(x)
}
