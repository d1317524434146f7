use num_traits::Zero;

use crate::exactpoly::HPoly;
use crate::projmaps::ProjPoint;

use super::config::{ConfigKind, PointConfig};
use super::residual::{through_point, FactorBookkeeping, Residual};
use super::InvolutionError;

/// Evaluator sending `x` to the ninth base point of the pencil of cubics
/// through the seven configuration points and `x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeiserInvolution {
    config: PointConfig,
    seed: u64,
}

impl GeiserInvolution {
    pub fn new(config: PointConfig, seed: u64) -> Result<Self, InvolutionError> {
        if config.kind() != ConfigKind::Geiser {
            return Err(InvolutionError::PointCount {
                expected: 7,
                found: config.points().len(),
            });
        }
        Ok(GeiserInvolution { config, seed })
    }

    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Image of `x` together with the degree bookkeeping of the eliminant.
    pub fn eval_traced(&self, x: &ProjPoint) -> Result<(ProjPoint, FactorBookkeeping), InvolutionError> {
        if self.config.points().contains(x) {
            return Err(InvolutionError::BasePointInput);
        }
        let pencil = through_point(self.config.system(), x)?;
        if pencil.len() != 2 {
            return Err(InvolutionError::SystemDimension {
                expected: 2,
                found: pencil.len(),
            });
        }
        Residual {
            gens: pencil,
            base: self.config.points(),
            base_mult: 1,
            input: x,
            seed: self.seed,
        }
        .solve()
    }

    pub fn eval(&self, x: &ProjPoint) -> Result<ProjPoint, InvolutionError> {
        self.eval_traced(x).map(|(p, _)| p)
    }

    /// Jacobian determinant of the net; a sextic double at the seven points.
    pub fn fixed_sextic(&self) -> Result<HPoly, InvolutionError> {
        let net = self.config.system();
        let rows: Vec<[HPoly; 3]> = net.iter().map(HPoly::gradient).collect();
        let det = jacobian_det(&rows);
        if det.is_zero() {
            return Err(InvolutionError::DegenerateJacobian);
        }
        Ok(det.canonical())
    }
}

pub(crate) fn jacobian_det(r: &[[HPoly; 3]]) -> HPoly {
    let minor = |i: usize, j: usize| &(&r[1][i] * &r[2][j]) - &(&r[1][j] * &r[2][i]);
    let t0 = &r[0][0] * &minor(1, 2);
    let t1 = &r[0][1] * &minor(0, 2);
    let t2 = &r[0][2] * &minor(0, 1);
    &(&t0 - &t1) + &t2
}

/// The ninth base point of the pencil through the configuration and `x`.
pub fn geiser_eval(config: &PointConfig, x: &ProjPoint, seed: u64) -> Result<ProjPoint, InvolutionError> {
    GeiserInvolution::new(config.clone(), seed)?.eval(x)
}

pub fn geiser_fixed_sextic(config: &PointConfig) -> Result<HPoly, InvolutionError> {
    GeiserInvolution::new(config.clone(), 0)?.fixed_sextic()
}

/// True iff all partials of `f` vanish at `p`.
pub fn is_singular_at(f: &HPoly, p: &ProjPoint) -> bool {
    f.gradient().iter().all(|g| g.eval(p.coords()).is_zero())
}
