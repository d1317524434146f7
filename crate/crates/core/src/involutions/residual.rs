//! Extraction of the one extra common point of a linear system of curves
//! whose other base points are known.

use num_traits::{One, Zero};

use crate::exactpoly::linalg::{adjugate3, mat3_vec, rank};
use crate::exactpoly::{resultant_z, BForm, HPoly, Rat, Ring, UPoly};
use crate::projmaps::ProjPoint;
use crate::rng::SeededRng;

use super::InvolutionError;

/// Retries allowed before residual extraction gives up.
pub const MAX_ATTEMPTS: u32 = 24;

/// Degree accounting of one successful extraction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorBookkeeping {
    /// Degree of each eliminant `Res_z(G_1, G_k)`.
    pub resultant_degree: u32,
    /// Total multiplicity removed at the configuration points.
    pub base_contribution: u32,
    /// Multiplicity removed at the input point.
    pub input_contribution: u32,
    /// Degree left after removing the known factors.
    pub residual_degree: u32,
    /// Degree of the gcd of all residual forms; 1 on success.
    pub common_degree: u32,
    /// Coordinate changes tried, including the successful one.
    pub attempts: u32,
}

impl FactorBookkeeping {
    pub fn balances(&self) -> bool {
        self.resultant_degree == self.base_contribution + self.input_contribution + self.residual_degree
            && self.common_degree == 1
    }
}

pub(crate) struct Residual<'a> {
    /// Generators of the subsystem through the input point.
    pub gens: Vec<HPoly>,
    pub base: &'a [ProjPoint],
    pub base_mult: u32,
    pub input: &'a ProjPoint,
    pub seed: u64,
}

impl Residual<'_> {
    pub fn solve(&self) -> Result<(ProjPoint, FactorBookkeeping), InvolutionError> {
        let mut rng = SeededRng::new(self.seed);
        for attempt in 1..=MAX_ATTEMPTS {
            let bound = 16 * attempt as i64;
            if let Some((p, mut book)) = self.attempt(&mut rng, bound)? {
                book.attempts = attempt;
                return Ok((p, book));
            }
        }
        Err(InvolutionError::ResidualExtraction { attempts: MAX_ATTEMPTS })
    }

    /// One try with the shear `(x, y, z) -> (x + a z, y + b z, z)`, whose
    /// projection center `(a:b:1)` is drawn from `[-bound, bound]^2`, and a
    /// random invertible recombination of the generators.
    fn attempt(
        &self,
        rng: &mut SeededRng,
        bound: i64,
    ) -> Result<Option<(ProjPoint, FactorBookkeeping)>, InvolutionError> {
        let k = self.gens.len();
        let mix: Vec<Vec<Rat>> = loop {
            let mix: Vec<Vec<Rat>> = (0..k).map(|_| (0..k).map(|_| rng.rat_in(-3, 3)).collect()).collect();
            if rank(&mix, k) == k {
                break mix;
            }
        };
        let (a, b) = (rng.rat_in(-bound, bound), rng.rat_in(-bound, bound));
        let (o, z) = (Rat::one(), Rat::zero());
        let m = [[o.clone(), z.clone(), a], [z.clone(), o.clone(), b], [z.clone(), z, o]];
        let gens: Vec<HPoly> = mix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.gens)
                    .filter(|(c, _)| !c.is_zero())
                    .fold(HPoly::zero(self.gens[0].degree()), |acc, (c, g)| &acc + &g.scale(c))
                    .linear_pullback(&m)
            })
            .collect();
        let inv = adjugate3(&m);
        let project = |p: &ProjPoint| mat3_vec(&inv, p.coords());
        let base: Vec<[Rat; 3]> = self.base.iter().map(project).collect();
        let input = project(self.input);

        let mut known: Vec<&[Rat; 3]> = base.iter().collect();
        known.push(&input);
        for (i, p) in known.iter().enumerate() {
            if p[0].is_zero() && p[1].is_zero() {
                return Ok(None);
            }
            if known[..i].iter().any(|q| same_projection(p, q)) {
                return Ok(None);
            }
        }

        let known_factor = base
            .iter()
            .fold(BForm::constant(Rat::one()), |acc, q| {
                acc.mul(&BForm::vanishing_at(&q[0], &q[1]).pow(self.base_mult))
            })
            .mul(&BForm::vanishing_at(&input[0], &input[1]));

        let mut common: Option<BForm> = None;
        let mut res_degree = 0;
        let mut residual_degree = 0;
        for g in &gens[1..] {
            let r = match resultant_z(&gens[0], g) {
                Ok(r) if !r.is_zero() => r,
                _ => return Ok(None),
            };
            let Some(residual) = r.div_exact(&known_factor) else {
                return Ok(None);
            };
            res_degree = r.degree();
            residual_degree = residual.degree();
            common = Some(match common {
                None => residual,
                Some(c) => c.gcd(&residual)?,
            });
        }
        let common = common.expect("at least two generators").canonical();
        if common.degree() != 1 {
            return Ok(None);
        }
        let alpha = -common.coeff(0);
        let beta = common.coeff(1);
        let root = [alpha.clone(), beta.clone(), Rat::zero()];
        if base.iter().any(|q| same_projection(q, &root)) {
            return Ok(None);
        }

        let mut h: Option<UPoly<Rat>> = None;
        for g in &gens {
            let r = g.restrict_xy(&alpha, &beta);
            h = Some(match h {
                None => r,
                Some(acc) => acc.gcd(&r),
            });
        }
        let mut h = h.expect("nonempty");
        if same_projection(&input, &root) {
            let lambda = if input[0].is_zero() {
                &beta / &input[1]
            } else {
                &alpha / &input[0]
            };
            let gx = &input[2] * lambda;
            let lin = UPoly::new(vec![-gx, Rat::one()]);
            match h.div_exact(&lin) {
                Some(q) => h = q,
                None => return Ok(None),
            }
        }
        if h.degree() != Some(1) {
            return Ok(None);
        }
        let gamma = -h.coeff(0) / h.coeff(1);
        let image = mat3_vec(&m, &[alpha, beta, gamma]);
        let image = ProjPoint::new(image)?;
        if self.gens.iter().any(|g| !g.eval(image.coords()).is_zero()) {
            return Ok(None);
        }
        let book = FactorBookkeeping {
            resultant_degree: res_degree,
            base_contribution: self.base_mult * self.base.len() as u32,
            input_contribution: 1,
            residual_degree,
            common_degree: common.degree(),
            attempts: 0,
        };
        Ok(Some((image, book)))
    }
}

fn same_projection(p: &[Rat; 3], q: &[Rat; 3]) -> bool {
    (&p[0] * &q[1] - &p[1] * &q[0]).is_zero()
}

/// Generators of the subsystem of `system` whose members vanish at `x`.
pub(crate) fn through_point(system: &[HPoly], x: &ProjPoint) -> Result<Vec<HPoly>, InvolutionError> {
    let row: Vec<Rat> = system.iter().map(|g| g.eval(x.coords())).collect();
    if row.iter().all(Zero::is_zero) {
        return Err(InvolutionError::BasePointInput);
    }
    let ker = crate::exactpoly::kernel(&[row], system.len());
    Ok(ker
        .iter()
        .map(|v| {
            v.iter()
                .zip(system)
                .filter(|(c, _)| !c.is_zero())
                .fold(HPoly::zero(system[0].degree()), |acc, (c, g)| &acc + &g.scale(c))
        })
        .collect())
}
