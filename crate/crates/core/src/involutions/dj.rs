use num_traits::Zero;

use crate::exactpoly::linalg::adjugate3;
use crate::exactpoly::{bform_discriminant, frame_sending_y_to, BForm, HPoly, Rat};
use crate::projmaps::{ProjPoint, RationalMap};

use super::InvolutionError;

/// What validation was actually performed on a DJ instance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DjReport {
    /// Input was flagged as trusted; the resultant singularity search was skipped.
    pub trusted: bool,
    pub singularities_checked: bool,
    /// `B^2 - 4 A Cd`, nonzero and squarefree of degree `2d - 2`.
    pub discriminant: BForm,
}

/// A curve `C = A y^2 + B y + Cd` in the frame where the center is `(0:1:0)`.
///
/// `A`, `B`, `Cd` are binary forms in `(x, z)` (`s = x`, `t = z`) of degrees
/// `d-2`, `d-1`, `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DjData {
    pub d: u32,
    pub a: BForm,
    pub b: BForm,
    pub cd: BForm,
    pub center: ProjPoint,
    /// `v = frame * v'` takes normal-frame coordinates to the user's coordinates.
    pub frame: [[Rat; 3]; 3],
    pub report: DjReport,
}

impl DjData {
    /// Analyses `curve` around `center` and validates the DJ conditions.
    pub fn new(curve: &HPoly, center: &ProjPoint, trusted: bool) -> Result<Self, InvolutionError> {
        let d = curve.degree();
        if d < 2 {
            return Err(InvolutionError::DegreeTooSmall(d));
        }
        if curve.is_zero() {
            return Err(InvolutionError::ZeroCurve);
        }
        let frame = frame_sending_y_to(center.coords());
        let moved = curve.linear_pullback(&frame);
        let top = moved.terms().map(|(m, _)| m.0[1]).max().unwrap_or(0);
        if top != 2 {
            return Err(InvolutionError::CenterMultiplicity {
                expected: d - 2,
                found: d.saturating_sub(top),
            });
        }
        let mut parts = [BForm::zero(d), BForm::zero(d - 1), BForm::zero(d - 2)];
        let mut coeffs: [Vec<Rat>; 3] = parts.clone().map(|p| p.coeffs().to_vec());
        for (m, c) in moved.terms() {
            let [i, j, _] = m.0;
            coeffs[j as usize][i as usize] = c.clone();
        }
        for (p, c) in parts.iter_mut().zip(coeffs) {
            *p = BForm::new(c);
        }
        let [cd, b, a] = parts;

        if !a.is_squarefree()? {
            return Err(InvolutionError::NonOrdinary);
        }
        let mut g = a.gcd(&b)?;
        if !cd.is_zero() {
            g = g.gcd(&cd)?;
        }
        if g.degree() > 0 {
            return Err(InvolutionError::LineThroughCenter);
        }
        let singularities_checked = !trusted;
        if singularities_checked && has_extra_singularity(&a, &b, &cd)? {
            return Err(InvolutionError::ExtraSingularity);
        }
        let discriminant = bform_discriminant(&a, &b, &cd)?;
        if discriminant.is_zero() || !discriminant.is_squarefree()? {
            return Err(InvolutionError::DiscriminantNotSquarefree);
        }
        Ok(DjData {
            d,
            a,
            b,
            cd,
            center: center.clone(),
            frame,
            report: DjReport {
                trusted,
                singularities_checked,
                discriminant,
            },
        })
    }

    /// Components of the involution in the normal frame:
    /// `( x(2Ay+B) : -(By+2Cd) : z(2Ay+B) )`.
    pub fn normal_form_components(&self) -> [HPoly; 3] {
        let (x, y, z) = (HPoly::x(), HPoly::y(), HPoly::z());
        let two = Rat::from_integer(2.into());
        let a = xz_form(&self.a);
        let b = xz_form(&self.b);
        let cd = xz_form(&self.cd);
        let u = &(&a * &y).scale(&two) + &b;
        let v = -&(&(&b * &y) + &cd.scale(&two));
        [&x * &u, v, &z * &u]
    }

    /// The involution in the user's coordinates.
    pub fn map(&self) -> Result<RationalMap, InvolutionError> {
        let normal = self.normal_form_components();
        let inv = adjugate3(&self.frame);
        let pulled: Vec<HPoly> = normal.iter().map(|c| c.linear_pullback(&inv)).collect();
        let deg = pulled[0].degree();
        let comps: [HPoly; 3] = std::array::from_fn(|i| {
            let mut acc = HPoly::zero(deg);
            for (j, p) in pulled.iter().enumerate() {
                if !self.frame[i][j].is_zero() {
                    acc = &acc + &p.scale(&self.frame[i][j]);
                }
            }
            acc
        });
        let map = RationalMap::new(comps)?;
        if map.degree() != self.d {
            return Err(InvolutionError::DegreeDrop {
                expected: self.d,
                found: map.degree(),
            });
        }
        Ok(map)
    }

    /// Number of singular fibres of the conic bundle: distinct roots of the discriminant.
    pub fn discriminant_roots(&self) -> Result<u32, InvolutionError> {
        Ok(self.report.discriminant.distinct_root_count()?)
    }
}

/// Embeds a binary form in `(s, t)` as a plane form in `(x, z)`.
pub(crate) fn xz_form(f: &BForm) -> HPoly {
    let d = f.degree();
    HPoly::from_terms(
        d,
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| ([i as u32, 0, d - i as u32], c.clone())),
    )
    .expect("homogeneous by construction")
}

/// Searches for singular points of `A y^2 + B y + Cd` other than `(0:1:0)`.
///
/// `C_y = 2Ay + B` is linear in `y`, so its resultants with `C_x` and `C_z`
/// have the closed form `g2 B^2 - 2 g1 A B + 4 g0 A^2` for `g = g2 y^2 + g1 y + g0`.
/// A common root off `A = 0` is a singular point. Roots on `A = 0` come from
/// the center itself and are stripped.
fn has_extra_singularity(a: &BForm, b: &BForm, cd: &BForm) -> Result<bool, InvolutionError> {
    if a.degree() == 0 {
        // conic: smooth iff its symmetric matrix is invertible, i.e. B^2 - 4 A Cd has distinct roots
        let disc = bform_discriminant(a, b, cd)?;
        return Ok(disc.is_zero() || !disc.is_squarefree()?);
    }
    let two = Rat::from_integer(2.into());
    let four = Rat::from_integer(4.into());
    let elim = |g2: BForm, g1: BForm, g0: BForm| -> Result<BForm, InvolutionError> {
        let t2 = g2.mul(&b.mul(b));
        let t1 = g1.mul(a).mul(b).scale(&-&two);
        let t0 = g0.mul(&a.mul(a)).scale(&four);
        Ok(t2.checked_add(&t1)?.checked_add(&t0)?)
    };
    let r1 = elim(a.partial_s(), b.partial_s(), cd.partial_s())?;
    let r2 = elim(a.partial_t(), b.partial_t(), cd.partial_t())?;
    if r1.is_zero() && r2.is_zero() {
        return Ok(true);
    }
    let mut g = r1.gcd(&r2)?;
    loop {
        let h = g.gcd(a)?;
        if h.degree() == 0 {
            break;
        }
        g = g.div_exact(&h).expect("gcd divides");
    }
    Ok(g.degree() > 0)
}
