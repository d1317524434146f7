//! Exact rational scalars, homogeneous polynomials, binary forms, resultants
//! and exact linear algebra.

mod bform;
mod hpoly;
pub mod linalg;
mod ring;
mod roots;

pub use bform::{bform_discriminant, BForm};
pub use hpoly::{frame_sending_y_to, integer_normalizer, linear_forms, monomials, HPoly, Mono};
pub use linalg::{kernel, rank};
pub use ring::{det_bareiss, sylvester_matrix, Ring, UPoly};
pub use roots::rational_roots;

use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("both inputs are zero")]
    BothZero,
    #[error("zero form")]
    ZeroForm,
    #[error("inhomogeneous polynomial: expected degree {expected}, found a term of degree {found}")]
    Inhomogeneous { expected: u32, found: u32 },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("quadratic coefficient vanishes identically")]
    DegenerateQuadratic,
    #[error("form is not squarefree")]
    NotSquarefree,
    #[error("zero input to resultant")]
    ZeroResultantInput,
    #[error("leading coefficient in the eliminated variable vanishes")]
    LeadingVanishes,
    #[error("coefficient too large for rational root search")]
    CoefficientTooLarge,
}

/// Sylvester resultant of two polynomials in their distinguished variable.
pub fn resultant<R: Ring>(f: &UPoly<R>, g: &UPoly<R>) -> Result<R, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroResultantInput);
    }
    Ok(det_bareiss(sylvester_matrix(f, g)))
}

impl HPoly {
    /// View as a polynomial in `z` with coefficients in `Q[x]`, at `y = 1`.
    fn z_over_x_at_y1(&self) -> UPoly<UPoly<Rat>> {
        let dz = self.terms().map(|(m, _)| m.0[2]).max().unwrap_or(0) as usize;
        let mut outer: Vec<Vec<Rat>> = vec![Vec::new(); dz + 1];
        for (m, c) in self.terms() {
            let [i, _, k] = m.0;
            let inner = &mut outer[k as usize];
            if inner.len() <= i as usize {
                inner.resize(i as usize + 1, Rat::zero());
            }
            inner[i as usize] += c;
        }
        UPoly::new(outer.into_iter().map(UPoly::new).collect())
    }

    /// Restriction to the vertical line over `(x:y) = (a:b)`, as a polynomial in `z`.
    pub fn restrict_xy(&self, a: &Rat, b: &Rat) -> UPoly<Rat> {
        let mut coeffs = vec![Rat::zero(); self.degree() as usize + 1];
        for (m, c) in self.terms() {
            let [i, j, k] = m.0;
            coeffs[k as usize] += c * num_traits::pow(a.clone(), i as usize) * num_traits::pow(b.clone(), j as usize);
        }
        UPoly::new(coeffs)
    }
}

/// Eliminates `z` from two forms, giving a binary form in `(x, y)` of degree
/// `deg f * deg g` (with `s = x`, `t = y`). Both forms must not vanish at
/// `(0:0:1)`, so their `z`-degrees stay fixed under specialization.
///
/// The eliminant is evaluated at `y = 1` and `x = 0, 1, ..., mn` and
/// recovered by Newton interpolation.
pub fn resultant_z(f: &HPoly, g: &HPoly) -> Result<BForm, PolyError> {
    check_resultant_z_inputs(f, g)?;
    let total = (f.degree() * g.degree()) as usize;
    let one = Rat::one();
    let (sf, sg) = (content_scale(f), content_scale(g));
    let (fi, gi) = (f.scale(&sf), g.scale(&sg));
    let xs: Vec<Rat> = (0..=total).map(|i| Rat::from_integer(i.into())).collect();
    let values: Vec<Rat> = xs
        .iter()
        .map(|a| {
            let fa = fi.restrict_xy(a, &one);
            let ga = gi.restrict_xy(a, &one);
            det_bareiss(sylvester_matrix(&fa, &ga))
        })
        .collect();
    // Res(c f, g) = c^deg(g) Res(f, g)
    let fix = num_traits::pow(sf, g.degree() as usize) * num_traits::pow(sg, f.degree() as usize);
    let values: Vec<Rat> = values.into_iter().map(|v| v / &fix).collect();
    let mut coeffs = newton_interpolate(&xs, values);
    coeffs.resize(total + 1, Rat::zero());
    Ok(BForm::new(coeffs))
}

/// Same eliminant through a Sylvester determinant over `Q[x]`.
pub fn resultant_z_symbolic(f: &HPoly, g: &HPoly) -> Result<BForm, PolyError> {
    check_resultant_z_inputs(f, g)?;
    let r = resultant(&f.z_over_x_at_y1(), &g.z_over_x_at_y1())?;
    let mut coeffs: Vec<Rat> = r.coeffs().to_vec();
    coeffs.resize((f.degree() * g.degree()) as usize + 1, Rat::zero());
    Ok(BForm::new(coeffs))
}

fn check_resultant_z_inputs(f: &HPoly, g: &HPoly) -> Result<(), PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroResultantInput);
    }
    if f.coeff([0, 0, f.degree()]).is_zero() || g.coeff([0, 0, g.degree()]).is_zero() {
        return Err(PolyError::LeadingVanishes);
    }
    Ok(())
}

/// Common denominator of the coefficients of `f`.
fn content_scale(f: &HPoly) -> Rat {
    let l = f.terms().fold(num_bigint::BigInt::one(), |acc, (_, c)| {
        num_integer::Integer::lcm(&acc, c.denom())
    });
    Rat::from_integer(l)
}

/// Coefficients (low to high) of the polynomial through `(xs[i], ys[i])`.
fn newton_interpolate(xs: &[Rat], mut ys: Vec<Rat>) -> Vec<Rat> {
    let n = xs.len();
    for j in 1..n {
        for i in (j..n).rev() {
            ys[i] = (&ys[i] - &ys[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut coeffs = vec![Rat::zero(); n];
    for k in (0..n).rev() {
        // coeffs <- coeffs * (x - xs[k]) + ys[k]
        let mut next = vec![Rat::zero(); n];
        for i in 0..n {
            if coeffs[i].is_zero() {
                continue;
            }
            if i + 1 < n {
                next[i + 1] += &coeffs[i];
            }
            next[i] -= &coeffs[i] * &xs[k];
        }
        next[0] += &ys[k];
        coeffs = next;
    }
    coeffs
}
