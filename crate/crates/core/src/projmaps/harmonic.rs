//! Cross-ratios and harmonic conjugation on a line parameterized by `t`,
//! including the point at infinity.

use num_traits::{One, Zero};

use crate::exactpoly::Rat;

use super::MapError;

/// Affine line parameter or the point at infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LineParam {
    Finite(Rat),
    Infinity,
}

impl LineParam {
    pub fn int(n: i64) -> Self {
        LineParam::Finite(Rat::from_integer(n.into()))
    }

    fn homogeneous(&self) -> (Rat, Rat) {
        match self {
            LineParam::Finite(t) => (t.clone(), Rat::one()),
            LineParam::Infinity => (Rat::one(), Rat::zero()),
        }
    }

    fn from_homogeneous(num: Rat, den: Rat) -> Self {
        if den.is_zero() {
            LineParam::Infinity
        } else {
            LineParam::Finite(num / den)
        }
    }
}

/// The harmonic conjugate of `t` with respect to the two roots of
/// `a u^2 + b u + c`: `t' = -(b t + 2c) / (2a t + b)`.
pub fn harmonic_conjugate(quad: (&Rat, &Rat, &Rat), t: &LineParam) -> Result<LineParam, MapError> {
    let (a, b, c) = quad;
    let two = Rat::from_integer(2.into());
    if a.is_zero() || (b * b - Rat::from_integer(4.into()) * a * c).is_zero() {
        return Err(MapError::DegenerateQuadratic);
    }
    let (ts, tw) = t.homogeneous();
    let num = -(b * &ts + &two * c * &tw);
    let den = &two * a * &ts + b * &tw;
    if num.is_zero() && den.is_zero() {
        return Err(MapError::DegenerateQuadratic);
    }
    Ok(LineParam::from_homogeneous(num, den))
}

fn det2(u: &(Rat, Rat), v: &(Rat, Rat)) -> Rat {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// Cross-ratio `(a, b; c, d) = ((c - a)(d - b)) / ((c - b)(d - a))`.
pub fn cross_ratio(a: &LineParam, b: &LineParam, c: &LineParam, d: &LineParam) -> Result<LineParam, MapError> {
    let pts = [a, b, c, d].map(LineParam::homogeneous);
    let mut distinct: Vec<&(Rat, Rat)> = Vec::new();
    for p in &pts {
        if distinct.iter().all(|q| !det2(p, q).is_zero()) {
            distinct.push(p);
        }
    }
    if distinct.len() < 3 {
        return Err(MapError::TooFewDistinct);
    }
    let [a, b, c, d] = pts;
    let num = det2(&c, &a) * det2(&d, &b);
    let den = det2(&c, &b) * det2(&d, &a);
    Ok(LineParam::from_homogeneous(num, den))
}
