use std::fmt;

use num_traits::Zero;

use crate::exactpoly::integer_normalizer;
use crate::exactpoly::linalg::{adjugate3, det3};
use crate::exactpoly::{linear_forms, HPoly, Rat};

use super::{MapError, ProjPoint};

/// Outcome of evaluating a rational map at a point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MapValue {
    Point(ProjPoint),
    /// Every component vanishes: the point is a base point of the map.
    Indeterminate,
}

impl MapValue {
    pub fn point(self) -> Option<ProjPoint> {
        match self {
            MapValue::Point(p) => Some(p),
            MapValue::Indeterminate => None,
        }
    }
}

/// Plane rational map given by three coprime forms of equal degree.
///
/// Construction divides out the gcd of the components and rescales them
/// jointly to coprime integer coefficients, so two maps are equal exactly
/// when they agree as rational maps with the same normalized components.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalMap {
    components: [HPoly; 3],
}

impl RationalMap {
    pub fn new(components: [HPoly; 3]) -> Result<Self, MapError> {
        let d = components[0].degree();
        if components.iter().any(|c| c.degree() != d) {
            return Err(MapError::UnequalDegrees);
        }
        if components.iter().all(HPoly::is_zero) {
            return Err(MapError::ZeroMap);
        }
        let mut g: Option<HPoly> = None;
        for c in components.iter().filter(|c| !c.is_zero()) {
            g = Some(match g {
                None => c.canonical(),
                Some(acc) => acc.gcd(c).expect("nonzero inputs"),
            });
            if g.as_ref().is_some_and(|g| g.degree() == 0) {
                break;
            }
        }
        let g = g.unwrap();
        let reduced: [HPoly; 3] = if g.degree() == 0 {
            components
        } else {
            let nd = d - g.degree();
            std::array::from_fn(|i| {
                if components[i].is_zero() {
                    HPoly::zero(nd)
                } else {
                    components[i].div_exact(&g).expect("gcd divides every component")
                }
            })
        };
        Ok(RationalMap {
            components: normalize_jointly(reduced),
        })
    }

    pub fn identity() -> Self {
        RationalMap {
            components: [HPoly::x(), HPoly::y(), HPoly::z()],
        }
    }

    /// The linear map `v -> M v`.
    pub fn linear(m: &[[Rat; 3]; 3]) -> Result<Self, MapError> {
        if det3(m).is_zero() {
            return Err(MapError::SingularMatrix);
        }
        Self::new(linear_forms(m))
    }

    /// The inverse of the linear map `v -> M v` (its adjugate, projectively).
    pub fn linear_inverse(m: &[[Rat; 3]; 3]) -> Result<Self, MapError> {
        if det3(m).is_zero() {
            return Err(MapError::SingularMatrix);
        }
        Self::new(linear_forms(&adjugate3(m)))
    }

    pub fn components(&self) -> &[HPoly; 3] {
        &self.components
    }

    /// Degree after removal of common factors.
    pub fn degree(&self) -> u32 {
        self.components[0].degree()
    }

    pub fn eval(&self, pt: &ProjPoint) -> MapValue {
        let v: [Rat; 3] = std::array::from_fn(|i| self.components[i].eval(pt.coords()));
        match ProjPoint::new(v) {
            Ok(p) => MapValue::Point(p),
            Err(_) => MapValue::Indeterminate,
        }
    }

    /// `x f_2 - y f_1`, `x f_3 - z f_1`, `y f_3 - z f_2`.
    pub fn fixed_point_minors(&self) -> [HPoly; 3] {
        let [f1, f2, f3] = &self.components;
        let (x, y, z) = (HPoly::x(), HPoly::y(), HPoly::z());
        [
            &(&x * f2) - &(&y * f1),
            &(&x * f3) - &(&z * f1),
            &(&y * f3) - &(&z * f2),
        ]
    }

    /// Substitutes `g` into `self` without removing common factors.
    pub fn substitute(&self, g: &RationalMap) -> Result<[HPoly; 3], MapError> {
        let out: [HPoly; 3] = std::array::from_fn(|i| {
            self.components[i]
                .substitute(&g.components)
                .expect("components share a degree")
        });
        if out.iter().all(HPoly::is_zero) {
            return Err(MapError::ZeroComposition);
        }
        Ok(out)
    }
}

/// `f ∘ g`, normalized.
pub fn compose(f: &RationalMap, g: &RationalMap) -> Result<RationalMap, MapError> {
    RationalMap::new(f.substitute(g)?)
}

/// True iff the map is the identity as a rational map (all fixed-point minors vanish).
pub fn is_identity(f: &RationalMap) -> bool {
    f.fixed_point_minors().iter().all(HPoly::is_zero)
}

/// `φ ∘ σ ∘ φ⁻¹`.
pub fn conjugate(sigma: &RationalMap, phi: &RationalMap, phi_inverse: &RationalMap) -> Result<RationalMap, MapError> {
    if !is_identity(&compose(phi, phi_inverse)?) || !is_identity(&compose(phi_inverse, phi)?) {
        return Err(MapError::NotInverse);
    }
    compose(phi, &compose(sigma, phi_inverse)?)
}

fn normalize_jointly(c: [HPoly; 3]) -> [HPoly; 3] {
    let lead = c
        .iter()
        .find_map(|p| p.leading().map(|(_, v)| v.clone()))
        .expect("some component is nonzero");
    let all: Vec<&Rat> = c.iter().flat_map(|p| p.terms().map(|(_, v)| v)).collect();
    let s = integer_normalizer(all.iter().copied(), &lead);
    c.map(|p| p.scale(&s))
}

/// Prints as `(f1 : f2 : f3)`.
impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.components;
        write!(f, "({a} : {b} : {c})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: HPoly, b: HPoly, c: HPoly) -> RationalMap {
        RationalMap::new([a, b, c]).unwrap()
    }

    fn quad() -> RationalMap {
        let (x, y, z) = (HPoly::x(), HPoly::y(), HPoly::z());
        m(&x * &y, &x * &z, &y * &z)
    }

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::from_ints(a, b, c).unwrap()
    }

    #[test]
    fn identity_examples() {
        assert!(is_identity(&RationalMap::identity()));
        let (x, y, z) = (HPoly::x(), HPoly::y(), HPoly::z());
        let scaled = m(&x * &x, &x * &y, &x * &z);
        assert!(is_identity(&scaled));
        assert_eq!(scaled, RationalMap::identity());
        assert!(!is_identity(&m(y.clone(), x.clone(), z.clone())));
    }

    #[test]
    fn quadratic_map_is_an_involution() {
        let q = quad();
        let qq = compose(&q, &q).unwrap();
        assert_eq!(qq, RationalMap::identity());
        assert_eq!(compose(&RationalMap::identity(), &q).unwrap(), q);
    }

    #[test]
    fn evaluation() {
        let q = quad();
        assert_eq!(q.eval(&pt(1, 1, 1)), MapValue::Point(pt(1, 1, 1)));
        assert_eq!(q.eval(&pt(0, 1, 0)), MapValue::Indeterminate);
        assert_eq!(q.eval(&pt(1, 2, 4)), MapValue::Point(pt(1, 2, 4)));
        assert_eq!(q.eval(&pt(1, 0, 0)), MapValue::Indeterminate);
    }

    #[test]
    fn conjugation() {
        let q = quad();
        let id = RationalMap::identity();
        assert_eq!(conjugate(&q, &id, &id).unwrap(), q);
        let lin = [[1, 1, 0], [0, 1, 0], [2, 0, 1]].map(|r| r.map(|v: i64| Rat::from_integer(v.into())));
        let phi = RationalMap::linear(&lin).unwrap();
        let phi_inv = RationalMap::linear_inverse(&lin).unwrap();
        let c = conjugate(&q, &phi, &phi_inv).unwrap();
        assert_eq!(c.degree(), 2);
        assert!(is_identity(&compose(&c, &c).unwrap()));
        assert!(matches!(conjugate(&q, &phi, &phi), Err(MapError::NotInverse)));
    }
}
