use std::fmt;

use num_traits::Zero;

use crate::exactpoly::linalg::primitive_vector;
use crate::exactpoly::Rat;

use super::MapError;

/// A point of the projective plane, stored as its canonical representative:
/// coprime integer coordinates with the first nonzero one positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ProjPoint([Rat; 3]);

impl ProjPoint {
    pub fn new(coords: [Rat; 3]) -> Result<Self, MapError> {
        if coords.iter().all(Zero::is_zero) {
            return Err(MapError::ZeroPoint);
        }
        let v = primitive_vector(&coords);
        Ok(ProjPoint([v[0].clone(), v[1].clone(), v[2].clone()]))
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self, MapError> {
        Self::new([x, y, z].map(|c| Rat::from_integer(c.into())))
    }

    pub fn coords(&self) -> &[Rat; 3] {
        &self.0
    }

    /// Line through two distinct points, as the coefficient vector of its equation.
    pub fn join(&self, other: &Self) -> Option<[Rat; 3]> {
        let line = cross(&self.0, &other.0);
        (!line.iter().all(Zero::is_zero)).then_some(line)
    }
}

pub fn cross(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Prints as `(a:b:c)`.
impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}
