use num_traits::Zero;

use crate::exactpoly::linalg::{det3, mat3_vec, rank};
use crate::exactpoly::{rational_roots, resultant_z, BForm, HPoly, Rat, Ring, UPoly};
use crate::rng::SeededRng;

use super::{MapError, ProjPoint, RationalMap};

/// Rational base points of a map, plus the degree of the part of the
/// projected base locus that has no rational linear factor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasePoints {
    pub points: Vec<ProjPoint>,
    pub irrational_degree: u32,
}

const ATTEMPTS: u32 = 16;

/// Common zeros of the components with rational coordinates.
///
/// Eliminates `z` from random combinations of the components after a
/// seeded coordinate change, then lifts every rational root back.
pub fn base_points(map: &RationalMap, seed: u64) -> Result<BasePoints, MapError> {
    if map.degree() == 0 {
        return Ok(BasePoints {
            points: Vec::new(),
            irrational_degree: 0,
        });
    }
    let comps = map.components();
    let mut rng = SeededRng::new(seed);
    for _ in 0..ATTEMPTS {
        let mix: Vec<Vec<Rat>> = (0..3).map(|_| (0..3).map(|_| rng.rat_in(-3, 3)).collect()).collect();
        let m = rng.matrix3(2);
        if rank(&mix, 3) < 3 || det3(&m).is_zero() {
            continue;
        }
        let gens: Vec<HPoly> = mix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(comps)
                    .fold(HPoly::zero(map.degree()), |acc, (c, g)| &acc + &g.scale(c))
                    .linear_pullback(&m)
            })
            .collect();
        let (Ok(r2), Ok(r3)) = (resultant_z(&gens[0], &gens[1]), resultant_z(&gens[0], &gens[2])) else {
            continue;
        };
        if r2.is_zero() || r3.is_zero() {
            continue;
        }
        let Ok(g) = r2.gcd(&r3) else { continue };
        let mut rest = g.clone();
        let mut points = Vec::new();
        for (a, b) in g.rational_roots().map_err(|_| MapError::BaseLocus)? {
            let lin = BForm::vanishing_at(&a, &b);
            while let Some(q) = rest.div_exact(&lin) {
                rest = q;
            }
            let h = gens
                .iter()
                .map(|f| f.restrict_xy(&a, &b))
                .fold(UPoly::<Rat>::zero(), |acc, r| acc.gcd(&r));
            if h.is_zero() {
                // the whole vertical line would be a common component
                return Err(MapError::BaseLocus);
            }
            let zs = rational_roots(&h).map_err(|_| MapError::BaseLocus)?;
            for zr in zs {
                let v = [a.clone(), b.clone(), zr];
                let p = ProjPoint::new(mat3_vec(&m, &v))?;
                if comps.iter().all(|c| c.eval(p.coords()).is_zero()) {
                    points.push(p);
                }
            }
        }
        points.sort();
        points.dedup();
        return Ok(BasePoints {
            points,
            irrational_degree: rest.degree(),
        });
    }
    Err(MapError::BaseLocus)
}
