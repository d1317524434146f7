use num_traits::Zero;

use crate::exactpoly::linalg::det3;
use crate::exactpoly::{kernel, monomials, HPoly, Rat};
use crate::projmaps::ProjPoint;

use super::InvolutionError;

/// Which of the two point-configuration constructions a set of points feeds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConfigKind {
    /// 7 points; net of cubics through them.
    Geiser,
    /// 8 points; sextics singular at all of them.
    Bertini,
}

impl ConfigKind {
    pub fn point_count(self) -> usize {
        match self {
            ConfigKind::Geiser => 7,
            ConfigKind::Bertini => 8,
        }
    }

    pub fn system_dimension(self) -> usize {
        match self {
            ConfigKind::Geiser => 3,
            ConfigKind::Bertini => 4,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConfigReport {
    pub pairwise_distinct: bool,
    pub no_three_collinear: bool,
    pub system_dimension: usize,
    pub expected_dimension: usize,
}

/// A validated point configuration together with its linear system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointConfig {
    kind: ConfigKind,
    points: Vec<ProjPoint>,
    system: Vec<HPoly>,
    report: ConfigReport,
}

impl PointConfig {
    pub fn new(kind: ConfigKind, points: Vec<ProjPoint>) -> Result<Self, InvolutionError> {
        if points.len() != kind.point_count() {
            return Err(InvolutionError::PointCount {
                expected: kind.point_count(),
                found: points.len(),
            });
        }
        check_distinct(&points)?;
        check_no_three_collinear(&points)?;
        let system = match kind {
            ConfigKind::Geiser => cubic_system(&points)?.to_vec(),
            ConfigKind::Bertini => sextic_system(&points)?.to_vec(),
        };
        let report = ConfigReport {
            pairwise_distinct: true,
            no_three_collinear: true,
            system_dimension: system.len(),
            expected_dimension: kind.system_dimension(),
        };
        Ok(PointConfig {
            kind,
            points,
            system,
            report,
        })
    }

    pub fn geiser(points: Vec<ProjPoint>) -> Result<Self, InvolutionError> {
        Self::new(ConfigKind::Geiser, points)
    }

    pub fn bertini(points: Vec<ProjPoint>) -> Result<Self, InvolutionError> {
        Self::new(ConfigKind::Bertini, points)
    }

    pub fn kind(&self) -> ConfigKind {
        self.kind
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    /// Basis of the net of cubics (Geiser) or the 4-space of sextics (Bertini).
    pub fn system(&self) -> &[HPoly] {
        &self.system
    }

    pub fn report(&self) -> &ConfigReport {
        &self.report
    }
}

fn check_distinct(points: &[ProjPoint]) -> Result<(), InvolutionError> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Err(InvolutionError::RepeatedPoint(i, j));
            }
        }
    }
    Ok(())
}

fn check_no_three_collinear(points: &[ProjPoint]) -> Result<(), InvolutionError> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let m = [
                    points[i].coords().clone(),
                    points[j].coords().clone(),
                    points[k].coords().clone(),
                ];
                if det3(&m).is_zero() {
                    return Err(InvolutionError::Collinear(i, j, k));
                }
            }
        }
    }
    Ok(())
}

fn solve_system(degree: u32, rows: Vec<Vec<Rat>>, expected: usize) -> Result<Vec<HPoly>, InvolutionError> {
    let ncols = monomials(degree).len();
    let basis = kernel(&rows, ncols);
    if basis.len() != expected {
        return Err(InvolutionError::SystemDimension {
            expected,
            found: basis.len(),
        });
    }
    Ok(basis
        .iter()
        .map(|v| HPoly::from_coefficient_vector(degree, v).canonical())
        .collect())
}

/// Basis of the cubics through seven points.
pub fn cubic_system(points: &[ProjPoint]) -> Result<[HPoly; 3], InvolutionError> {
    if points.len() != 7 {
        return Err(InvolutionError::PointCount {
            expected: 7,
            found: points.len(),
        });
    }
    check_distinct(points)?;
    let monos = monomials(3);
    let rows: Vec<Vec<Rat>> = points
        .iter()
        .map(|p| {
            monos
                .iter()
                .map(|m| HPoly::monomial(Rat::from_integer(1.into()), m.0).eval(p.coords()))
                .collect()
        })
        .collect();
    let basis = solve_system(3, rows, 3)?;
    Ok(basis.try_into().expect("three basis vectors"))
}

/// Basis of the sextics singular at eight points: all three partials vanish
/// at each point (the value then vanishes by Euler's relation).
pub fn sextic_system(points: &[ProjPoint]) -> Result<[HPoly; 4], InvolutionError> {
    if points.len() != 8 {
        return Err(InvolutionError::PointCount {
            expected: 8,
            found: points.len(),
        });
    }
    check_distinct(points)?;
    let monos = monomials(6);
    let partials: Vec<[HPoly; 3]> = monos
        .iter()
        .map(|m| HPoly::monomial(Rat::from_integer(1.into()), m.0).gradient())
        .collect();
    let mut rows = Vec::with_capacity(24);
    for p in points {
        for v in 0..3 {
            rows.push(partials.iter().map(|g| g[v].eval(p.coords())).collect());
        }
    }
    let basis = solve_system(6, rows, 4)?;
    Ok(basis.try_into().expect("four basis vectors"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64, i64)]) -> Vec<ProjPoint> {
        v.iter()
            .map(|&(a, b, c)| ProjPoint::from_ints(a, b, c).unwrap())
            .collect()
    }

    #[test]
    fn cubic_net_vanishes_at_points() {
        let p = pts(&[
            (1, 0, 0),
            (0, 1, 0),
            (0, 0, 1),
            (1, 1, 1),
            (1, 2, 3),
            (2, -1, 5),
            (3, 7, -2),
        ]);
        let net = cubic_system(&p).unwrap();
        for c in &net {
            assert_eq!(c.degree(), 3);
            for q in &p {
                assert!(c.eval(q.coords()).is_zero());
            }
        }
    }

    #[test]
    fn repeated_point_rejected() {
        let p = pts(&[
            (1, 0, 0),
            (0, 1, 0),
            (0, 0, 1),
            (1, 1, 1),
            (1, 2, 3),
            (2, 4, 6),
            (3, 7, -2),
        ]);
        assert!(matches!(cubic_system(&p), Err(InvolutionError::RepeatedPoint(4, 5))));
    }

    #[test]
    fn collinear_triple_rejected() {
        let p = pts(&[
            (1, 0, 0),
            (0, 1, 0),
            (1, 1, 0),
            (1, 1, 1),
            (1, 2, 3),
            (2, -1, 5),
            (3, 7, -2),
        ]);
        assert!(matches!(
            PointConfig::geiser(p),
            Err(InvolutionError::Collinear(0, 1, 2))
        ));
    }
}
