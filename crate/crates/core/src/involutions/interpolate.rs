use num_traits::{One, Zero};

use crate::exactpoly::{kernel, monomials, HPoly, Rat};
use crate::projmaps::{MapValue, ProjPoint, RationalMap};
use crate::rng::SeededRng;

use super::geiser::GeiserInvolution;
use super::InvolutionError;

/// Octics with a triple point at each of the given points. For seven
/// general points this space is 3-dimensional and contains the Geiser map's
/// components.
pub fn octic_triple_point_system(points: &[ProjPoint]) -> Result<Vec<HPoly>, InvolutionError> {
    let monos = monomials(8);
    let second: Vec<Vec<HPoly>> = monos
        .iter()
        .map(|m| {
            let f = HPoly::monomial(Rat::one(), m.0);
            let mut out = Vec::with_capacity(6);
            for i in 0..3 {
                let fi = f.partial(i);
                for j in i..3 {
                    out.push(fi.partial(j));
                }
            }
            out
        })
        .collect();
    let mut rows = Vec::with_capacity(6 * points.len());
    for p in points {
        for k in 0..6 {
            rows.push(second.iter().map(|s| s[k].eval(p.coords())).collect());
        }
    }
    let basis = kernel(&rows, monos.len());
    Ok(basis
        .iter()
        .map(|v| HPoly::from_coefficient_vector(8, v).canonical())
        .collect())
}

/// Fits a map whose components lie in the span of `basis` to the given
/// `(point, image)` samples, then checks it reproduces every sample.
pub fn interpolate_map(basis: &[HPoly], samples: &[(ProjPoint, ProjPoint)]) -> Result<RationalMap, InvolutionError> {
    let n = basis.len();
    if n == 0 {
        return Err(InvolutionError::Interpolation("empty basis".into()));
    }
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(3 * samples.len());
    for (x, y) in samples {
        let w: Vec<Rat> = basis.iter().map(|b| b.eval(x.coords())).collect();
        let yc = y.coords();
        for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
            // y_j f_i - y_i f_j = 0
            let mut row = vec![Rat::zero(); 3 * n];
            for k in 0..n {
                row[i * n + k] = &yc[j] * &w[k];
                row[j * n + k] = -(&yc[i] * &w[k]);
            }
            rows.push(row);
        }
    }
    let ker = kernel(&rows, 3 * n);
    if ker.len() != 1 {
        return Err(InvolutionError::Interpolation(format!(
            "solution space has dimension {}",
            ker.len()
        )));
    }
    let v = &ker[0];
    let comps: [HPoly; 3] = std::array::from_fn(|i| {
        basis
            .iter()
            .enumerate()
            .filter(|(k, _)| !v[i * n + k].is_zero())
            .fold(HPoly::zero(basis[0].degree()), |acc, (k, b)| {
                &acc + &b.scale(&v[i * n + k])
            })
    });
    let map = RationalMap::new(comps)?;
    for (x, y) in samples {
        if map.eval(x) != MapValue::Point(y.clone()) {
            return Err(InvolutionError::Interpolation(format!("fit disagrees at {x}")));
        }
    }
    Ok(map)
}

/// Reconstructs the degree-8 Geiser map from `count` evaluated samples.
pub fn interpolate_geiser(g: &GeiserInvolution, count: usize, seed: u64) -> Result<RationalMap, InvolutionError> {
    let basis = octic_triple_point_system(g.config().points())?;
    if basis.len() != 3 {
        return Err(InvolutionError::SystemDimension {
            expected: 3,
            found: basis.len(),
        });
    }
    let mut rng = SeededRng::new(seed);
    let mut samples = Vec::with_capacity(count);
    let mut tries = 0;
    while samples.len() < count {
        tries += 1;
        if tries > 4 * count + 16 {
            return Err(InvolutionError::Interpolation("too few usable samples".into()));
        }
        let Ok(x) = ProjPoint::new(std::array::from_fn(|_| rng.rat_in(-9, 9))) else {
            continue;
        };
        if let Ok(y) = g.eval(&x) {
            samples.push((x, y));
        }
    }
    interpolate_map(&basis, &samples)
}
