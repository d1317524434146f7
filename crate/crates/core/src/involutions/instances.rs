use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::exactpoly::linalg::{adjugate3, det3};
use crate::exactpoly::{BForm, HPoly, Rat};
use crate::projmaps::ProjPoint;
use crate::rng::SeededRng;

use super::dj::{xz_form, DjData};

/// Seeded valid DJ curve of degree `d >= 2` with center `(0:1:0)`.
///
/// `A` is a product of distinct factors `x - a z`; `B` and `Cd` have
/// coefficients in `[-3, 3]`. Draws repeat until full validation passes.
pub fn dj_instance(d: u32, seed: u64) -> (HPoly, ProjPoint) {
    assert!(d >= 2, "DJ instances need degree at least 2");
    let mut rng = SeededRng::new(seed);
    let center = ProjPoint::from_ints(0, 1, 0).expect("nonzero");
    loop {
        let mut roots = BTreeSet::new();
        while roots.len() < (d - 2) as usize {
            roots.insert(rng.int_in(-3, 3));
        }
        let a = roots.iter().fold(BForm::constant(Rat::one()), |acc, &r| {
            acc.mul(&BForm::vanishing_at(&Rat::from_integer(r.into()), &Rat::one()))
        });
        let b = BForm::new((0..d).map(|_| rng.rat_in(-3, 3)).collect());
        let cd = BForm::new((0..=d).map(|_| rng.rat_in(-3, 3)).collect());
        let y = HPoly::y();
        let curve = &(&(&xz_form(&a) * &y.pow(2)) + &(&xz_form(&b) * &y)) + &xz_form(&cd);
        if DjData::new(&curve, &center, false).is_ok() {
            return (curve.canonical(), center);
        }
    }
}

/// [`dj_instance`] moved by a seeded invertible integer change of coordinates,
/// so the center is a general point.
pub fn dj_instance_moved(d: u32, seed: u64) -> (HPoly, ProjPoint) {
    let (curve, _) = dj_instance(d, seed);
    let mut rng = SeededRng::new(seed ^ 0x9e37_79b9_7f4a_7c15);
    let m = loop {
        let m = rng.matrix3(2);
        if !det3(&m).is_zero() {
            break m;
        }
    };
    // new curve: C(M^{-1} v); new center: M (0,1,0)
    let moved = curve.linear_pullback(&adjugate3(&m)).canonical();
    let center =
        ProjPoint::new([m[0][1].clone(), m[1][1].clone(), m[2][1].clone()]).expect("column of an invertible matrix");
    (moved, center)
}
