use num_traits::Zero;
use proptest::prelude::*;

use cremona::exactpoly::{monomials, resultant_z, resultant_z_symbolic, BForm, HPoly, Rat};
use cremona::projmaps::{compose, cross_ratio, harmonic_conjugate, LineParam, MapValue, ProjPoint, RationalMap};

fn r(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

fn hpoly(degree: u32) -> impl Strategy<Value = HPoly> {
    let n = monomials(degree).len();
    prop::collection::vec(-4i64..=4, n).prop_map(move |c| {
        let c: Vec<Rat> = c.into_iter().map(r).collect();
        HPoly::from_coefficient_vector(degree, &c)
    })
}

fn nonzero_hpoly(degree: u32) -> impl Strategy<Value = HPoly> {
    hpoly(degree).prop_filter("nonzero", |p| !p.is_zero())
}

fn point() -> impl Strategy<Value = ProjPoint> {
    (-6i64..=6, -6i64..=6, -6i64..=6).prop_filter_map("zero", |(a, b, c)| ProjPoint::from_ints(a, b, c).ok())
}

fn quadratic_map() -> impl Strategy<Value = RationalMap> {
    (hpoly(2), hpoly(2), hpoly(2)).prop_filter_map("degenerate", |(a, b, c)| {
        RationalMap::new([a, b, c]).ok().filter(|m| m.degree() == 2)
    })
}

fn linear_map() -> impl Strategy<Value = RationalMap> {
    prop::array::uniform3(prop::array::uniform3(-3i64..=3))
        .prop_filter_map("singular", |m| RationalMap::linear(&m.map(|row| row.map(r))).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gcd_divides_and_keeps_common_factor(f in nonzero_hpoly(2), g in nonzero_hpoly(2), h in nonzero_hpoly(1)) {
        let fh = &f * &h;
        let gh = &g * &h;
        let d = fh.gcd(&gh).unwrap();
        prop_assert!(fh.div_exact(&d).is_some());
        prop_assert!(gh.div_exact(&d).is_some());
        prop_assert!(d.div_exact(&h).is_some());
    }

    #[test]
    fn interpolated_eliminant_agrees(f in nonzero_hpoly(3), g in nonzero_hpoly(2)) {
        prop_assume!(!f.coeff([0, 0, 3]).is_zero() && !g.coeff([0, 0, 2]).is_zero());
        prop_assert_eq!(resultant_z(&f, &g).unwrap(), resultant_z_symbolic(&f, &g).unwrap());
    }

    #[test]
    fn eliminant_vanishes_at_projections_of_common_points(p in point(), f in nonzero_hpoly(2), g in nonzero_hpoly(2)) {
        // force both curves through p
        let fp = f.eval(p.coords());
        let gp = g.eval(p.coords());
        let zz = HPoly::monomial(r(1), [0, 0, 2]);
        let zp = zz.eval(p.coords());
        prop_assume!(!zp.is_zero());
        let f2 = &f - &zz.scale(&(fp / &zp));
        let g2 = &g - &zz.scale(&(gp / &zp));
        prop_assume!(!f2.coeff([0, 0, 2]).is_zero() && !g2.coeff([0, 0, 2]).is_zero());
        let res = resultant_z(&f2, &g2).unwrap();
        let [a, b, _] = p.coords();
        prop_assert!(res.eval(a, b).is_zero());
    }

    #[test]
    fn bform_product_divides(a in prop::collection::vec(-5i64..=5, 3), b in prop::collection::vec(-5i64..=5, 2)) {
        let fa = BForm::from_ints(&a);
        let fb = BForm::from_ints(&b);
        prop_assume!(!fa.is_zero() && !fb.is_zero());
        let p = fa.mul(&fb);
        prop_assert_eq!(p.div_exact(&fb).unwrap(), fa);
        let g = p.gcd(&fb).unwrap();
        prop_assert_eq!(g, fb.canonical());
    }

    #[test]
    fn composition_is_associative(f in quadratic_map(), g in linear_map(), h in quadratic_map()) {
        let left = compose(&compose(&f, &g).unwrap(), &h);
        let right = compose(&f, &compose(&g, &h).unwrap());
        match (left, right) {
            (Ok(l), Ok(r)) => prop_assert_eq!(l, r),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "one side degenerated"),
        }
    }

    #[test]
    fn evaluation_respects_composition(f in quadratic_map(), g in quadratic_map(), p in point()) {
        let Ok(fg) = compose(&f, &g) else { return Ok(()) };
        if let MapValue::Point(gp) = g.eval(&p) {
            if let (MapValue::Point(a), MapValue::Point(b)) = (f.eval(&gp), fg.eval(&p)) {
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn harmonic_conjugation_is_involutive(r1 in -9i64..=9, r2 in -9i64..=9, t in -20i64..=20) {
        prop_assume!(r1 != r2 && t != r1 && t != r2);
        // (u - r1)(u - r2)
        let (a, b, c) = (r(1), r(-(r1 + r2)), r(r1 * r2));
        let t = LineParam::int(t);
        let t2 = harmonic_conjugate((&a, &b, &c), &t).unwrap();
        prop_assert_eq!(harmonic_conjugate((&a, &b, &c), &t2).unwrap(), t.clone());
        let cr = cross_ratio(&LineParam::int(r1), &LineParam::int(r2), &t, &t2).unwrap();
        prop_assert_eq!(cr, LineParam::int(-1));
    }

    #[test]
    fn cross_ratio_is_projectively_invariant(
        v in prop::collection::btree_set(-12i64..=12, 4),
        m in prop::array::uniform4(-4i64..=4),
    ) {
        let [p, q, s, u] = m;
        prop_assume!(p * u - q * s != 0);
        let v: Vec<i64> = v.into_iter().collect();
        let moebius = |t: i64| {
            let (num, den) = (r(p * t + q), r(s * t + u));
            if den.is_zero() { LineParam::Infinity } else { LineParam::Finite(num / den) }
        };
        let before = cross_ratio(&LineParam::int(v[0]), &LineParam::int(v[1]), &LineParam::int(v[2]), &LineParam::int(v[3])).unwrap();
        let after = cross_ratio(&moebius(v[0]), &moebius(v[1]), &moebius(v[2]), &moebius(v[3])).unwrap();
        prop_assert_eq!(before, after);
    }
}
