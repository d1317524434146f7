use std::collections::BTreeMap;

use cremona::exactpoly::{HPoly, Rat};
use cremona::fixedcurve::*;
use cremona::involutions::*;
use cremona::projmaps::{compose, conjugate, ProjPoint, RationalMap};

fn pts(v: &[(i64, i64, i64)]) -> Vec<ProjPoint> {
    v.iter()
        .map(|&(a, b, c)| ProjPoint::from_ints(a, b, c).unwrap())
        .collect()
}

fn geiser_config() -> PointConfig {
    PointConfig::geiser(pts(&[
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 1),
        (1, 2, 3),
        (2, -1, 5),
        (3, 7, -2),
    ]))
    .unwrap()
}

fn bertini_config() -> PointConfig {
    PointConfig::bertini(pts(&[
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 1),
        (1, 2, 3),
        (2, -1, 5),
        (3, 7, -2),
        (5, -3, 2),
    ]))
    .unwrap()
}

fn standard_quadratic() -> RationalMap {
    let (x, y, z) = (HPoly::x(), HPoly::y(), HPoly::z());
    RationalMap::new([&x * &y, &x * &z, &y * &z]).unwrap()
}

#[test]
fn genus_formula_matches_term_count() {
    for d in 1..=12u32 {
        for m1 in 1..=d {
            for m2 in 1..=m1 {
                let arith = (d as i64 - 1) * (d as i64 - 2) / 2;
                // m(m-1)/2 counted as unordered pairs of branches
                let pairs = |m: u32| (0..m).flat_map(|i| (0..i).map(move |j| (i, j))).count() as i64;
                let drop = pairs(m1) + pairs(m2);
                match plane_genus(d, &[m1, m2]) {
                    Ok(g) => assert_eq!(g as i64, arith - drop),
                    Err(_) => assert!(arith - drop < 0),
                }
            }
        }
    }
}

#[test]
fn genus_is_monotone_in_multiplicities() {
    for d in 3..=12u32 {
        let mut prev = plane_genus(d, &[1]).unwrap();
        for m in 2..d {
            if let Ok(g) = plane_genus(d, &[m]) {
                assert!(g <= prev);
                prev = g;
            }
        }
    }
}

#[test]
fn dj_invariants_and_fibres() {
    for d in 2..=6 {
        let (c, p) = dj_instance(d, 7);
        let rec = dj_involution(&c, &p, false).unwrap();
        let inv = invariant_of(&rec).unwrap();
        if d == 2 {
            assert_eq!(inv.kind, FixedCurveKind::Empty);
        } else {
            assert_eq!(inv.kind, FixedCurveKind::Hyperelliptic { genus: d - 2 });
        }
        let s = singular_fibre_count(rec.dj.as_ref().unwrap()).unwrap();
        assert_eq!(s, 2 * d - 2);
        assert_eq!(s, 2 * (d - 2) + 2);
    }
}

#[test]
fn conic_record_has_two_singular_fibres() {
    let q = HPoly::from_terms(
        2,
        [
            ([1, 0, 1], Rat::from_integer(1.into())),
            ([0, 2, 0], Rat::from_integer((-1).into())),
        ],
    )
    .unwrap();
    let rec = dj_from_conic(&q, &ProjPoint::from_ints(0, 1, 0).unwrap()).unwrap();
    let dj = rec.dj.as_ref().unwrap();
    assert_eq!(singular_fibre_count(dj).unwrap(), 2);
    assert_eq!(dj.report.discriminant.to_string(), "4*s*t");
    assert_eq!(invariant_of(&rec).unwrap().to_string(), "empty");
}

#[test]
fn corrupted_record_fails_cross_check() {
    let (c, p) = dj_instance(4, 7);
    let mut rec = dj_involution(&c, &p, false).unwrap();
    let (c5, _) = dj_instance(5, 7);
    rec.fixed_curve = Some(c5);
    assert!(matches!(invariant_of(&rec), Err(FixedCurveError::CrossCheck(_))));
    let mut rec = dj_involution(&c, &p, false).unwrap();
    rec.invariant = FixedCurveInvariant::for_kind(InvolutionKind::Geiser);
    assert!(invariant_of(&rec).is_err());
}

#[test]
fn raw_map_classification() {
    let c = classify_involution(ClassifyInput::Map(&standard_quadratic()), 0).unwrap();
    assert_eq!(c.label, ClassLabel::Known(InvolutionKind::DeJonquieres(2)));
    assert_eq!(c.center, Some(ProjPoint::from_ints(0, 1, 0).unwrap()));
    assert!(!c.rational_components_certified);
    for d in 3..=5 {
        let (curve, p) = dj_instance_moved(d, 21);
        let rec = dj_involution(&curve, &p, false).unwrap();
        let c = classify_involution(ClassifyInput::Map(rec.map.as_ref().unwrap()), 1).unwrap();
        assert_eq!(c.label, ClassLabel::Known(InvolutionKind::DeJonquieres(d)));
        assert_eq!(c.center, Some(p));
        assert_eq!(c.fixed_curve_degree, Some(d));
    }
}

#[test]
fn non_involution_is_rejected() {
    let (x, y, z) = (HPoly::x(), HPoly::y(), HPoly::z());
    let m = RationalMap::new([&x * &y, &y * &z, &x * &z]).unwrap();
    assert!(matches!(
        classify_involution(ClassifyInput::Map(&m), 0),
        Err(FixedCurveError::NotInvolution)
    ));
}

#[test]
fn invariant_survives_linear_conjugation() {
    let lin = [[1, 2, 0], [0, 1, -1], [3, 0, 1]].map(|r| r.map(|v: i64| Rat::from_integer(v.into())));
    let phi = RationalMap::linear(&lin).unwrap();
    let phi_inv = RationalMap::linear_inverse(&lin).unwrap();
    for d in 2..=5 {
        let (c, p) = dj_instance(d, 3);
        let rec = dj_involution(&c, &p, false).unwrap();
        let before = invariant_of(&rec).unwrap();
        let conj = conjugate(rec.map.as_ref().unwrap(), &phi, &phi_inv).unwrap();
        assert!(cremona::projmaps::is_identity(&compose(&conj, &conj).unwrap()));
        let label = classify_involution(ClassifyInput::Map(&conj), 5).unwrap().label;
        let ClassLabel::Known(kind) = label else {
            panic!("unrecognized")
        };
        let after = FixedCurveInvariant::for_kind(kind);
        assert_eq!(after, before);
    }
}

#[test]
fn geiser_classification_paths() {
    let rec = geiser_record(geiser_config(), 0).unwrap();
    let inv = invariant_of(&rec).unwrap();
    assert_eq!(inv.kind, FixedCurveKind::NonHyperellipticGenus3);
    let c = classify_involution(ClassifyInput::Record(&rec), 0).unwrap();
    assert_eq!(c.label, ClassLabel::Known(InvolutionKind::Geiser));
    assert!(c.from_metadata);
    let Evaluator::Geiser(g) = &rec.evaluator else {
        unreachable!()
    };
    let map = interpolate_geiser(g, 100, 4).unwrap();
    let raw = classify_involution(ClassifyInput::Map(&map), 0).unwrap();
    assert_eq!(raw.label, ClassLabel::Known(InvolutionKind::Geiser));
    assert_eq!(raw.fixed_curve_degree, Some(6));
}

#[test]
fn invariant_is_injective_on_the_corpus() {
    let mut seen: BTreeMap<FixedCurveKind, InvolutionKind> = BTreeMap::new();
    let mut records = Vec::new();
    for d in 2..=6 {
        let (c, p) = dj_instance(d, 7);
        records.push(dj_involution(&c, &p, false).unwrap());
    }
    records.push(geiser_record(geiser_config(), 0).unwrap());
    records.push(bertini_record(bertini_config(), 0).unwrap());
    for r in &records {
        let inv = invariant_of(r).unwrap();
        let label = classify_involution(ClassifyInput::Record(r), 0).unwrap().label;
        assert_eq!(label, ClassLabel::Known(r.kind));
        assert!(seen.insert(inv.kind, r.kind).is_none());
    }
    assert_eq!(seen.len(), 7);
}
