use num_traits::Zero;

use cremona::exactpoly::{HPoly, Rat};
use cremona::fixedcurve::fixed_locus;
use cremona::involutions::*;
use cremona::projmaps::{base_points, compose, is_identity, MapValue, ProjPoint, RationalMap};
use cremona::rng::SeededRng;

fn pts(v: &[(i64, i64, i64)]) -> Vec<ProjPoint> {
    v.iter()
        .map(|&(a, b, c)| ProjPoint::from_ints(a, b, c).unwrap())
        .collect()
}

fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
    ProjPoint::from_ints(a, b, c).unwrap()
}

fn geiser_points() -> Vec<ProjPoint> {
    pts(&[
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 1),
        (1, 2, 3),
        (2, -1, 5),
        (3, 7, -2),
    ])
}

fn bertini_points() -> Vec<ProjPoint> {
    pts(&[
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 1),
        (1, 2, 3),
        (2, -1, 5),
        (3, 7, -2),
        (5, -3, 2),
    ])
}

fn poly(terms: &[(i64, [u32; 3])]) -> HPoly {
    let d = terms[0].1.iter().sum();
    HPoly::from_terms(d, terms.iter().map(|&(c, e)| (e, Rat::from_integer(c.into())))).unwrap()
}

fn samples(seed: u64, n: usize) -> Vec<ProjPoint> {
    let mut rng = SeededRng::new(seed);
    let mut out = Vec::new();
    while out.len() < n {
        if let Ok(p) = ProjPoint::new(std::array::from_fn(|_| rng.rat_in(-20, 20))) {
            out.push(p);
        }
    }
    out
}

#[test]
fn conic_involution_is_the_standard_quadratic_map() {
    let q = poly(&[(1, [1, 0, 1]), (-1, [0, 2, 0])]);
    let rec = dj_from_conic(&q, &pt(0, 1, 0)).unwrap();
    let (x, y, z) = (HPoly::x(), HPoly::y(), HPoly::z());
    let expected = RationalMap::new([&x * &y, &x * &z, &y * &z]).unwrap();
    let map = rec.map.clone().unwrap();
    assert_eq!(map, expected);
    assert!(is_identity(&compose(&map, &map).unwrap()));
    assert_eq!(rec.kind, InvolutionKind::DeJonquieres(2));
    let mut bp = base_points(&map, 0).unwrap().points;
    bp.sort();
    let mut want = pts(&[(0, 1, 0), (1, 0, 0), (0, 0, 1)]);
    want.sort();
    assert_eq!(bp, want);
}

#[test]
fn conic_input_errors() {
    let q = poly(&[(1, [1, 0, 1]), (-1, [0, 2, 0])]);
    assert!(matches!(
        dj_from_conic(&q, &pt(1, 1, 1)),
        Err(InvolutionError::PointOnConic)
    ));
    let degenerate = poly(&[(1, [1, 0, 1])]);
    assert!(matches!(
        dj_from_conic(&degenerate, &pt(0, 1, 0)),
        Err(InvolutionError::SingularConic)
    ));
    let cubic = poly(&[(1, [3, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 3])]);
    assert!(matches!(
        dj_from_conic(&cubic, &pt(0, 1, 0)),
        Err(InvolutionError::NotAConic(3))
    ));
}

#[test]
fn cubic_example_in_normal_form() {
    // y^2 x + y (x^2 + z^2) + x^3 - 2 z^3 + x z^2
    let c = poly(&[
        (1, [1, 2, 0]),
        (1, [2, 1, 0]),
        (1, [0, 1, 2]),
        (1, [3, 0, 0]),
        (-2, [0, 0, 3]),
        (1, [1, 0, 2]),
    ]);
    let rec = dj_involution(&c, &pt(0, 1, 0), false).unwrap();
    let map = rec.map.unwrap();
    assert_eq!(map.degree(), 3);
    assert!(fixed_locus(&map).unwrap().proportional(&c));
    assert!(is_identity(&compose(&map, &map).unwrap()));
}

fn check_dj(c: &HPoly, p: &ProjPoint, d: u32, seed: u64) {
    let rec = dj_involution(c, p, false).unwrap();
    let map = rec.map.as_ref().unwrap();
    assert_eq!(map.degree(), d);
    assert!(is_identity(&compose(map, map).unwrap()), "d = {d}");
    assert_eq!(fixed_locus(map).unwrap(), c.canonical());
    let dj = rec.dj.as_ref().unwrap();
    assert_eq!(dj.report.discriminant.degree(), 2 * d - 2);
    assert!(dj.report.discriminant.is_squarefree().unwrap());
    assert!(dj.report.singularities_checked);
    // lines through the center are preserved
    for x in samples(seed, 8) {
        if let MapValue::Point(y) = map.eval(&x) {
            let m = [p.coords().clone(), x.coords().clone(), y.coords().clone()];
            assert!(cremona::exactpoly::linalg::det3(&m).is_zero());
            // y may be a base point when x lies on a contracted curve
            if let MapValue::Point(back) = map.eval(&y) {
                assert_eq!(back, x);
            }
        }
    }
}

#[test]
fn dj_family_in_normal_frame() {
    for d in 2..=6 {
        let (c, p) = dj_instance(d, 7);
        check_dj(&c, &p, d, d as u64);
    }
}

#[test]
fn dj_family_at_a_general_center() {
    for d in 2..=5 {
        let (c, p) = dj_instance_moved(d, 11);
        assert_eq!(c.multiplicity_at(p.coords()), d - 2);
        check_dj(&c, &p, d, 100 + d as u64);
    }
}

#[test]
fn dj_validation_errors() {
    let p = pt(0, 1, 0);
    // smooth cubic: center has multiplicity 0
    let fermat = poly(&[(1, [3, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 3])]);
    assert!(matches!(
        dj_involution(&fermat, &p, false),
        Err(InvolutionError::CenterMultiplicity { expected: 1, found: 0 })
    ));
    // A = x^2: tangent cone is a double line
    let cusp = poly(&[(1, [2, 2, 0]), (1, [0, 1, 3]), (1, [4, 0, 0]), (1, [0, 0, 4])]);
    assert!(matches!(
        dj_involution(&cusp, &p, false),
        Err(InvolutionError::NonOrdinary)
    ));
    // x (y^2 - x z) contains the line x = 0
    let reducible = poly(&[(1, [1, 2, 0]), (-1, [2, 0, 1])]);
    assert!(matches!(
        dj_involution(&reducible, &p, false),
        Err(InvolutionError::LineThroughCenter)
    ));
    // x y^2 + z^2 (x + z) is nodal at (1:0:0)
    let nodal = poly(&[(1, [1, 2, 0]), (1, [1, 0, 2]), (1, [0, 0, 3])]);
    assert!(matches!(
        dj_involution(&nodal, &p, false),
        Err(InvolutionError::ExtraSingularity)
    ));
    assert!(matches!(
        dj_involution(&nodal, &p, true),
        Err(InvolutionError::DiscriminantNotSquarefree)
    ));
}

#[test]
fn trusted_flag_is_recorded() {
    let (c, p) = dj_instance(4, 3);
    let rec = dj_involution(&c, &p, true).unwrap();
    let rep = &rec.dj.unwrap().report;
    assert!(rep.trusted && !rep.singularities_checked);
}

#[test]
fn geiser_round_trips_and_bookkeeping() {
    let cfg = PointConfig::geiser(geiser_points()).unwrap();
    for c in cfg.system() {
        for q in cfg.points() {
            assert!(c.eval(q.coords()).is_zero());
        }
    }
    let g = GeiserInvolution::new(cfg, 5).unwrap();
    for x in samples(1, 12) {
        let (y, book) = g.eval_traced(&x).unwrap();
        assert!(book.balances());
        assert_eq!((book.resultant_degree, book.residual_degree), (9, 1));
        assert_eq!(g.eval(&y).unwrap(), x);
    }
}

#[test]
fn geiser_sextic_is_double_at_the_points() {
    let cfg = PointConfig::geiser(geiser_points()).unwrap();
    let s = geiser_fixed_sextic(&cfg).unwrap();
    assert_eq!(s.degree(), 6);
    for q in cfg.points() {
        assert!(is_singular_at(&s, q));
    }
    // another basis of the net gives the same curve
    let net = cfg.system();
    let other = [
        &net[0] + &net[1],
        net[1].clone(),
        &net[2] - &net[0].scale(&Rat::from_integer(3.into())),
    ];
    let rows: Vec<[HPoly; 3]> = other.iter().map(HPoly::gradient).collect();
    let minor = |i: usize, j: usize| &(&rows[1][i] * &rows[2][j]) - &(&rows[1][j] * &rows[2][i]);
    let det = &(&(&rows[0][0] * &minor(1, 2)) - &(&rows[0][1] * &minor(0, 2))) + &(&rows[0][2] * &minor(0, 1));
    assert_eq!(det.canonical(), s);
}

#[test]
fn geiser_map_interpolation() {
    let cfg = PointConfig::geiser(geiser_points()).unwrap();
    let g = GeiserInvolution::new(cfg.clone(), 0).unwrap();
    let map = interpolate_geiser(&g, 100, 9).unwrap();
    assert_eq!(map.degree(), 8);
    for x in samples(77, 5) {
        if let MapValue::Point(y) = map.eval(&x) {
            assert_eq!(y, g.eval(&x).unwrap());
        }
    }
    let fixed = fixed_locus(&map).unwrap();
    assert_eq!(fixed, geiser_fixed_sextic(&cfg).unwrap());
}

#[test]
fn geiser_configuration_errors() {
    let mut p = geiser_points();
    p[6] = p[2].clone();
    assert!(matches!(
        PointConfig::geiser(p),
        Err(InvolutionError::RepeatedPoint(2, 6))
    ));
    let g = GeiserInvolution::new(PointConfig::geiser(geiser_points()).unwrap(), 0).unwrap();
    assert!(matches!(g.eval(&pt(1, 1, 1)), Err(InvolutionError::BasePointInput)));
    assert!(PointConfig::geiser(geiser_points()[..6].to_vec()).is_err());
}

#[test]
fn bertini_system_and_round_trip() {
    let cfg = PointConfig::bertini(bertini_points()).unwrap();
    assert_eq!(cfg.system().len(), 4);
    for s in cfg.system() {
        assert_eq!(s.degree(), 6);
        for q in cfg.points() {
            assert!(is_singular_at(s, q));
        }
    }
    let b = BertiniInvolution::new(cfg, 3).unwrap();
    let x = pt(2, 3, 7);
    let (y, book) = b.eval_traced(&x).unwrap();
    assert!(book.balances());
    assert_eq!(
        (
            book.resultant_degree,
            book.base_contribution,
            book.input_contribution,
            book.residual_degree
        ),
        (36, 32, 1, 3)
    );
    assert_eq!(b.eval(&y).unwrap(), x);
}

#[test]
fn bertini_rejects_coincident_points() {
    let mut p = bertini_points();
    p[7] = pt(2, 4, 6);
    assert!(matches!(sextic_system(&p), Err(InvolutionError::RepeatedPoint(4, 7))));
}
