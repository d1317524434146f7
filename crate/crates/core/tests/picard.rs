use std::collections::BTreeSet;

use cremona::picard::*;

/// Brute force over sorted multisets with a deliberately loose range for
/// every coordinate, counting distinct permutations of each solution.
fn oracle_count(n: usize) -> usize {
    fn perms(b: &[i64]) -> usize {
        let mut f = 1usize;
        for i in 2..=b.len() {
            f *= i;
        }
        let mut i = 0;
        while i < b.len() {
            let mut j = i;
            while j < b.len() && b[j] == b[i] {
                j += 1;
            }
            for k in 2..=(j - i) {
                f /= k;
            }
            i = j;
        }
        f
    }
    fn rec(b: &mut Vec<i64>, n: usize, lo: i64, hi: i64, a: i64, total: &mut usize) {
        let sq: i64 = b.iter().map(|v| v * v).sum();
        if sq > a * a + 1 {
            return;
        }
        if b.len() == n {
            let s: i64 = b.iter().sum();
            if s == 3 * a - 1 && sq == a * a + 1 {
                *total += perms(b);
            }
            return;
        }
        let start = b.last().copied().unwrap_or(lo);
        for v in start..=hi {
            b.push(v);
            rec(b, n, lo, hi, a, total);
            b.pop();
        }
    }
    let mut total = 0;
    for a in -4..=12i64 {
        let r = a.abs() + 2;
        rec(&mut Vec::new(), n, -r, r, a, &mut total);
    }
    total
}

#[test]
fn exceptional_counts_match_oracle() {
    let expected = [1, 3, 6, 10, 16, 27, 56, 240];
    for n in 1..=8 {
        let lat = make_lattice(n);
        let classes = exceptional_classes(&lat).unwrap();
        assert_eq!(classes.len(), expected[n - 1], "n = {n}");
        assert_eq!(oracle_count(n), expected[n - 1], "oracle n = {n}");
        let set: BTreeSet<_> = classes.iter().cloned().collect();
        assert_eq!(set.len(), classes.len());
        for e in &classes {
            assert_eq!(lat.dot(e, e), -1);
            assert_eq!(lat.dot(e, lat.canonical()), -1);
        }
    }
}

#[test]
fn small_lattices() {
    assert_eq!(make_lattice(0).k_squared(), 9);
    assert_eq!(make_lattice(7).k_squared(), 2);
    assert_eq!(make_lattice(8).k_squared(), 1);
    let lat = make_lattice(1);
    assert_eq!(exceptional_classes(&lat).unwrap(), vec![DivClass(vec![0, 1])]);
    let lat3 = make_lattice(3);
    let names: Vec<String> = exceptional_classes(&lat3)
        .unwrap()
        .iter()
        .map(|c| lat3.describe(c))
        .collect();
    assert_eq!(names, ["E3", "E2", "E1", "H - E1 - E2", "H - E1 - E3", "H - E2 - E3"]);
    assert!(exceptional_classes(&make_lattice(9)).is_err());
    assert!(exceptional_classes(&make_lattice(0)).unwrap().is_empty());
}

#[test]
fn reflections() {
    let lat = make_lattice(3);
    let alpha = DivClass(vec![0, 1, -1, 0]);
    let r = reflection_through(&lat, &alpha).unwrap();
    assert_eq!(r.apply(&alpha), DivClass(vec![0, -1, 1, 0]));
    let orth = DivClass(vec![1, 0, 0, 1]);
    assert_eq!(lat.dot(&orth, &alpha), 0);
    assert_eq!(r.apply(&orth), orth);
    assert!(r.squares_to_identity());
    assert!(r.preserves_form(&lat));
    assert!(matches!(
        reflection_through(&lat, &DivClass(vec![2, 0, 0, 0])),
        Err(PicardError::NonIntegralReflection(4))
    ));
}

#[test]
fn anti_reflection_on_del_pezzo_lattices() {
    for (n, label) in [(7, "(v)"), (8, "(vi)")] {
        let lat = make_lattice(n);
        let m = anti_reflection_in_K(&lat).unwrap();
        assert!(m.matrix().preserves_form(&lat));
        assert!(m.matrix().squares_to_identity());
        assert_eq!(m.apply(lat.canonical()), *lat.canonical());
        assert_eq!(fixed_rank(&m), 1);
        let classes = exceptional_classes(&lat).unwrap();
        let set: BTreeSet<_> = classes.iter().cloned().collect();
        let image: BTreeSet<_> = classes.iter().map(|e| m.apply(e)).collect();
        assert_eq!(set, image);
        assert!(is_minimal(&lat, &m).unwrap().minimal);
        assert_eq!(classify_pair(&lat, &m).unwrap().label(), label);
    }
    assert!(matches!(
        anti_reflection_in_K(&make_lattice(6)),
        Err(PicardError::KSquaredOutOfRange(3))
    ));
}

#[test]
fn fixed_sublattice_of_anti_reflection_is_spanned_by_k() {
    let lat = make_lattice(7);
    let m = anti_reflection_in_K(&lat).unwrap();
    for j in 0..lat.rank() {
        let mut e = vec![0; lat.rank()];
        e[j] = 1;
        let e = DivClass(e);
        // x + M x is invariant, hence a multiple of K
        let s = DivClass(e.0.iter().zip(&m.apply(&e).0).map(|(a, b)| a + b).collect());
        let k = lat.canonical();
        let ratio = s.0[0] / k.0[0];
        assert!(s.0.iter().zip(&k.0).all(|(a, b)| *a == ratio * b));
    }
}

#[test]
fn non_minimal_models() {
    let lat = make_lattice(1);
    let id = LatticeInvolution::identity(&lat);
    let m = is_minimal(&lat, &id).unwrap();
    assert_eq!(m.witness, Some((DivClass(vec![0, 1]), MinimalityFailure::Invariant)));
    assert_eq!(classify_pair(&lat, &id).unwrap().label(), "non-minimal");

    // quadratic involution with center p = E1 and base points q = E2, r = E3
    let lat = make_lattice(3);
    let m = LatticeMatrix(vec![
        vec![2, 1, 1, 1],
        vec![-1, 0, -1, -1],
        vec![-1, -1, -1, 0],
        vec![-1, -1, 0, -1],
    ]);
    let inv = LatticeInvolution::new(&lat, m).unwrap();
    let res = is_minimal(&lat, &inv).unwrap();
    let (w, f) = res.witness.unwrap();
    assert_eq!(w, DivClass(vec![0, 1, 0, 0]));
    assert_eq!(f, MinimalityFailure::Disjoint { intersection: 0 });
}

#[test]
fn quadric_and_plane_cases() {
    let q = PicLattice::quadric();
    assert_eq!(q.k_squared(), 8);
    let swap = LatticeInvolution::new(&q, LatticeMatrix(vec![vec![0, 1], vec![1, 0]])).unwrap();
    assert_eq!(fixed_rank(&swap), 1);
    assert_eq!(classify_pair(&q, &swap).unwrap(), PairClass::Quadric);
    assert_eq!(
        classify_pair(&q, &LatticeInvolution::identity(&q)).unwrap(),
        PairClass::Fibration
    );
    let p2 = make_lattice(0);
    assert_eq!(
        classify_pair(&p2, &LatticeInvolution::identity(&p2)).unwrap(),
        PairClass::Plane
    );
}

#[test]
fn classification_is_stable_under_relabeling() {
    let lat = make_lattice(7);
    let m = anti_reflection_in_K(&lat).unwrap();
    let perm = [0usize, 3, 1, 7, 2, 6, 5, 4];
    let p = LatticeMatrix(
        (0..8)
            .map(|i| (0..8).map(|j| i64::from(perm[i] == j)).collect())
            .collect(),
    );
    let pinv = LatticeMatrix(
        (0..8)
            .map(|i| (0..8).map(|j| i64::from(perm[j] == i)).collect())
            .collect(),
    );
    let conj = p.mul(m.matrix()).mul(&pinv);
    let inv = LatticeInvolution::new(&lat, conj).unwrap();
    assert_eq!(classify_pair(&lat, &inv).unwrap(), classify_pair(&lat, &m).unwrap());
}

#[test]
fn validator_rejects_bad_matrices() {
    let lat = make_lattice(1);
    let not_iso = LatticeMatrix(vec![vec![1, 1], vec![0, 1]]);
    assert_eq!(LatticeInvolution::new(&lat, not_iso), Err(PicardError::NotIsometry));
    let neg = LatticeMatrix(vec![vec![-1, 0], vec![0, -1]]);
    assert_eq!(LatticeInvolution::new(&lat, neg), Err(PicardError::MovesCanonical));
    let wrong = LatticeMatrix(vec![vec![1]]);
    assert!(matches!(
        LatticeInvolution::new(&lat, wrong),
        Err(PicardError::SizeMismatch { .. })
    ));
}

#[test]
fn elementary_transformations() {
    let m = ConicBundleModel {
        n: 2,
        singular_fibres: 6,
        contact_orders: vec![2, 1],
    };
    assert_eq!(elementary_transformation(&m, TransformCenter::OffSection).unwrap().n, 1);
    let m0 = ConicBundleModel { n: 0, ..m.clone() };
    assert_eq!(
        elementary_transformation(&m0, TransformCenter::OffSection).unwrap().n,
        1
    );
    assert_eq!(elementary_transformation(&m0, TransformCenter::OnSection).unwrap().n, 1);
    let mut cur = ConicBundleModel { n: 5, ..m.clone() };
    let mut steps = 0;
    while cur.n > 1 {
        cur = elementary_transformation(&cur, TransformCenter::OffSection).unwrap();
        steps += 1;
    }
    assert_eq!(steps, 4);
    let c = elementary_transformation(&m, TransformCenter::Contact(0)).unwrap();
    assert_eq!((c.n, c.contact_orders.clone()), (3, vec![1, 1]));
    assert_eq!(elementary_transformation(&c, TransformCenter::OffSection).unwrap().n, 2);
    assert!(matches!(
        elementary_transformation(&m, TransformCenter::Contact(1)),
        Err(PicardError::NotTangent(1))
    ));
    assert!(matches!(
        elementary_transformation(&m, TransformCenter::Contact(5)),
        Err(PicardError::NoContactPoint(5))
    ));
    assert_eq!(m.section_self_intersection(), -2);
}
