mod common;

use common::{minor_rank, mat_from};
use proptest::prelude::*;
use skewflats::geom::AffineSubspace;
use skewflats::ratlin::{solve_affine, QMat, QVec, Rat};

fn v(xs: &[i64]) -> QVec {
    QVec::from_ints(xs)
}

fn flat(base: &[i64], dirs: &[&[i64]]) -> AffineSubspace {
    let n = base.len();
    let rows = dirs.iter().map(|d| v(d)).collect();
    AffineSubspace::canonicalize(v(base), QMat::new(rows, n).unwrap()).unwrap()
}

fn hyperplane(normal: &[i64], c: i64) -> AffineSubspace {
    let (p, k) = solve_affine(&QMat::from_ints(&[normal]), &v(&[c])).unwrap().unwrap();
    AffineSubspace::canonicalize(p, k).unwrap()
}

#[test]
fn two_parameterizations_of_a_plane_agree() {
    let a = flat(&[1, 0, 2, 0], &[&[1, 1, 0, 0], &[0, 1, 1, 1]]);
    // Different base point on the same plane, different spanning vectors.
    let b = flat(&[2, 2, 3, 1], &[&[1, 2, 1, 1], &[-1, 0, 1, 1]]);
    // mutual containment oracle
    assert!(a.contains_flat(&b).unwrap() && b.contains_flat(&a).unwrap());
    assert_eq!(a, b);
}

#[test]
fn hull_dimension_matches_rank_of_generators() {
    let l1 = flat(&[0, 0, 0, 0], &[&[1, 0, 0, 0]]);
    let l2 = flat(&[0, 0, 1, 0], &[&[0, 1, 0, 0]]);
    let oracle = minor_rank(&[v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0])]);
    assert_eq!(l1.affine_hull(&l2).unwrap().dim(), oracle);
    assert_eq!(oracle, 3);
}

#[test]
fn generic_three_hyperplanes_meet_in_contained_line() {
    let hs = [hyperplane(&[2, -1, 3, 1], 4), hyperplane(&[1, 5, -2, 0], -1), hyperplane(&[0, 1, 1, -3], 2)];
    let l = hs[0]
        .intersect(&hs[1])
        .unwrap()
        .unwrap()
        .intersect(&hs[2])
        .unwrap()
        .unwrap();
    assert_eq!(l.dim(), 1);
    for h in &hs {
        assert!(h.contains_flat(&l).unwrap());
        // substitution: both the base point and base + dir satisfy the equation
        let (n, c) = h.equations();
        assert_eq!(n.mul_vec(l.base()), c);
        assert_eq!(n.mul_vec(&l.base().add(l.dirs().row(0))), c);
    }
}

#[test]
fn skew_two_planes_in_q6() {
    let a = flat(&[0, 0, 0, 0, 0, 1], &[&[1, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0]]);
    let b = flat(&[0, 0, 0, 0, 0, 2], &[&[0, 0, 1, 0, 0, 0], &[0, 0, 0, 1, 0, 0]]);
    assert_eq!(a.affine_hull(&b).unwrap().dim(), 5);
    assert!(a.is_skew(&b).unwrap());
}

fn flat_in(n: usize, max_dim: usize) -> impl Strategy<Value = AffineSubspace> {
    (
        prop::collection::vec(-3i64..=3, n),
        prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=max_dim),
    )
        .prop_map(move |(b, ds)| {
            AffineSubspace::canonicalize(v(&b), mat_from(ds, n)).unwrap()
        })
}

fn pair_in_same_space() -> impl Strategy<Value = (AffineSubspace, AffineSubspace)> {
    (3usize..=5).prop_flat_map(|n| (flat_in(n, 2), flat_in(n, 2)))
}

fn random_line(n: usize) -> impl Strategy<Value = AffineSubspace> {
    (prop::collection::vec(-3i64..=3, n), prop::collection::vec(-3i64..=3, n))
        .prop_filter("nonzero direction", |(_, d)| d.iter().any(|&x| x != 0))
        .prop_map(|(b, d)| AffineSubspace::line(v(&b), v(&d)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn hull_is_commutative_and_contains_both((a, b) in pair_in_same_space()) {
        let h = a.affine_hull(&b).unwrap();
        prop_assert_eq!(&h, &b.affine_hull(&a).unwrap());
        prop_assert!(h.contains_flat(&a).unwrap());
        prop_assert!(h.contains_flat(&b).unwrap());
        prop_assert!(h.dim() <= a.dim() + b.dim() + 1);
    }

    #[test]
    fn intersection_is_contained_and_absorbed((a, b) in pair_in_same_space()) {
        if let Some(m) = a.intersect(&b).unwrap() {
            prop_assert!(a.contains_flat(&m).unwrap());
            prop_assert!(b.contains_flat(&m).unwrap());
            prop_assert_eq!(m.affine_hull(&a).unwrap(), a.clone());
        }
    }

    #[test]
    fn intersection_membership_matches_both(
        (a, b, p) in (3usize..=4).prop_flat_map(|n| (flat_in(n, 3), flat_in(n, 3), prop::collection::vec(-3i64..=3, n)))
    ) {
        let p = v(&p);
        let in_both = a.contains_point(&p).unwrap() && b.contains_point(&p).unwrap();
        let in_meet = a.intersect(&b).unwrap().map(|m| m.contains_point(&p).unwrap()).unwrap_or(false);
        prop_assert_eq!(in_both, in_meet);
    }

    #[test]
    fn canonical_form_is_parameterization_independent(
        (w, shift, mix) in (3usize..=5).prop_flat_map(|n| (
            flat_in(n, 3),
            prop::collection::vec(-2i64..=2, 3),
            prop::collection::vec(-2i64..=2, 9),
        ))
    ) {
        // Move the base along the flat; replace dirs by a unitriangular mix.
        let d = w.dirs().rows().to_vec();
        let mut base = w.base().clone();
        for (row, s) in d.iter().zip(&shift) {
            base = base.add(&row.scale(&Rat::from(*s)));
        }
        let mut new_dirs: Vec<QVec> = d.clone();
        for (i, row) in new_dirs.iter_mut().enumerate() {
            for (j, other) in d.iter().enumerate() {
                if j < i {
                    *row = row.add(&other.scale(&Rat::from(mix[(i * 3 + j) % 9])));
                }
            }
        }
        let n = w.ambient_dim();
        let again = AffineSubspace::canonicalize(base, QMat::new(new_dirs, n).unwrap()).unwrap();
        prop_assert_eq!(&again, &w);
        let twice = AffineSubspace::canonicalize(w.base().clone(), w.dirs().clone()).unwrap();
        prop_assert_eq!(twice, w);
    }

    #[test]
    fn line_skew_trichotomy((a, b) in (4usize..=5).prop_flat_map(|n| (random_line(n), random_line(n)))) {
        let skew = a.is_skew(&b).unwrap();
        let coplanar = a.lines_coplanar(&b).unwrap();
        let disjoint = a.intersect(&b).unwrap().is_none();
        let different_dirs = a.dirs() != b.dirs();
        prop_assert_eq!(skew, !coplanar);
        prop_assert_eq!(skew, disjoint && different_dirs);
    }
}
