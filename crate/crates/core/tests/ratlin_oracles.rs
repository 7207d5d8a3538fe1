mod common;

use common::{mat_from, mat_rank, minor_rank};
use proptest::prelude::*;
use skewflats::ratlin::{orthogonal_complement, solve_affine, subspace_intersection, subspace_sum, QMat, QVec};

#[test]
fn rank_of_3x3_counting_matrix_matches_minor_oracle() {
    let m = QMat::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
    let oracle = mat_rank(&m);
    assert_eq!(oracle, 2);
    assert_eq!(m.rref().rank, oracle);
}

#[test]
fn kernel_of_2x3_matches_cross_product() {
    let m = QMat::from_ints(&[&[1, 2, 3], &[4, 5, 6]]);
    let k = m.kernel();
    assert_eq!(k.nrows(), 1);
    assert!(m.mul_vec(k.row(0)).is_zero());
    // cross((1,2,3),(4,5,6)) = (-3, 6, -3), canonically scaled to (1, -2, 1)
    let cross = QVec::from_ints(&[-3, 6, -3]);
    assert_eq!(QMat::from_rows(vec![cross]).unwrap().row_space_basis(), k);
}

#[test]
fn random_consistent_system_solution_substitutes_back() {
    let a = QMat::from_ints(&[&[2, -1, 0, 3], &[1, 1, 1, 1], &[0, 5, -2, 7]]);
    let x0 = QVec::from_ints(&[1, -2, 3, 4]);
    let b = a.mul_vec(&x0);
    let (x, k) = solve_affine(&a, &b).unwrap().expect("consistent");
    assert_eq!(a.mul_vec(&x), b);
    assert_eq!(k.nrows(), 4 - mat_rank(&a));
    for row in k.rows() {
        assert!(a.mul_vec(row).is_zero());
    }
}

#[test]
fn complement_of_two_diagonals_is_orthogonal() {
    let v = QMat::from_ints(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
    let c = orthogonal_complement(&v, 4).unwrap();
    assert_eq!(c.nrows(), 2);
    for a in v.rows() {
        for b in c.rows() {
            assert!(a.dot(b).is_zero());
        }
    }
    assert_eq!(mat_rank(&v.stack(&c).unwrap()), 4);
}

#[test]
fn sum_of_diagonals_rank_oracle() {
    let a = QMat::from_ints(&[&[1, 1, 0, 0]]);
    let b = QMat::from_ints(&[&[1, -1, 0, 0]]);
    let s = subspace_sum(&[a.clone(), b.clone()]).unwrap();
    assert_eq!(s.nrows(), mat_rank(&a.stack(&b).unwrap()));
}

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = QMat> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
            .prop_map(move |rows| mat_from(rows, c))
    })
}

fn subspace_in(n: usize) -> impl Strategy<Value = QMat> {
    (0..=n).prop_flat_map(move |r| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, n), r)
            .prop_map(move |rows| mat_from(rows, n).row_space_basis())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in small_matrix(8, 8)) {
        let once = m.rref();
        let twice = once.matrix.rref();
        prop_assert_eq!(&twice.matrix, &once.matrix);
        prop_assert!(once.pivots.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(once.pivots.len(), once.rank);
    }

    #[test]
    fn rank_equals_transpose_rank(m in small_matrix(8, 8)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_matches_minor_oracle(m in small_matrix(4, 5)) {
        prop_assert_eq!(m.rank(), mat_rank(&m));
    }

    #[test]
    fn kernel_rows_annihilate(m in small_matrix(6, 7)) {
        let k = m.kernel();
        prop_assert_eq!(k.nrows(), m.ncols() - m.rank());
        for row in k.rows() {
            prop_assert!(m.mul_vec(row).is_zero());
        }
    }

    #[test]
    fn double_complement_is_identity((n, v) in (2usize..=6).prop_flat_map(|n| (Just(n), subspace_in(n)))) {
        let p = orthogonal_complement(&v, n).unwrap();
        prop_assert_eq!(v.nrows() + p.nrows(), n);
        prop_assert_eq!(orthogonal_complement(&p, n).unwrap(), v);
    }

    #[test]
    fn complement_of_intersection_is_sum_of_complements(
        (n, a, b) in (4usize..=6).prop_flat_map(|n| (Just(n), subspace_in(n), subspace_in(n)))
    ) {
        let meet = subspace_intersection(&a, &b).unwrap();
        let lhs = orthogonal_complement(&meet, n).unwrap();
        let rhs = subspace_sum(&[
            orthogonal_complement(&a, n).unwrap(),
            orthogonal_complement(&b, n).unwrap(),
        ]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_affine_substitution(m in small_matrix(5, 6), xs in prop::collection::vec(-4i64..=4, 6)) {
        let x0 = QVec::from_ints(&xs[..m.ncols()]);
        let b = m.mul_vec(&x0);
        let (x, k) = solve_affine(&m, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&x), b);
        prop_assert_eq!(k, m.kernel());
    }

    #[test]
    fn rank_bounded_by_minor_rank_of_rows(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..5)) {
        let vs: Vec<QVec> = rows.iter().map(|r| QVec::from_ints(r)).collect();
        prop_assert_eq!(QMat::from_rows(vs.clone()).unwrap().rank(), minor_rank(&vs));
    }
}
