mod common;

use common::dependent3;
use proptest::prelude::*;
use skewflats::incidence::IncidenceDesign;
use skewflats::ratlin::QVec;
use skewflats::verify::{are_collinear, find_ordinary_line, ordinary_lines};

#[test]
fn fano_pairs_and_blocks_exhaustive() {
    let f = IncidenceDesign::fano_plane();
    for p in 1..=7 {
        for q in p + 1..=7 {
            let n = f.blocks().iter().filter(|b| b.contains(&p) && b.contains(&q)).count();
            assert_eq!(n, 1, "pair ({p},{q})");
        }
    }
    for (i, a) in f.blocks().iter().enumerate() {
        for b in &f.blocks()[i + 1..] {
            assert_eq!(a.iter().filter(|x| b.contains(x)).count(), 1);
        }
    }
}

fn random_design() -> impl Strategy<Value = IncidenceDesign> {
    (3usize..=9).prop_flat_map(|n| {
        prop::collection::btree_set(prop::collection::btree_set(1..=n, 2..=4), 1..=8).prop_map(move |blocks| {
            IncidenceDesign::new(n, blocks.into_iter().map(|b| b.into_iter().collect()).collect()).unwrap()
        })
    })
}

/// Ordinary pairs by testing every triple for dependence with minors.
fn brute_ordinary(points: &[QVec]) -> Vec<(usize, usize)> {
    let n = points.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let third = (0..n).any(|k| k != i && k != j && dependent3(&points[i], &points[j], &points[k]));
            if !third {
                out.push((i, j));
            }
        }
    }
    out
}

fn distinct_points(dim: usize) -> impl Strategy<Value = Vec<QVec>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, dim), 1..=9).prop_map(|raw| {
        let mut pts: Vec<QVec> = Vec::new();
        for r in raw {
            let p = QVec::from_ints(&r);
            if p.is_zero() {
                continue;
            }
            let dup = pts.iter().any(|q| common::minor_rank(&[q.clone(), p.clone()]) < 2);
            if !dup {
                pts.push(p);
            }
        }
        pts
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn blocks_through_matches_membership_scan(d in random_design()) {
        for p in 1..=d.n_points() {
            let scan: Vec<usize> = d.blocks().iter().enumerate()
                .filter(|(_, b)| b.contains(&p)).map(|(i, _)| i + 1).collect();
            prop_assert_eq!(d.blocks_through(p).unwrap(), scan);
        }
    }

    #[test]
    fn pairwise_cover_matches_scan(d in random_design()) {
        let mut first = None;
        'outer: for p in 1..=d.n_points() {
            for q in p + 1..=d.n_points() {
                if !d.blocks().iter().any(|b| b.len() >= 3 && b.contains(&p) && b.contains(&q)) {
                    first = Some((p, q));
                    break 'outer;
                }
            }
        }
        prop_assert_eq!(d.uncovered_pair(), first);
        prop_assert_eq!(d.is_pairwise_covered(), first.is_none());
    }

    #[test]
    fn ordinary_lines_match_triple_enumeration(pts in prop_oneof![distinct_points(3), distinct_points(4)]) {
        let brute = brute_ordinary(&pts);
        prop_assert_eq!(ordinary_lines(&pts).unwrap(), brute.clone());
        prop_assert_eq!(find_ordinary_line(&pts).unwrap(), brute.first().copied());
        // real Sylvester-Gallai: from three points on, no ordinary line
        // exactly when collinear
        if pts.len() >= 3 {
            prop_assert_eq!(brute.is_empty(), are_collinear(&pts).unwrap());
        }
    }
}
