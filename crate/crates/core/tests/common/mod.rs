//! Test-only oracles that never call into the elimination code they check.
#![allow(dead_code)]

use skewflats::ratlin::{QMat, QVec, Rat};

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Rat::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &laplace_det(&minor);
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rank as the largest `k` with a nonzero `k x k` minor.
pub fn minor_rank(rows: &[QVec]) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, QVec::dim);
    for k in (1..=nrows.min(ncols)).rev() {
        for rs in combinations(nrows, k) {
            for cs in combinations(ncols, k) {
                let sub: Vec<Vec<Rat>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| rows[r][c].clone()).collect())
                    .collect();
                if !laplace_det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

pub fn mat_rank(m: &QMat) -> usize {
    minor_rank(m.rows())
}

pub fn mat_from(rows: Vec<Vec<i64>>, ncols: usize) -> QMat {
    QMat::new(rows.iter().map(|r| QVec::from_ints(r)).collect(), ncols).unwrap()
}

/// Whether three vectors are linearly dependent, by minors.
pub fn dependent3(a: &QVec, b: &QVec, c: &QVec) -> bool {
    minor_rank(&[a.clone(), b.clone(), c.clone()]) < 3
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewflats::geom::AffineSubspace;
use skewflats::verify::{build_hulls, pairwise_skew, LineFamily};

pub fn v(xs: &[i64]) -> QVec {
    QVec::from_ints(xs)
}

pub fn line(base: &[i64], dir: &[i64]) -> AffineSubspace {
    AffineSubspace::line(v(base), v(dir)).unwrap()
}

fn rand_vec(rng: &mut ChaCha8Rng, n: usize, b: i64) -> QVec {
    QVec::from_ints(&(0..n).map(|_| rng.gen_range(-b..=b)).collect::<Vec<_>>())
}

/// Lines `w_i + span(u + c_i w_i)`: each lies in the plane `span(u, w_i)`,
/// so every hull is linear and `span(u)` is coplanar with every member.
/// The pairwise hulls `span(u, w_i, w_j)` make the arrangement central.
/// Skewness of a pair needs `c_i != c_j`, so the `c_i` are distinct.
pub fn synthetic_central(l: usize, n: usize, seed: u64) -> (LineFamily, QVec) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let u = rand_vec(&mut rng, l, 3);
        if u.is_zero() {
            continue;
        }
        let members: Vec<AffineSubspace> = (0..n)
            .map(|i| {
                let w = rand_vec(&mut rng, l, 4);
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                let c = Rat::from(sign * (i as i64 + 1));
                let dir = u.add(&w.scale(&c));
                AffineSubspace::line(w, dir)
            })
            .collect::<Result<_, _>>()
            .unwrap_or_default();
        if members.len() != n {
            continue;
        }
        let Ok(fam) = LineFamily::new(members) else { continue };
        if pairwise_skew(&fam).unwrap().holds && build_hulls(&fam).unwrap().n_hulls() >= 2 {
            return (fam, u);
        }
    }
}

/// The three lines whose hulls are exactly `x1 = 0`, `x2 = 0`, `x3 = 0`.
pub fn coordinate_central_triple() -> LineFamily {
    LineFamily::new(vec![
        line(&[0, 0, 1, 0], &[0, 0, 1, 1]),
        line(&[0, 1, 0, 0], &[0, 2, 0, 1]),
        line(&[1, 0, 0, 0], &[3, 0, 0, 1]),
    ])
    .unwrap()
}

/// `n` pairwise skew lines inside a random 3-flat of `Q^l`.
pub fn single_hull_family(l: usize, n: usize, seed: u64) -> LineFamily {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let origin = rand_vec(&mut rng, l, 5);
        let frame: Vec<QVec> = (0..3).map(|_| rand_vec(&mut rng, l, 3)).collect();
        if QMat::from_rows(frame.clone()).unwrap().rank() != 3 {
            continue;
        }
        let embed = |x: &QVec| -> QVec {
            (0..3).fold(QVec::zeros(l), |acc, i| acc.add(&frame[i].scale(&x[i])))
        };
        let members: Vec<AffineSubspace> = (0..n)
            .filter_map(|_| {
                let b = rand_vec(&mut rng, 3, 4);
                let d = rand_vec(&mut rng, 3, 4);
                if d.is_zero() {
                    return None;
                }
                AffineSubspace::line(origin.add(&embed(&b)), embed(&d)).ok()
            })
            .collect();
        if members.len() != n {
            continue;
        }
        let Ok(fam) = LineFamily::new(members) else { continue };
        if pairwise_skew(&fam).unwrap().holds {
            return fam;
        }
    }
}

/// Applies `x -> M x + c` with `M` an invertible integer matrix, into `Q^m`
/// when `M` is `m x l` of rank `l`.
pub fn map_family(fam: &LineFamily, m: &QMat, c: &QVec) -> LineFamily {
    let members = fam
        .members()
        .iter()
        .map(|f| {
            let base = m.mul_vec(f.base()).add(c);
            let dirs = QMat::new(f.dirs().rows().iter().map(|d| m.mul_vec(d)).collect(), m.nrows()).unwrap();
            AffineSubspace::canonicalize(base, dirs).unwrap()
        })
        .collect();
    LineFamily::new(members).unwrap()
}

/// Random `m x l` integer matrix of full column rank.
pub fn random_injective(rng_seed: u64, m: usize, l: usize) -> QMat {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    loop {
        let rows: Vec<QVec> = (0..m).map(|_| rand_vec(&mut rng, l, 3)).collect();
        let mat = QMat::new(rows, l).unwrap();
        if mat.rank() == l {
            return mat;
        }
    }
}

pub fn random_point(seed: u64, n: usize) -> QVec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rand_vec(&mut rng, n, 6)
}
