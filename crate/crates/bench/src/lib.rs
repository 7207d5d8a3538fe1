//! Seeded inputs shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewflats::ratlin::{QMat, QVec, Rat};

/// `rows x cols` matrix with entries `p/q`, `|p| <= 9`, `1 <= q <= 5`.
pub fn random_matrix(seed: u64, rows: usize, cols: usize) -> QMat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| Rat::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)).unwrap())
                .collect::<QVec>()
        })
        .collect();
    QMat::new(rows, cols).unwrap()
}

/// `n` random nonzero integer points of `Q^dim`, read projectively.
pub fn random_points(seed: u64, n: usize, dim: usize) -> Vec<QVec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = QVec::from_ints(&(0..dim).map(|_| rng.gen_range(-6i64..=6)).collect::<Vec<_>>());
        if !p.is_zero() {
            out.push(p);
        }
    }
    out
}
