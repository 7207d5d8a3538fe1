//! Abstract point/block incidence structures with 1-based labels.
//!
//! Points are `1..=n_points`; blocks are numbered `1..=blocks().len()` in
//! the order given. The Fano plane uses the labeling where block `j` is the
//! hyperplane `H_j` of the skew-line construction and point `i` is line `L_i`.

use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncidenceError {
    #[error("point {point} out of range 1..={n_points}")]
    PointOutOfRange { point: usize, n_points: usize },
    #[error("block {0} has fewer than 2 points")]
    BlockTooSmall(usize),
    #[error("block {0} repeats a point")]
    RepeatedPoint(usize),
    #[error("blocks {0} and {1} are identical")]
    DuplicateBlock(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceDesign {
    n_points: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawDesign {
    n_points: usize,
    blocks: Vec<Vec<usize>>,
}

impl<'de> Deserialize<'de> for IncidenceDesign {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawDesign::deserialize(deserializer)?;
        IncidenceDesign::new(raw.n_points, raw.blocks).map_err(serde::de::Error::custom)
    }
}

/// The seven lines of PG(2,2) in the order `H_1..H_7`.
const FANO_BLOCKS: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 6, 7],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 5, 6],
];

impl IncidenceDesign {
    /// Validates and sorts each block. Block order is preserved.
    pub fn new(n_points: usize, blocks: Vec<Vec<usize>>) -> Result<Self, IncidenceError> {
        let mut sorted = Vec::with_capacity(blocks.len());
        for (j, mut b) in blocks.into_iter().enumerate() {
            let label = j + 1;
            if let Some(&p) = b.iter().find(|&&p| p == 0 || p > n_points) {
                return Err(IncidenceError::PointOutOfRange { point: p, n_points });
            }
            b.sort_unstable();
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(IncidenceError::RepeatedPoint(label));
            }
            if b.len() < 2 {
                return Err(IncidenceError::BlockTooSmall(label));
            }
            if let Some(i) = sorted.iter().position(|other| *other == b) {
                return Err(IncidenceError::DuplicateBlock(i + 1, label));
            }
            sorted.push(b);
        }
        Ok(IncidenceDesign {
            n_points,
            blocks: sorted,
        })
    }

    pub fn fano_plane() -> Self {
        IncidenceDesign {
            n_points: 7,
            blocks: FANO_BLOCKS.iter().map(|b| b.to_vec()).collect(),
        }
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block with 1-based label `j`.
    pub fn block(&self, j: usize) -> Option<&[usize]> {
        j.checked_sub(1)
            .and_then(|i| self.blocks.get(i))
            .map(Vec::as_slice)
    }

    /// Labels of the blocks containing `point`, ascending.
    pub fn blocks_through(&self, point: usize) -> Result<Vec<usize>, IncidenceError> {
        self.check_point(point)?;
        Ok(self
            .blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.binary_search(&point).is_ok())
            .map(|(i, _)| i + 1)
            .collect())
    }

    /// Labels of the blocks containing both points.
    pub fn blocks_through_pair(&self, p: usize, q: usize) -> Result<Vec<usize>, IncidenceError> {
        self.check_point(p)?;
        self.check_point(q)?;
        Ok(self
            .blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.binary_search(&p).is_ok() && b.binary_search(&q).is_ok())
            .map(|(i, _)| i + 1)
            .collect())
    }

    fn check_point(&self, point: usize) -> Result<(), IncidenceError> {
        if point == 0 || point > self.n_points {
            return Err(IncidenceError::PointOutOfRange {
                point,
                n_points: self.n_points,
            });
        }
        Ok(())
    }

    /// First pair `(p, q)`, `p < q`, that lies in no block of size >= 3.
    pub fn uncovered_pair(&self) -> Option<(usize, usize)> {
        for p in 1..=self.n_points {
            for q in p + 1..=self.n_points {
                let covered = self.blocks.iter().any(|b| {
                    b.len() >= 3 && b.binary_search(&p).is_ok() && b.binary_search(&q).is_ok()
                });
                if !covered {
                    return Some((p, q));
                }
            }
        }
        None
    }

    /// Every pair of points lies on a block with at least one further point.
    pub fn is_pairwise_covered(&self) -> bool {
        self.uncovered_pair().is_none()
    }

    /// Any two points on exactly one block, any two blocks meet in exactly
    /// one point, and some four points have no three on a block.
    pub fn is_projective_plane(&self) -> bool {
        let pairs_ok = (1..=self.n_points).all(|p| {
            (p + 1..=self.n_points).all(|q| {
                self.blocks_through_pair(p, q)
                    .map(|bs| bs.len() == 1)
                    .unwrap_or(false)
            })
        });
        let meets_ok = self.blocks.iter().enumerate().all(|(i, a)| {
            self.blocks[i + 1..]
                .iter()
                .all(|b| a.iter().filter(|p| b.binary_search(p).is_ok()).count() == 1)
        });
        pairs_ok && meets_ok && self.blocks.len() == self.n_points && self.n_points >= 7
    }

    /// A copy with block `j` (1-based) removed.
    pub fn without_block(&self, j: usize) -> Option<Self> {
        let i = j.checked_sub(1).filter(|&i| i < self.blocks.len())?;
        let mut blocks = self.blocks.clone();
        blocks.remove(i);
        Some(IncidenceDesign {
            n_points: self.n_points,
            blocks,
        })
    }
}
