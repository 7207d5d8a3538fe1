use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LinError, QVec, Rat};

/// A dense rectangular matrix of rationals, stored by rows.
///
/// `ncols` is tracked separately so that a matrix with zero rows still knows
/// its width (an empty basis of a subspace of `Q^n`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMat {
    rows: Vec<QVec>,
    ncols: usize,
}

/// Output of [`QMat::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// The reduced row echelon form, same shape as the input.
    pub matrix: QMat,
    pub rank: usize,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl QMat {
    pub fn new(rows: Vec<QVec>, ncols: usize) -> Result<Self, LinError> {
        if let Some(bad) = rows.iter().find(|r| r.dim() != ncols) {
            return Err(LinError::DimMismatch {
                expected: ncols,
                found: bad.dim(),
            });
        }
        Ok(QMat { rows, ncols })
    }

    /// Builds a matrix from non-empty rows; width is taken from the first row.
    pub fn from_rows(rows: Vec<QVec>) -> Result<Self, LinError> {
        let ncols = rows.first().map_or(0, QVec::dim);
        QMat::new(rows, ncols)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows: Vec<QVec> = rows.iter().map(|r| QVec::from_ints(r)).collect();
        QMat::from_rows(rows).expect("ragged integer matrix")
    }

    pub fn empty(ncols: usize) -> Self {
        QMat {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        QMat {
            rows: (0..n).map(|i| QVec::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[QVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<QVec> {
        self.rows
    }

    pub fn row(&self, i: usize) -> &QVec {
        &self.rows[i]
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.rows[r][c]
    }

    /// Adds a row; panics if its length differs from `ncols`.
    pub fn push_row(&mut self, row: QVec) {
        assert_eq!(row.dim(), self.ncols, "row length mismatch");
        self.rows.push(row);
    }

    /// Stacks the rows of `self` above the rows of `other`.
    pub fn stack(&self, other: &QMat) -> Result<QMat, LinError> {
        if self.ncols != other.ncols {
            return Err(LinError::DimMismatch {
                expected: self.ncols,
                found: other.ncols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(QMat {
            rows,
            ncols: self.ncols,
        })
    }

    pub fn transpose(&self) -> QMat {
        let rows = (0..self.ncols)
            .map(|c| self.rows.iter().map(|r| r[c].clone()).collect())
            .collect();
        QMat {
            rows,
            ncols: self.rows.len(),
        }
    }

    pub fn mul_vec(&self, v: &QVec) -> QVec {
        assert_eq!(v.dim(), self.ncols, "matrix-vector shape mismatch");
        self.rows.iter().map(|r| r.dot(v)).collect()
    }

    /// Gauss-Jordan elimination to the unique reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip().expect("pivot is nonzero");
            if !inv.is_one() {
                m[r] = m[r].scale(&inv);
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let k = row[c].clone();
                    row.sub_scaled(&k, &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: QMat {
                rows: m,
                ncols: self.ncols,
            },
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// RREF-canonical basis of the row space: the nonzero rows of `rref`.
    pub fn row_space_basis(&self) -> QMat {
        let Rref {
            mut matrix, rank, ..
        } = self.rref();
        matrix.rows.truncate(rank);
        matrix
    }

    /// RREF-canonical basis of `{x : M x = 0}`.
    pub fn kernel(&self) -> QMat {
        let Rref { matrix, pivots, .. } = self.rref();
        let n = self.ncols;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = QMat::empty(n);
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut x = QVec::unit(n, free);
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = -matrix.get(row, free);
            }
            basis.rows.push(x);
        }
        basis.row_space_basis()
    }

    /// Reduces `v` against an RREF basis (as returned by
    /// [`row_space_basis`](Self::row_space_basis)): subtracts the unique
    /// combination of basis rows that zeroes every pivot coordinate.
    pub fn reduce_against_basis(&self, v: &QVec) -> QVec {
        let mut out = v.clone();
        for row in &self.rows {
            let p = row.first_nonzero().expect("basis rows are nonzero");
            let k = out[p].clone();
            out.sub_scaled(&k, row);
        }
        out
    }

    /// Whether `v` lies in the row space; `self` must be an RREF basis.
    pub fn basis_spans(&self, v: &QVec) -> bool {
        self.reduce_against_basis(v).is_zero()
    }
}

/// Solves `A x = b`.
///
/// Returns the particular solution with every free variable set to zero and
/// the canonical kernel basis of `A`, or `None` when the system is
/// inconsistent.
pub fn solve_affine(a: &QMat, b: &QVec) -> Result<Option<(QVec, QMat)>, LinError> {
    if b.dim() != a.nrows() {
        return Err(LinError::DimMismatch {
            expected: a.nrows(),
            found: b.dim(),
        });
    }
    let n = a.ncols();
    let augmented = QMat {
        rows: a
            .rows
            .iter()
            .zip(b.iter())
            .map(|(r, bi)| r.extended(bi.clone()))
            .collect(),
        ncols: n + 1,
    };
    let Rref {
        matrix, pivots, ..
    } = augmented.rref();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = QVec::zeros(n);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = matrix.get(row, n).clone();
    }
    Ok(Some((x, a.kernel())))
}

/// RREF-canonical basis of the sum of the row spaces of `bases`.
pub fn subspace_sum(bases: &[QMat]) -> Result<QMat, LinError> {
    let Some(first) = bases.first() else {
        return Err(LinError::EmptyInput);
    };
    let mut all = first.clone();
    for b in &bases[1..] {
        all = all.stack(b)?;
    }
    Ok(all.row_space_basis())
}

/// RREF-canonical basis of the orthogonal complement of `span(basis)` in
/// `Q^ambient_dim` under the standard dot product.
pub fn orthogonal_complement(basis: &QMat, ambient_dim: usize) -> Result<QMat, LinError> {
    if basis.ncols() != ambient_dim {
        return Err(LinError::DimMismatch {
            expected: ambient_dim,
            found: basis.ncols(),
        });
    }
    Ok(basis.kernel())
}

/// RREF-canonical basis of `span(a) ∩ span(b)`.
pub fn subspace_intersection(a: &QMat, b: &QMat) -> Result<QMat, LinError> {
    let n = a.ncols();
    let pa = orthogonal_complement(a, n)?;
    let pb = orthogonal_complement(b, n)?;
    orthogonal_complement(&subspace_sum(&[pa, pb])?, n)
}

impl fmt::Debug for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]<{}>", self.ncols)
    }
}

impl Serialize for QMat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QMat {
    /// An empty array deserializes to a zero-width matrix; callers that know
    /// the ambient dimension fix the width with [`QMat::new`].
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<QVec>::deserialize(deserializer)?;
        QMat::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
