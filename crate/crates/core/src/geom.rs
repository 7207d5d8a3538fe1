//! Affine flats of `Q^l` in canonical form and the incidence predicates
//! built on them.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

use crate::ratlin::{orthogonal_complement, solve_affine, LinError, QMat, QVec, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("expected a line, got a flat of dimension {0}")]
    NotALine(usize),
    #[error("flat does not pass through the origin")]
    NotLinear,
    #[error("flat does not contain the projection line")]
    DoesNotContain,
    #[error("ambient dimension must be positive")]
    ZeroAmbient,
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// An affine subspace `base + span(dirs)` of `Q^ambient_dim`.
///
/// Always canonical: `dirs` is the RREF basis of the direction space and
/// `base` is the unique point of the flat whose coordinates at the pivot
/// columns of `dirs` are zero. Two values are equal iff they are the same
/// set of points.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AffineSubspace {
    ambient_dim: usize,
    base: QVec,
    dirs: QMat,
}

#[derive(Deserialize)]
struct RawFlat {
    ambient_dim: usize,
    base: QVec,
    dirs: Vec<QVec>,
}

impl<'de> Deserialize<'de> for AffineSubspace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawFlat::deserialize(deserializer)?;
        if raw.base.dim() != raw.ambient_dim {
            return Err(serde::de::Error::custom(format!(
                "base has {} coordinates, ambient_dim is {}",
                raw.base.dim(),
                raw.ambient_dim
            )));
        }
        let dirs = QMat::new(raw.dirs, raw.ambient_dim).map_err(serde::de::Error::custom)?;
        AffineSubspace::canonicalize(raw.base, dirs).map_err(serde::de::Error::custom)
    }
}

impl AffineSubspace {
    /// Brings `base + span(dirs)` to canonical form.
    pub fn canonicalize(base: QVec, dirs: QMat) -> Result<Self, GeomError> {
        let n = base.dim();
        if n == 0 {
            return Err(GeomError::ZeroAmbient);
        }
        if dirs.ncols() != n && !(dirs.is_empty() && dirs.ncols() == 0) {
            return Err(GeomError::AmbientMismatch {
                left: n,
                right: dirs.ncols(),
            });
        }
        let dirs = if dirs.ncols() == n {
            dirs.row_space_basis()
        } else {
            QMat::empty(n)
        };
        let base = dirs.reduce_against_basis(&base);
        Ok(AffineSubspace {
            ambient_dim: n,
            base,
            dirs,
        })
    }

    pub fn point(p: QVec) -> Result<Self, GeomError> {
        let n = p.dim();
        Self::canonicalize(p, QMat::empty(n))
    }

    /// The linear subspace spanned by `dirs`.
    pub fn linear(dirs: QMat) -> Result<Self, GeomError> {
        Self::canonicalize(QVec::zeros(dirs.ncols()), dirs)
    }

    pub fn line(base: QVec, dir: QVec) -> Result<Self, GeomError> {
        let dirs = QMat::from_rows(vec![dir])?;
        if dirs.rank() != 1 {
            return Err(GeomError::NotALine(0));
        }
        Self::canonicalize(base, dirs)
    }

    /// The whole space `Q^n`.
    pub fn full(n: usize) -> Result<Self, GeomError> {
        Self::linear(QMat::identity(n))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn base(&self) -> &QVec {
        &self.base
    }

    pub fn dirs(&self) -> &QMat {
        &self.dirs
    }

    pub fn dim(&self) -> usize {
        self.dirs.nrows()
    }

    fn same_ambient(&self, other: &AffineSubspace) -> Result<(), GeomError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(GeomError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn contains_point(&self, p: &QVec) -> Result<bool, GeomError> {
        if p.dim() != self.ambient_dim {
            return Err(GeomError::AmbientMismatch {
                left: self.ambient_dim,
                right: p.dim(),
            });
        }
        Ok(self.dirs.reduce_against_basis(p) == self.base)
    }

    /// `other ⊆ self`.
    pub fn contains_flat(&self, other: &AffineSubspace) -> Result<bool, GeomError> {
        self.same_ambient(other)?;
        Ok(self.contains_point(&other.base)?
            && other.dirs.rows().iter().all(|d| self.dirs.basis_spans(d)))
    }

    pub fn passes_through_origin(&self) -> bool {
        self.base.is_zero()
    }

    /// Defining equations `normals · x = offsets`, one row per normal.
    pub fn equations(&self) -> (QMat, QVec) {
        let normals = orthogonal_complement(&self.dirs, self.ambient_dim)
            .expect("dirs width equals ambient dim");
        let offsets = normals.mul_vec(&self.base);
        (normals, offsets)
    }

    /// Set intersection, or `None` when it is empty.
    pub fn intersect(&self, other: &AffineSubspace) -> Result<Option<AffineSubspace>, GeomError> {
        self.same_ambient(other)?;
        let (n1, c1) = self.equations();
        let (n2, c2) = other.equations();
        let normals = n1.stack(&n2)?;
        let offsets: QVec = c1.iter().chain(c2.iter()).cloned().collect();
        match solve_affine(&normals, &offsets)? {
            None => Ok(None),
            Some((p, k)) => Ok(Some(AffineSubspace::canonicalize(p, k)?)),
        }
    }

    /// Smallest flat containing both `self` and `other`.
    pub fn affine_hull(&self, other: &AffineSubspace) -> Result<AffineSubspace, GeomError> {
        self.same_ambient(other)?;
        let mut dirs = self.dirs.stack(&other.dirs)?;
        dirs.push_row(other.base.sub(&self.base));
        AffineSubspace::canonicalize(self.base.clone(), dirs)
    }

    /// Skew in the sense `dim AH(W1, W2) = dim W1 + dim W2 + 1`.
    pub fn is_skew(&self, other: &AffineSubspace) -> Result<bool, GeomError> {
        Ok(self.affine_hull(other)?.dim() == self.dim() + other.dim() + 1)
    }

    /// Two lines are coplanar when their hull has dimension at most 2.
    pub fn lines_coplanar(&self, other: &AffineSubspace) -> Result<bool, GeomError> {
        for l in [self, other] {
            if l.dim() != 1 {
                return Err(GeomError::NotALine(l.dim()));
            }
        }
        Ok(self.affine_hull(other)?.dim() <= 2)
    }

    /// The flat shifted by `-offset`.
    pub fn translate_by_neg(&self, offset: &QVec) -> Result<AffineSubspace, GeomError> {
        if offset.dim() != self.ambient_dim {
            return Err(GeomError::AmbientMismatch {
                left: self.ambient_dim,
                right: offset.dim(),
            });
        }
        AffineSubspace::canonicalize(self.base.sub(offset), self.dirs.clone())
    }

    /// The flat shifted by `+offset`.
    pub fn translate(&self, offset: &QVec) -> Result<AffineSubspace, GeomError> {
        self.translate_by_neg(&offset.scale(&Rat::from(-1)))
    }

    /// Orthogonal projection of this linear subspace onto `line⊥`, where
    /// `line` is a line through the origin contained in `self`. Returns the
    /// RREF basis of the image; a 2-plane through `line` maps to a single
    /// direction, i.e. a projective point.
    pub fn project_along(&self, line: &AffineSubspace) -> Result<QMat, GeomError> {
        self.same_ambient(line)?;
        if line.dim() != 1 {
            return Err(GeomError::NotALine(line.dim()));
        }
        if !line.passes_through_origin() {
            return Err(GeomError::NotLinear);
        }
        if !self.contains_flat(line)? {
            return Err(GeomError::DoesNotContain);
        }
        let u = line.dirs.row(0);
        let uu = u.dot(u);
        let mut image = QMat::empty(self.ambient_dim);
        for d in self.dirs.rows() {
            let k = &d.dot(u) / &uu;
            let mut p = d.clone();
            p.sub_scaled(&k, u);
            image.push_row(p);
        }
        Ok(image.row_space_basis())
    }
}

impl fmt::Debug for AffineSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + span{:?}", self.base, self.dirs)
    }
}

impl fmt::Display for AffineSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        for d in self.dirs.rows() {
            write!(f, " + t{d}")?;
        }
        Ok(())
    }
}
