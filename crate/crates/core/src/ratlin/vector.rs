use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use super::Rat;

/// A vector of rationals. Used for points, directions and normals alike.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QVec(Vec<Rat>);

impl QVec {
    pub fn new(entries: Vec<Rat>) -> Self {
        QVec(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        QVec(entries.iter().map(|&x| Rat::from(x)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        QVec(vec![Rat::zero(); dim])
    }

    /// The standard basis vector `e_i` (0-based).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = QVec::zeros(dim);
        v.0[i] = Rat::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rat> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn dot(&self, other: &QVec) -> Rat {
        assert_eq!(self.dim(), other.dim(), "dot product of mismatched vectors");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &QVec) -> QVec {
        assert_eq!(self.dim(), other.dim());
        QVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &QVec) -> QVec {
        assert_eq!(self.dim(), other.dim());
        QVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rat) -> QVec {
        QVec(self.0.iter().map(|a| a * k).collect())
    }

    /// `self - k * other`, in place.
    pub fn sub_scaled(&mut self, k: &Rat, other: &QVec) {
        if k.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a -= &(k * b);
            }
        }
    }

    /// Append `x` as a new last coordinate.
    pub fn extended(&self, x: Rat) -> QVec {
        let mut v = self.0.clone();
        v.push(x);
        QVec(v)
    }

    /// Drop the last coordinate.
    pub fn truncated(&self) -> QVec {
        QVec(self.0[..self.0.len().saturating_sub(1)].to_vec())
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|x| !x.is_zero())
    }
}

impl Index<usize> for QVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl IndexMut<usize> for QVec {
    fn index_mut(&mut self, i: usize) -> &mut Rat {
        &mut self.0[i]
    }
}

impl FromIterator<Rat> for QVec {
    fn from_iter<I: IntoIterator<Item = Rat>>(iter: I) -> Self {
        QVec(iter.into_iter().collect())
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
