//! Brute-force Sylvester-Gallai checks on finite sets of projective points,
//! each given by a nonzero representative vector.

use super::VerifyError;
use crate::ratlin::{QMat, QVec};

fn validate(points: &[QVec]) -> Result<(), VerifyError> {
    let Some(first) = points.first() else {
        return Ok(());
    };
    for (i, p) in points.iter().enumerate() {
        if p.dim() != first.dim() {
            return Err(VerifyError::PointDimMismatch(i));
        }
        if p.is_zero() {
            return Err(VerifyError::ZeroPoint(i));
        }
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if span(&points[i], &points[j]).nrows() < 2 {
                return Err(VerifyError::DuplicatePoint(i, j));
            }
        }
    }
    Ok(())
}

fn span(a: &QVec, b: &QVec) -> QMat {
    QMat::from_rows(vec![a.clone(), b.clone()])
        .expect("equal dims")
        .row_space_basis()
}

fn is_ordinary(points: &[QVec], i: usize, j: usize) -> bool {
    let line = span(&points[i], &points[j]);
    !points
        .iter()
        .enumerate()
        .any(|(k, p)| k != i && k != j && line.basis_spans(p))
}

/// All pairs `(i, j)`, `i < j`, whose joining line holds no other point.
pub fn ordinary_lines(points: &[QVec]) -> Result<Vec<(usize, usize)>, VerifyError> {
    validate(points)?;
    let n = points.len();
    Ok((0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| is_ordinary(points, i, j))
        .collect())
}

/// The lexicographically first ordinary pair, or `None` for an SGC.
pub fn find_ordinary_line(points: &[QVec]) -> Result<Option<(usize, usize)>, VerifyError> {
    validate(points)?;
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if is_ordinary(points, i, j) {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_sgc(points: &[QVec]) -> Result<bool, VerifyError> {
    Ok(find_ordinary_line(points)?.is_none())
}

/// All points on one projective line (their span has dimension at most 2).
pub fn are_collinear(points: &[QVec]) -> Result<bool, VerifyError> {
    validate(points)?;
    if points.is_empty() {
        return Ok(true);
    }
    Ok(QMat::from_rows(points.to_vec())?.rank() <= 2)
}
