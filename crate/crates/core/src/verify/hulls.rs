use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{LineFamily, VerifyError};
use crate::geom::AffineSubspace;

/// Outcome of a pairwise check: `witness` is the first failing pair of
/// member indices in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

impl PairCheck {
    fn from_witness(witness: Option<(usize, usize)>) -> Self {
        PairCheck {
            holds: witness.is_none(),
            witness,
        }
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn pairwise_skew(family: &LineFamily) -> Result<PairCheck, VerifyError> {
    let m = family.members();
    for (i, j) in pairs(m.len()) {
        if !m[i].is_skew(&m[j])? {
            return Ok(PairCheck::from_witness(Some((i, j))));
        }
    }
    Ok(PairCheck::from_witness(None))
}

/// The distinct hulls of member pairs with both incidence maps.
///
/// Hulls are numbered in order of their first generating pair. Every index
/// here is 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HullArrangement {
    ambient_dim: usize,
    hulls: Vec<AffineSubspace>,
    /// Members contained in each hull, ascending.
    lines_per_hull: Vec<Vec<usize>>,
    /// Hulls containing each member, ascending.
    hulls_per_line: Vec<Vec<usize>>,
}

impl HullArrangement {
    pub fn hulls(&self) -> &[AffineSubspace] {
        &self.hulls
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn n_hulls(&self) -> usize {
        self.hulls.len()
    }

    pub fn lines_per_hull(&self) -> &[Vec<usize>] {
        &self.lines_per_hull
    }

    pub fn hulls_per_line(&self) -> &[Vec<usize>] {
        &self.hulls_per_line
    }

    /// The unique hull containing members `i` and `j`.
    pub fn hull_of_pair(&self, i: usize, j: usize) -> Option<usize> {
        let hj = &self.hulls_per_line[j];
        self.hulls_per_line[i]
            .iter()
            .copied()
            .find(|h| hj.binary_search(h).is_ok())
    }

    /// First member pair whose hull holds no third member.
    pub fn ordinary_pair(&self) -> Option<(usize, usize)> {
        pairs(self.hulls_per_line.len()).into_iter().find(|&(i, j)| {
            self.hull_of_pair(i, j)
                .is_some_and(|h| self.lines_per_hull[h].len() == 2)
        })
    }

    /// Same incidence, every hull shifted by `-offset`.
    pub fn translated_by_neg(&self, offset: &crate::ratlin::QVec) -> Result<Self, VerifyError> {
        let hulls = self
            .hulls
            .iter()
            .map(|h| h.translate_by_neg(offset))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HullArrangement {
            hulls,
            ..self.clone()
        })
    }
}

pub fn build_hulls(family: &LineFamily) -> Result<HullArrangement, VerifyError> {
    let m = family.members();
    let ps = pairs(m.len());
    let pair_hulls: Vec<AffineSubspace> = ps
        .par_iter()
        .map(|&(i, j)| m[i].affine_hull(&m[j]))
        .collect::<Result<_, _>>()?;
    let expected = 2 * family.member_dim() + 1;
    let mut hulls = Vec::new();
    let mut seen: HashMap<&AffineSubspace, usize> = HashMap::new();
    for (&(i, j), h) in ps.iter().zip(&pair_hulls) {
        if h.dim() != expected {
            return Err(VerifyError::NotSkew(i, j));
        }
        if !seen.contains_key(h) {
            seen.insert(h, hulls.len());
            hulls.push(h.clone());
        }
    }
    let lines_per_hull: Vec<Vec<usize>> = hulls
        .par_iter()
        .map(|h| -> Result<Vec<usize>, VerifyError> {
            let mut inside = Vec::new();
            for (k, member) in m.iter().enumerate() {
                if h.contains_flat(member)? {
                    inside.push(k);
                }
            }
            Ok(inside)
        })
        .collect::<Result<_, _>>()?;
    let mut hulls_per_line = vec![Vec::new(); m.len()];
    for (h, members) in lines_per_hull.iter().enumerate() {
        for &k in members {
            hulls_per_line[k].push(h);
        }
    }
    Ok(HullArrangement {
        ambient_dim: family.ambient_dim(),
        hulls,
        lines_per_hull,
        hulls_per_line,
    })
}

/// Whether every pair's hull holds a third member. A family that is not
/// pairwise skew fails with its first non-skew pair as witness.
pub fn is_sg_design(family: &LineFamily) -> Result<PairCheck, VerifyError> {
    let skew = pairwise_skew(family)?;
    if !skew.holds {
        return Ok(skew);
    }
    let arr = build_hulls(family)?;
    Ok(PairCheck::from_witness(arr.ordinary_pair()))
}

pub fn hull_multiplicities(arr: &HullArrangement) -> Vec<usize> {
    arr.hulls_per_line.iter().map(Vec::len).collect()
}

/// Either a single hull, or every member lies in at least three hulls.
/// A one-member family (no hulls) passes vacuously.
pub fn multiplicity_dichotomy_holds(arr: &HullArrangement) -> bool {
    arr.n_hulls() <= 1 || hull_multiplicities(arr).iter().all(|&c| c >= 3)
}

/// Intersection of all `flats`, or `None` when it is empty. An empty list
/// intersects to `None` as well; callers decide what that means.
pub fn common_intersection(flats: &[AffineSubspace]) -> Result<Option<AffineSubspace>, VerifyError> {
    let Some((first, rest)) = flats.split_first() else {
        return Ok(None);
    };
    let mut acc = first.clone();
    for h in rest {
        match acc.intersect(h)? {
            Some(next) => acc = next,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

/// Common intersection of all hulls, if nonempty. With no hulls at all the
/// intersection is the whole space.
pub fn is_central(arr: &HullArrangement) -> Result<Option<AffineSubspace>, VerifyError> {
    if arr.hulls.is_empty() {
        return Ok(Some(AffineSubspace::full(arr.ambient_dim)?));
    }
    common_intersection(&arr.hulls)
}

/// Smallest flat containing every member.
pub fn min_enclosing_flat(family: &LineFamily) -> Result<AffineSubspace, VerifyError> {
    let mut iter = family.members().iter();
    let mut acc = iter.next().ok_or(VerifyError::EmptyFamily)?.clone();
    for m in iter {
        acc = acc.affine_hull(m)?;
    }
    Ok(acc)
}
