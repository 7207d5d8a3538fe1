use serde::Serialize;

use super::{HullArrangement, LineFamily, VerifyError};
use crate::geom::AffineSubspace;
use crate::ratlin::{orthogonal_complement, subspace_sum, QMat, QVec};

/// The common line of a central arrangement together with the choices that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transversal {
    pub line: AffineSubspace,
    /// Hull indices `(H, H_a, H_b)` whose normal spaces were summed.
    pub hulls: (usize, usize, usize),
    /// Members `(a, b)`: the first two members of `H`.
    pub members: (usize, usize),
    /// Dimension of the summed normal space; always `l - 1` on success.
    pub normal_sum_dim: usize,
}

/// Extracts the line through the origin that lies in every hull and is
/// coplanar with every member.
///
/// The arrangement must already be translated so that every hull passes
/// through the origin. Takes the first hull with two members `a`, `b`, a
/// second hull through `a` and a second hull through `b`; the line is the
/// orthogonal complement of the sum of their three normal spaces.
pub fn extract_transversal(
    family: &LineFamily,
    arr: &HullArrangement,
) -> Result<Transversal, VerifyError> {
    if family.member_dim() != 1 {
        return Err(VerifyError::NotLines(family.member_dim()));
    }
    if arr.n_hulls() < 2 {
        return Err(VerifyError::TooFewHulls(arr.n_hulls()));
    }
    if !arr.hulls().iter().all(AffineSubspace::passes_through_origin) {
        return Err(VerifyError::NotThroughOrigin);
    }
    let l = family.ambient_dim();
    let h = arr
        .lines_per_hull()
        .iter()
        .position(|ms| ms.len() >= 2)
        .ok_or(VerifyError::TooFewHulls(0))?;
    let (a, b) = (arr.lines_per_hull()[h][0], arr.lines_per_hull()[h][1]);
    let other_hull = |member: usize| {
        arr.hulls_per_line()[member]
            .iter()
            .copied()
            .find(|&x| x != h)
            .ok_or(VerifyError::MissingSecondHull(member))
    };
    let (ha, hb) = (other_hull(a)?, other_hull(b)?);

    let normals = [h, ha, hb]
        .iter()
        .map(|&i| orthogonal_complement(arr.hulls()[i].dirs(), l))
        .collect::<Result<Vec<QMat>, _>>()?;
    let sum = subspace_sum(&normals)?;
    if sum.nrows() != l - 1 {
        return Err(VerifyError::TheoremViolation {
            check: "normal-sum dimension",
            detail: format!("expected {}, got {}", l - 1, sum.nrows()),
        });
    }
    let line = AffineSubspace::linear(orthogonal_complement(&sum, l)?)?;

    for (i, hull) in arr.hulls().iter().enumerate() {
        if !hull.contains_flat(&line)? {
            return Err(VerifyError::TheoremViolation {
                check: "transversal in every hull",
                detail: format!("hull {i} misses the transversal"),
            });
        }
    }
    for (i, m) in family.members().iter().enumerate() {
        if *m == line {
            return Err(VerifyError::TheoremViolation {
                check: "transversal distinct from members",
                detail: format!("member {i} equals the transversal"),
            });
        }
        if !m.lines_coplanar(&line)? {
            return Err(VerifyError::TheoremViolation {
                check: "transversal coplanar with members",
                detail: format!("member {i} is skew to the transversal"),
            });
        }
    }
    Ok(Transversal {
        line,
        hulls: (h, ha, hb),
        members: (a, b),
        normal_sum_dim: sum.nrows(),
    })
}

/// Projects each member's plane through `line` orthogonally to `line`,
/// giving one projective point (a canonical direction vector) per member.
pub fn project_family(family: &LineFamily, line: &AffineSubspace) -> Result<Vec<QVec>, VerifyError> {
    if family.member_dim() != 1 {
        return Err(VerifyError::NotLines(family.member_dim()));
    }
    if line.dim() != 1 || !line.passes_through_origin() {
        return Err(VerifyError::Geom(crate::geom::GeomError::NotLinear));
    }
    let mut points: Vec<QVec> = Vec::with_capacity(family.len());
    for (i, m) in family.members().iter().enumerate() {
        if m == line {
            return Err(VerifyError::TransversalIsMember(i));
        }
        if !m.lines_coplanar(line)? {
            return Err(VerifyError::NotCoplanar(i));
        }
        let plane = line.affine_hull(m)?;
        let image = plane.project_along(line)?;
        debug_assert_eq!(image.nrows(), 1);
        let p = image.row(0).clone();
        if let Some(j) = points.iter().position(|q| *q == p) {
            return Err(VerifyError::SharedPlane(j, i));
        }
        points.push(p);
    }
    Ok(points)
}
