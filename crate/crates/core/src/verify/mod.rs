//! Verification of skew-flat designs: hull arrangements, centrality, the
//! transversal line of a central arrangement, projection to a point
//! configuration, and the centrality/containment equivalence report.

mod family;
mod hulls;
mod sgc;
mod theorem;
mod transversal;

pub use family::LineFamily;
pub use hulls::{
    build_hulls, common_intersection, hull_multiplicities, is_central, is_sg_design, min_enclosing_flat,
    multiplicity_dichotomy_holds, pairwise_skew, HullArrangement, PairCheck,
};
pub use sgc::{are_collinear, find_ordinary_line, is_sgc, ordinary_lines};
pub use theorem::{check_main_theorem, TheoremReport};
pub use transversal::{extract_transversal, project_family, Transversal};

use thiserror::Error;

use crate::geom::GeomError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("family is empty")]
    EmptyFamily,
    #[error("ambient dimension {0} is below 4")]
    AmbientTooSmall(usize),
    #[error("member {index} has dimension {found}, expected {expected}")]
    MixedMemberDims {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("member {index} lives in Q^{found}, expected Q^{expected}")]
    MixedAmbient {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("members {0} and {1} are the same flat")]
    DuplicateMember(usize, usize),
    #[error("members {0} and {1} are not skew")]
    NotSkew(usize, usize),
    #[error("operation requires lines, members have dimension {0}")]
    NotLines(usize),
    #[error("arrangement has {0} hull(s), at least 2 required")]
    TooFewHulls(usize),
    #[error("hull arrangement does not pass through the origin")]
    NotThroughOrigin,
    #[error("member {0} lies in only one hull")]
    MissingSecondHull(usize),
    #[error("member {0} is not coplanar with the transversal")]
    NotCoplanar(usize),
    #[error("member {0} coincides with the transversal")]
    TransversalIsMember(usize),
    #[error("members {0} and {1} span the same plane with the transversal")]
    SharedPlane(usize, usize),
    #[error("point {0} is the zero vector")]
    ZeroPoint(usize),
    #[error("points {0} and {1} are the same projective point")]
    DuplicatePoint(usize, usize),
    #[error("point dimension mismatch at {0}")]
    PointDimMismatch(usize),
    #[error("{check} failed: {detail}")]
    TheoremViolation { check: &'static str, detail: String },
    #[error(transparent)]
    Geom(#[from] GeomError),
}

impl From<crate::ratlin::LinError> for VerifyError {
    fn from(e: crate::ratlin::LinError) -> Self {
        VerifyError::Geom(GeomError::Lin(e))
    }
}
