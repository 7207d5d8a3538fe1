use serde::Serialize;

use super::{
    are_collinear, build_hulls, extract_transversal, find_ordinary_line, hull_multiplicities,
    is_central, min_enclosing_flat, multiplicity_dichotomy_holds, pairwise_skew, project_family,
    LineFamily, VerifyError,
};
use crate::geom::AffineSubspace;
use crate::ratlin::QVec;

/// Everything the equivalence check learned about a family.
///
/// Member indices are 0-based. `consistent` records whether
/// "central iff contained in a (2k+1)-flat" holds; a family that is not a
/// design is outside the statement and counts as consistent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub ambient_dim: usize,
    pub member_dim: usize,
    pub n_members: usize,
    pub pairwise_skew: bool,
    pub skew_witness: Option<(usize, usize)>,
    pub is_design: bool,
    pub ordinary_hull_witness: Option<(usize, usize)>,
    pub n_hulls: usize,
    pub multiplicities: Vec<usize>,
    /// One hull, or every member in at least three hulls.
    pub multiplicity_dichotomy: bool,
    /// A design with at most six members has a single hull.
    pub small_design_single_hull: bool,
    pub central: bool,
    pub common_point: Option<QVec>,
    pub enclosing_dim: usize,
    pub all_in_3d: bool,
    pub transversal: Option<AffineSubspace>,
    pub transversal_error: Option<String>,
    /// Projected points of the members, in coordinates centred at `common_point`.
    pub projected_points: Option<Vec<QVec>>,
    pub projected_ordinary_line: Option<(usize, usize)>,
    pub projected_sgc: Option<bool>,
    pub projected_collinear: Option<bool>,
    pub consistent: bool,
}

impl TheoremReport {
    /// Internal invariants every report must satisfy regardless of input.
    pub fn invariants_hold(&self) -> bool {
        let sgc_ok = !matches!((self.projected_sgc, self.projected_collinear), (Some(true), Some(false)));
        (!self.is_design || (self.multiplicity_dichotomy && self.small_design_single_hull)) && sgc_ok
    }
}

/// Runs the full pipeline. Never fails on geometric grounds: every failed
/// check is recorded in the report.
pub fn check_main_theorem(family: &LineFamily) -> Result<TheoremReport, VerifyError> {
    let k = family.member_dim();
    let enclosing = min_enclosing_flat(family)?;
    let mut report = TheoremReport {
        ambient_dim: family.ambient_dim(),
        member_dim: k,
        n_members: family.len(),
        pairwise_skew: false,
        skew_witness: None,
        is_design: false,
        ordinary_hull_witness: None,
        n_hulls: 0,
        multiplicities: Vec::new(),
        multiplicity_dichotomy: false,
        small_design_single_hull: true,
        central: false,
        common_point: None,
        enclosing_dim: enclosing.dim(),
        all_in_3d: enclosing.dim() <= 2 * k + 1,
        transversal: None,
        transversal_error: None,
        projected_points: None,
        projected_ordinary_line: None,
        projected_sgc: None,
        projected_collinear: None,
        consistent: true,
    };

    let skew = pairwise_skew(family)?;
    report.pairwise_skew = skew.holds;
    report.skew_witness = skew.witness;
    if !skew.holds {
        return Ok(report);
    }

    let arr = build_hulls(family)?;
    report.n_hulls = arr.n_hulls();
    report.ordinary_hull_witness = arr.ordinary_pair();
    report.is_design = report.ordinary_hull_witness.is_none();
    report.multiplicities = hull_multiplicities(&arr);
    report.multiplicity_dichotomy = multiplicity_dichotomy_holds(&arr);
    report.small_design_single_hull = !report.is_design || family.len() > 6 || arr.n_hulls() <= 1;

    let center = is_central(&arr)?;
    report.central = center.is_some();
    report.common_point = center.as_ref().map(|c| c.base().clone());
    report.consistent = !report.is_design || report.central == report.all_in_3d;

    let Some(center) = center else {
        return Ok(report);
    };
    if arr.n_hulls() < 2 {
        return Ok(report);
    }
    if k != 1 {
        report.transversal_error = Some(format!(
            "transversal extraction needs lines, members have dimension {k}"
        ));
        return Ok(report);
    }
    let origin = center.base();
    let shifted = family.translated_by_neg(origin)?;
    let shifted_arr = arr.translated_by_neg(origin)?;
    let t = match extract_transversal(&shifted, &shifted_arr) {
        Ok(t) => t,
        Err(e) => {
            report.transversal_error = Some(e.to_string());
            return Ok(report);
        }
    };
    report.transversal = Some(t.line.translate(origin)?);
    match project_family(&shifted, &t.line) {
        Ok(points) => {
            let ordinary = find_ordinary_line(&points)?;
            report.projected_ordinary_line = ordinary;
            report.projected_sgc = Some(ordinary.is_none());
            report.projected_collinear = Some(are_collinear(&points)?);
            report.projected_points = Some(points);
        }
        Err(e) => report.transversal_error = Some(e.to_string()),
    }
    Ok(report)
}
