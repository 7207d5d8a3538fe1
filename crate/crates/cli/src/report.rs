//! Human and JSON renderings of each analysis subcommand.

use serde::Serialize;
use skewflats::geom::AffineSubspace;
use skewflats::ratlin::QVec;
use skewflats::verify::{
    are_collinear, build_hulls, check_main_theorem, extract_transversal, find_ordinary_line, hull_multiplicities,
    is_central, multiplicity_dichotomy_holds, pairwise_skew, LineFamily, TheoremReport, Transversal,
};

use crate::{to_json, Failure};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pair(p: Option<(usize, usize)>) -> String {
    p.map_or_else(|| "-".into(), |(i, j)| format!("members {i} and {j}"))
}

fn header(fam: &LineFamily) -> String {
    format!(
        "family: {} flats of dim {} in Q^{}",
        fam.len(),
        fam.member_dim(),
        fam.ambient_dim()
    )
}

#[derive(Serialize)]
struct VerifyReport {
    ambient_dim: usize,
    member_dim: usize,
    n_members: usize,
    pairwise_skew: bool,
    skew_witness: Option<(usize, usize)>,
    is_design: Option<bool>,
    ordinary_hull_witness: Option<(usize, usize)>,
    n_hulls: Option<usize>,
    lines_per_hull: Option<Vec<Vec<usize>>>,
    multiplicities: Option<Vec<usize>>,
    multiplicity_dichotomy: Option<bool>,
}

pub fn verify(fam: &LineFamily, json: bool) -> Result<bool, Failure> {
    let skew = pairwise_skew(fam)?;
    let mut r = VerifyReport {
        ambient_dim: fam.ambient_dim(),
        member_dim: fam.member_dim(),
        n_members: fam.len(),
        pairwise_skew: skew.holds,
        skew_witness: skew.witness,
        is_design: None,
        ordinary_hull_witness: None,
        n_hulls: None,
        lines_per_hull: None,
        multiplicities: None,
        multiplicity_dichotomy: None,
    };
    if skew.holds {
        let arr = build_hulls(fam)?;
        r.ordinary_hull_witness = arr.ordinary_pair();
        r.is_design = Some(r.ordinary_hull_witness.is_none());
        r.n_hulls = Some(arr.n_hulls());
        r.lines_per_hull = Some(arr.lines_per_hull().to_vec());
        r.multiplicities = Some(hull_multiplicities(&arr));
        r.multiplicity_dichotomy = Some(multiplicity_dichotomy_holds(&arr));
    }
    let design = r.is_design == Some(true);
    let ok = skew.holds && design && r.multiplicity_dichotomy == Some(true);
    if json {
        print!("{}", to_json(&r));
        return Ok(ok);
    }
    println!("{}", header(fam));
    if !skew.holds {
        println!("FAIL pairwise skew: {} are not skew", pair(skew.witness));
        return Ok(false);
    }
    println!("ok   pairwise skew");
    if design {
        println!("ok   design: every pair hull contains a third member");
    } else {
        println!(
            "FAIL design: hull of {} contains no other member",
            pair(r.ordinary_hull_witness)
        );
    }
    println!("     hulls: {}", r.n_hulls.unwrap_or(0));
    if let Some(lines) = &r.lines_per_hull {
        for (h, members) in lines.iter().enumerate() {
            println!("       H{h}: {members:?}");
        }
    }
    println!("     multiplicities: {:?}", r.multiplicities.as_deref().unwrap_or(&[]));
    let dich = r.multiplicity_dichotomy == Some(true);
    println!(
        "{} hull multiplicity dichotomy: one hull, or every member in at least three",
        if dich || !design { "ok  " } else { "FAIL" }
    );
    Ok(ok)
}

#[derive(Serialize)]
struct CentralReport {
    n_hulls: usize,
    central: bool,
    common_flat: Option<AffineSubspace>,
}

pub fn central(fam: &LineFamily, json: bool) -> Result<bool, Failure> {
    let arr = build_hulls(fam)?;
    let common = is_central(&arr)?;
    let r = CentralReport {
        n_hulls: arr.n_hulls(),
        central: common.is_some(),
        common_flat: common,
    };
    if json {
        print!("{}", to_json(&r));
    } else {
        println!("{}", header(fam));
        println!("hulls: {}", r.n_hulls);
        match &r.common_flat {
            Some(c) => println!("central: yes, hulls meet in {c} (dim {})", c.dim()),
            None => println!("central: no, the hulls have no common point"),
        }
    }
    Ok(true)
}

pub fn transversal(fam: &LineFamily, json: bool) -> Result<bool, Failure> {
    let arr = build_hulls(fam)?;
    let Some(common) = is_central(&arr)? else {
        return Err(Failure::check("precondition failed: central arrangement (the hulls have no common point)"));
    };
    let origin = common.base();
    let shifted = fam.translated_by_neg(origin)?;
    let t = extract_transversal(&shifted, &arr.translated_by_neg(origin)?)?;
    let t = Transversal {
        line: t.line.translate(origin).map_err(skewflats::verify::VerifyError::from)?,
        ..t
    };
    if json {
        print!("{}", to_json(&t));
    } else {
        println!("{}", header(fam));
        println!("transversal: {}", t.line);
        println!(
            "normal spaces of hulls H{}, H{}, H{} sum to dim {}",
            t.hulls.0, t.hulls.1, t.hulls.2, t.normal_sum_dim
        );
        println!("seed members: {} and {}", t.members.0, t.members.1);
    }
    Ok(true)
}

pub fn theorem(fam: &LineFamily, json: bool) -> Result<bool, Failure> {
    let r = check_main_theorem(fam)?;
    let ok = r.consistent && r.invariants_hold();
    if json {
        print!("{}", to_json(&r));
    } else {
        print_theorem(fam, &r);
    }
    Ok(ok)
}

fn print_theorem(fam: &LineFamily, r: &TheoremReport) {
    println!("{}", header(fam));
    println!("pairwise skew: {}", yes(r.pairwise_skew));
    if let Some(w) = r.skew_witness {
        println!("  not skew: {}", pair(Some(w)));
    }
    println!("design={}", r.is_design);
    if let Some(w) = r.ordinary_hull_witness {
        println!("  hull of {} holds no third member", pair(Some(w)));
    }
    println!("hulls: {}", r.n_hulls);
    println!("multiplicities: {:?}", r.multiplicities);
    println!("hull multiplicity dichotomy: {}", yes(r.multiplicity_dichotomy));
    println!("designs with at most six members have one hull: {}", yes(r.small_design_single_hull));
    println!("central={}", r.central);
    if let Some(p) = &r.common_point {
        println!("  common point: {p}");
    }
    println!("enclosing flat dim: {}", r.enclosing_dim);
    println!("in3d={}", r.all_in_3d);
    if let Some(t) = &r.transversal {
        println!("transversal: {t}");
    }
    if let Some(e) = &r.transversal_error {
        println!("transversal: not extracted ({e})");
    }
    if let Some(points) = &r.projected_points {
        let shown: Vec<String> = points.iter().map(QVec::to_string).collect();
        println!("projected points: {}", shown.join(" "));
        println!("projected ordinary line: {}", r.projected_ordinary_line.map_or("none".into(), |(i, j)| format!("{i}-{j}")));
        println!("projected collinear: {}", yes(r.projected_collinear == Some(true)));
    }
    println!("consistent={}", r.consistent);
    if !r.invariants_hold() {
        println!("FAIL internal invariants violated");
    }
}

#[derive(Serialize)]
struct OrdinaryLineReport {
    n_points: usize,
    ordinary_line: Option<(usize, usize)>,
    collinear: bool,
}

pub fn ordinary_line(points: &[QVec], json: bool) -> Result<bool, Failure> {
    let r = OrdinaryLineReport {
        n_points: points.len(),
        ordinary_line: find_ordinary_line(points)?,
        collinear: are_collinear(points)?,
    };
    if json {
        print!("{}", to_json(&r));
    } else {
        match r.ordinary_line {
            Some((i, j)) => println!("ordinary line through points {i} and {j}"),
            None => println!("no ordinary line: every pair's line holds a third point"),
        }
        println!("collinear: {}", yes(r.collinear));
    }
    Ok(true)
}
