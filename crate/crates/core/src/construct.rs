//! Seeded generators for skew-flat designs:
//!
//! * seven pairwise skew lines in `Q^4` realizing the Fano plane, cut out
//!   of a random generic arrangement of seven hyperplanes;
//! * seven 2-planes through the origin of `Q^5` (cones over those lines);
//! * seven pairwise skew 2-flats of `Q^6` whose 5-dimensional hulls all
//!   pass through the origin, yet which span all of `Q^6`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{AffineSubspace, GeomError};
use crate::incidence::IncidenceDesign;
use crate::ratlin::{solve_affine, subspace_sum, LinError, QMat, QVec, Rat};
use crate::verify::{min_enclosing_flat, LineFamily, VerifyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("invalid generator settings: {0}")]
    InvalidSpec(String),
    #[error("no valid configuration after {0} attempts")]
    RetriesExhausted(usize),
    #[error("hyperplanes through point {0} do not meet in a line")]
    DegenerateTriple(usize),
    #[error("expected {expected} hyperplanes, got {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("genericity is defined for Q^4 only, got Q^{0}")]
    WrongAmbient(usize),
    #[error("cone precondition violated: {0}")]
    BadSlice(&'static str),
    #[error("t-values must be 7 distinct nonzero rationals")]
    BadTValues,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

impl From<LinError> for ConstructError {
    fn from(e: LinError) -> Self {
        ConstructError::Geom(GeomError::Lin(e))
    }
}

/// Seed and limits for the randomized generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub seed: u64,
    /// Integer coefficients are drawn uniformly from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: u32,
    pub max_retries: usize,
}

impl Default for GenSpec {
    fn default() -> Self {
        GenSpec {
            seed: 0,
            coeff_bound: 10,
            max_retries: 1000,
        }
    }
}

impl GenSpec {
    pub fn with_seed(seed: u64) -> Self {
        GenSpec {
            seed,
            ..GenSpec::default()
        }
    }

    fn validate(&self) -> Result<(), ConstructError> {
        if self.coeff_bound < 2 {
            return Err(ConstructError::InvalidSpec("coeff_bound must be at least 2".into()));
        }
        if self.max_retries == 0 {
            return Err(ConstructError::InvalidSpec("max_retries must be positive".into()));
        }
        Ok(())
    }
}

/// The hyperplane `{x : normal · x = offset}`, scaled so the first nonzero
/// normal entry is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Hyperplane {
    normal: QVec,
    offset: Rat,
}

impl Hyperplane {
    pub fn new(normal: QVec, offset: Rat) -> Result<Self, ConstructError> {
        let lead = normal
            .first_nonzero()
            .ok_or_else(|| ConstructError::InvalidSpec("zero normal vector".into()))?;
        let inv = normal[lead].recip().expect("nonzero");
        Ok(Hyperplane {
            normal: normal.scale(&inv),
            offset: &offset * &inv,
        })
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Result<Self, ConstructError> {
        Hyperplane::new(QVec::from_ints(normal), Rat::from(offset))
    }

    pub fn normal(&self) -> &QVec {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn ambient_dim(&self) -> usize {
        self.normal.dim()
    }

    pub fn to_flat(&self) -> Result<AffineSubspace, ConstructError> {
        let a = QMat::from_rows(vec![self.normal.clone()])?;
        let (p, k) = solve_affine(&a, &QVec::new(vec![self.offset.clone()]))?
            .expect("a single nonzero equation is consistent");
        Ok(AffineSubspace::canonicalize(p, k)?)
    }
}

fn draw_hyperplanes(rng: &mut ChaCha8Rng, l: usize, count: usize, bound: i64) -> Vec<Hyperplane> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let normal: Vec<i64> = (0..l).map(|_| rng.gen_range(-bound..=bound)).collect();
        let offset = rng.gen_range(-bound..=bound);
        if let Ok(h) = Hyperplane::from_ints(&normal, offset) {
            out.push(h);
        }
    }
    out
}

/// `count` random hyperplanes in `Q^l` from the seeded stream. All-zero
/// normals are redrawn; nothing else is filtered.
pub fn random_hyperplanes(l: usize, count: usize, spec: &GenSpec) -> Result<Vec<Hyperplane>, ConstructError> {
    spec.validate()?;
    if l < 2 || count == 0 {
        return Err(ConstructError::InvalidSpec("need l >= 2 and count >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    Ok(draw_hyperplanes(&mut rng, l, count, i64::from(spec.coeff_bound)))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Generic arrangement in `Q^4`: any four hyperplanes meet in exactly one
/// point and any five have empty intersection.
pub fn is_generic(hyperplanes: &[Hyperplane]) -> Result<bool, ConstructError> {
    if let Some(h) = hyperplanes.iter().find(|h| h.ambient_dim() != 4) {
        return Err(ConstructError::WrongAmbient(h.ambient_dim()));
    }
    let n = hyperplanes.len();
    for s in subsets(n, 4) {
        let normals = QMat::from_rows(s.iter().map(|&i| hyperplanes[i].normal.clone()).collect())?;
        if normals.rank() != 4 {
            return Ok(false);
        }
    }
    for s in subsets(n, 5) {
        let augmented = QMat::from_rows(
            s.iter()
                .map(|&i| hyperplanes[i].normal.extended(hyperplanes[i].offset.clone()))
                .collect(),
        )?;
        if augmented.rank() != 5 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Line `L_i` is the intersection of the three hyperplanes `H_j` whose Fano
/// blocks contain point `i`.
pub fn fano_lines_from_hyperplanes(hyperplanes: &[Hyperplane]) -> Result<Vec<AffineSubspace>, ConstructError> {
    if hyperplanes.len() != 7 {
        return Err(ConstructError::WrongCount {
            expected: 7,
            found: hyperplanes.len(),
        });
    }
    let fano = IncidenceDesign::fano_plane();
    let flats = hyperplanes
        .iter()
        .map(Hyperplane::to_flat)
        .collect::<Result<Vec<_>, _>>()?;
    (1..=7)
        .map(|point| {
            let blocks = fano.blocks_through(point).expect("valid Fano point");
            let mut acc = flats[blocks[0] - 1].clone();
            for &b in &blocks[1..] {
                acc = acc
                    .intersect(&flats[b - 1])?
                    .ok_or(ConstructError::DegenerateTriple(point))?;
            }
            if acc.dim() != 1 {
                return Err(ConstructError::DegenerateTriple(point));
            }
            Ok(acc)
        })
        .collect()
}

/// Checks that `lines` realize the Fano plane with hull `H_j` for block `j`:
/// pairwise skew, each block's pairs span exactly its hyperplane, and no
/// line lies in a hyperplane of a block it is not on.
fn fano_realization_holds(lines: &[AffineSubspace], flats: &[AffineSubspace]) -> Result<bool, ConstructError> {
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if !lines[i].is_skew(&lines[j])? {
                return Ok(false);
            }
        }
    }
    let fano = IncidenceDesign::fano_plane();
    for (b, block) in fano.blocks().iter().enumerate() {
        for (x, &p) in block.iter().enumerate() {
            for &q in &block[x + 1..] {
                if lines[p - 1].affine_hull(&lines[q - 1])? != flats[b] {
                    return Ok(false);
                }
            }
        }
        for point in (1..=7).filter(|p| !block.contains(p)) {
            if flats[b].contains_flat(&lines[point - 1])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A verified Fano realization with the arrangement that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanoRepresentation {
    pub hyperplanes: Vec<Hyperplane>,
    pub family: LineFamily,
    /// 1-based index of the successful draw.
    pub attempts: usize,
}

pub fn fano_representation(spec: &GenSpec) -> Result<FanoRepresentation, ConstructError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let bound = i64::from(spec.coeff_bound);
    for attempt in 1..=spec.max_retries {
        let hs = draw_hyperplanes(&mut rng, 4, 7, bound);
        if !is_generic(&hs)? {
            continue;
        }
        let lines = match fano_lines_from_hyperplanes(&hs) {
            Ok(lines) => lines,
            Err(ConstructError::DegenerateTriple(_)) => continue,
            Err(e) => return Err(e),
        };
        let flats = hs.iter().map(Hyperplane::to_flat).collect::<Result<Vec<_>, _>>()?;
        if fano_realization_holds(&lines, &flats)? {
            return Ok(FanoRepresentation {
                hyperplanes: hs,
                family: LineFamily::new(lines)?,
                attempts: attempt,
            });
        }
    }
    Err(ConstructError::RetriesExhausted(spec.max_retries))
}

/// Seven pairwise skew lines in `Q^4` whose hulls are exactly the seven
/// hyperplanes of a generic arrangement, in Fano incidence.
pub fn gen_fano_13(spec: &GenSpec) -> Result<LineFamily, ConstructError> {
    Ok(fano_representation(spec)?.family)
}

/// Places `w` in the slice `{x_{d+1} = 1}` of `Q^{d+1}`.
pub fn embed_in_slice(w: &AffineSubspace) -> Result<AffineSubspace, ConstructError> {
    let n = w.ambient_dim() + 1;
    let dirs = QMat::new(
        w.dirs().rows().iter().map(|d| d.extended(Rat::zero())).collect(),
        n,
    )?;
    Ok(AffineSubspace::canonicalize(w.base().extended(Rat::one()), dirs)?)
}

/// The linear span of a flat lying in the slice `{last coordinate = 1}`.
pub fn cone_over_origin(w: &AffineSubspace) -> Result<AffineSubspace, ConstructError> {
    let last = w.ambient_dim() - 1;
    if !w.base()[last].is_one() {
        return Err(ConstructError::BadSlice("base must have last coordinate 1"));
    }
    if w.dirs().rows().iter().any(|d| !d[last].is_zero()) {
        return Err(ConstructError::BadSlice("directions must have last coordinate 0"));
    }
    let mut dirs = w.dirs().clone();
    dirs.push_row(w.base().clone());
    Ok(AffineSubspace::linear(dirs)?)
}

fn fail(msg: String) -> ConstructError {
    ConstructError::Verification(msg)
}

/// Seven 2-planes through the origin of `Q^5`, meeting pairwise only at the
/// origin, where the 4-space of any two planes on a Fano block holds the
/// third, and all seven together span `Q^5`.
pub fn gen_planes_r5(spec: &GenSpec) -> Result<Vec<AffineSubspace>, ConstructError> {
    let family = gen_fano_13(spec)?;
    let planes = family
        .members()
        .iter()
        .map(|l| cone_over_origin(&embed_in_slice(l)?))
        .collect::<Result<Vec<_>, _>>()?;
    verify_planes_r5(&planes)?;
    Ok(planes)
}

fn verify_planes_r5(planes: &[AffineSubspace]) -> Result<(), ConstructError> {
    let origin = AffineSubspace::point(QVec::zeros(5))?;
    for i in 0..planes.len() {
        for j in i + 1..planes.len() {
            if planes[i].intersect(&planes[j])?.as_ref() != Some(&origin) {
                return Err(fail(format!("planes {i} and {j} meet outside the origin")));
            }
        }
    }
    for block in IncidenceDesign::fano_plane().blocks() {
        let [a, b, c] = [block[0] - 1, block[1] - 1, block[2] - 1];
        for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
            let sum = subspace_sum(&[planes[x].dirs().clone(), planes[y].dirs().clone()])?;
            if sum.nrows() != 4 || !planes[z].dirs().rows().iter().all(|d| sum.basis_spans(d)) {
                return Err(fail(format!("plane {z} not in the sum of planes {x} and {y}")));
            }
        }
    }
    let all: Vec<QMat> = planes.iter().map(|p| p.dirs().clone()).collect();
    if subspace_sum(&all)?.nrows() != 5 {
        return Err(fail("the seven planes do not span Q^5".into()));
    }
    Ok(())
}

/// `t_i = i` for `i = 1..=7`.
pub fn default_t_values() -> Vec<Rat> {
    (1..=7).map(Rat::from).collect()
}

/// Seven pairwise skew 2-flats `A_i` of `Q^6` with `A_i ∩ span(e6) = {t_i e6}`.
///
/// `C_i` is the preimage of plane `P_i` under dropping the last coordinate;
/// `A_i` is `t_i e6` plus the RREF rows of `C_i` whose pivot is not the last
/// coordinate. On a verification failure the next seed is tried.
pub fn gen_25(spec: &GenSpec, t: &[Rat]) -> Result<LineFamily, ConstructError> {
    spec.validate()?;
    let distinct = t.iter().enumerate().all(|(i, x)| !t[..i].contains(x));
    if t.len() != 7 || !distinct || t.iter().any(Rat::is_zero) {
        return Err(ConstructError::BadTValues);
    }
    let mut last_err = None;
    for attempt in 0..spec.max_retries {
        let s = GenSpec {
            seed: spec.seed.wrapping_add(attempt as u64),
            ..*spec
        };
        let planes = gen_planes_r5(&s)?;
        match lift_planes(&planes, t) {
            Ok(family) => return Ok(family),
            Err(ConstructError::Verification(msg)) => last_err = Some(msg),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.map_or(ConstructError::RetriesExhausted(spec.max_retries), fail))
}

fn lift_planes(planes: &[AffineSubspace], t: &[Rat]) -> Result<LineFamily, ConstructError> {
    let e6 = QVec::unit(6, 5);
    let axis = AffineSubspace::linear(QMat::from_rows(vec![e6.clone()])?)?;
    let mut cones = Vec::with_capacity(7);
    let mut flats = Vec::with_capacity(7);
    for (p, ti) in planes.iter().zip(t) {
        let mut dirs = QMat::new(
            p.dirs().rows().iter().map(|d| d.extended(Rat::zero())).collect(),
            6,
        )?;
        dirs.push_row(e6.clone());
        let cone = AffineSubspace::linear(dirs)?;
        let lifted: Vec<QVec> = cone
            .dirs()
            .rows()
            .iter()
            .filter(|r| r.first_nonzero() != Some(5))
            .cloned()
            .collect();
        let base = e6.scale(ti);
        let a = AffineSubspace::canonicalize(base.clone(), QMat::new(lifted, 6)?)?;
        if a.dim() != 2 {
            return Err(fail("lifted flat is not 2-dimensional".into()));
        }
        if a.intersect(&axis)? != Some(AffineSubspace::point(base)?) {
            return Err(fail("lifted flat meets the axis in more than t_i e6".into()));
        }
        if AffineSubspace::point(QVec::zeros(6))?.affine_hull(&a)? != cone {
            return Err(fail("cone of lifted flat differs from its preimage space".into()));
        }
        cones.push(cone);
        flats.push(a);
    }
    for i in 0..7 {
        for j in i + 1..7 {
            let hull = flats[i].affine_hull(&flats[j])?;
            if hull.dim() != 5 {
                return Err(fail(format!("flats {i} and {j} are not skew")));
            }
            let sum = AffineSubspace::linear(subspace_sum(&[
                cones[i].dirs().clone(),
                cones[j].dirs().clone(),
            ])?)?;
            if hull != sum {
                return Err(fail(format!("hull of flats {i} and {j} is not the sum of their cones")));
            }
        }
    }
    for block in IncidenceDesign::fano_plane().blocks() {
        let [a, b, c] = [block[0] - 1, block[1] - 1, block[2] - 1];
        if !flats[a].affine_hull(&flats[b])?.contains_flat(&flats[c])? {
            return Err(fail(format!("block {block:?} not closed")));
        }
    }
    let family = LineFamily::new(flats)?;
    if min_enclosing_flat(&family)?.dim() != 6 {
        return Err(fail("lifted flats do not span Q^6".into()));
    }
    Ok(family)
}
