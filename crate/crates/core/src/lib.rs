//! Exact rational construction and verification of Sylvester-Gallai
//! designs of mutually skew affine flats.

pub mod construct;
pub mod geom;
pub mod incidence;
pub mod ratlin;
pub mod verify;

pub use construct::{gen_25, gen_fano_13, gen_planes_r5, GenSpec, Hyperplane};
pub use geom::AffineSubspace;
pub use incidence::IncidenceDesign;
pub use ratlin::{QMat, QVec, Rat};
pub use verify::{check_main_theorem, LineFamily, TheoremReport};
