use serde::{Deserialize, Deserializer, Serialize};

use super::VerifyError;
use crate::geom::AffineSubspace;

/// An ordered family of distinct flats of equal dimension in a common
/// `Q^l`, `l >= 4`. Skewness is checked by the verifier, not here, so that
/// a bad family can still be loaded and reported on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineFamily {
    ambient_dim: usize,
    member_dim: usize,
    members: Vec<AffineSubspace>,
}

#[derive(Deserialize)]
struct RawFamily {
    ambient_dim: usize,
    member_dim: usize,
    members: Vec<AffineSubspace>,
}

impl<'de> Deserialize<'de> for LineFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawFamily::deserialize(deserializer)?;
        let fam = LineFamily::new(raw.members).map_err(serde::de::Error::custom)?;
        if fam.ambient_dim != raw.ambient_dim || fam.member_dim != raw.member_dim {
            return Err(serde::de::Error::custom(format!(
                "header says Q^{} with {}-dim members, members are {}-dim in Q^{}",
                raw.ambient_dim, raw.member_dim, fam.member_dim, fam.ambient_dim
            )));
        }
        Ok(fam)
    }
}

impl LineFamily {
    pub fn new(members: Vec<AffineSubspace>) -> Result<Self, VerifyError> {
        let first = members.first().ok_or(VerifyError::EmptyFamily)?;
        let ambient_dim = first.ambient_dim();
        let member_dim = first.dim();
        if ambient_dim < 4 {
            return Err(VerifyError::AmbientTooSmall(ambient_dim));
        }
        for (index, m) in members.iter().enumerate() {
            if m.ambient_dim() != ambient_dim {
                return Err(VerifyError::MixedAmbient {
                    index,
                    expected: ambient_dim,
                    found: m.ambient_dim(),
                });
            }
            if m.dim() != member_dim {
                return Err(VerifyError::MixedMemberDims {
                    index,
                    expected: member_dim,
                    found: m.dim(),
                });
            }
            if let Some(j) = members[..index].iter().position(|o| o == m) {
                return Err(VerifyError::DuplicateMember(j, index));
            }
        }
        Ok(LineFamily {
            ambient_dim,
            member_dim,
            members,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn member_dim(&self) -> usize {
        self.member_dim
    }

    pub fn members(&self) -> &[AffineSubspace] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The family with member `index` dropped; `None` if that would empty it.
    pub fn without(&self, index: usize) -> Option<LineFamily> {
        if self.members.len() <= 1 || index >= self.members.len() {
            return None;
        }
        let mut members = self.members.clone();
        members.remove(index);
        Some(LineFamily { members, ..self.clone() })
    }

    /// Every member shifted by `-offset`.
    pub fn translated_by_neg(&self, offset: &crate::ratlin::QVec) -> Result<LineFamily, VerifyError> {
        let members = self
            .members
            .iter()
            .map(|m| m.translate_by_neg(offset))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LineFamily { members, ..self.clone() })
    }
}
