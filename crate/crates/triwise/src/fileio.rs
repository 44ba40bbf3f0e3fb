//! The on-disk family format: a single JSON object with 1-indexed sorted
//! sets, deterministic byte-for-byte across runs.

use serde::{Deserialize, Serialize};

use crate::family::Family;
use crate::kset::KSet;
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyFile {
    pub n: u32,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    pub sets: Vec<Vec<u32>>,
}

impl FamilyFile {
    pub fn from_family(fam: &Family, r: Option<u32>, t: Option<u32>) -> Self {
        FamilyFile {
            n: fam.n(),
            k: fam.k(),
            r,
            t,
            sets: fam.members().iter().map(|m| m.elems()).collect(),
        }
    }

    pub fn to_family(&self) -> Result<Family> {
        let mut members = Vec::with_capacity(self.sets.len());
        for set in &self.sets {
            if set.len() != self.k as usize {
                return Err(Error::Param(format!(
                    "set {set:?} has {} elements, expected k={}",
                    set.len(),
                    self.k
                )));
            }
            for w in set.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::Param(format!(
                        "set {set:?} is not strictly increasing"
                    )));
                }
            }
            members.push(KSet::from_elems(set, self.n)?);
        }
        Family::new(self.n, self.k, members)
    }

    /// Deterministic single-line JSON, newline-terminated.
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(data: &str) -> Result<Self> {
        Ok(serde_json::from_str(data)?)
    }

    pub fn write(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let data = std::fs::read_to_string(path)?;
        Self::from_json(&data)
    }
}
