use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::orbits::{OrbitSummary, StratumReport};
use super::MOVE_SET_VERSION;
use crate::error::{Error, Result};
use crate::genvec::GeneratingVector;
use crate::group::Group;
use crate::signature::Signature;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub representative: String,
    pub size: usize,
}

/// On-disk form of a [`StratumReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub group: String,
    pub signature: String,
    pub move_set_version: String,
    pub move_set_complete: bool,
    pub total_vectors: usize,
    pub orbit_count: usize,
    pub orbits: Vec<OrbitRecord>,
}

impl StratumRecord {
    pub fn from_report(group: &Group, report: &StratumReport) -> StratumRecord {
        StratumRecord {
            group: report.group.clone(),
            signature: report.signature.to_string(),
            move_set_version: report.move_set_version.clone(),
            move_set_complete: report.move_set_complete,
            total_vectors: report.total_vectors,
            orbit_count: report.orbit_count(),
            orbits: report
                .orbits
                .iter()
                .map(|o| OrbitRecord {
                    representative: o.representative.render(group),
                    size: o.size,
                })
                .collect(),
        }
    }

    pub fn into_report(self, group: &Group) -> Result<StratumReport> {
        let signature: Signature = self.signature.parse()?;
        let orbits = self
            .orbits
            .iter()
            .map(|o| {
                Ok(OrbitSummary {
                    representative: GeneratingVector::parse(group, &signature, &o.representative)?,
                    size: o.size,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if orbits.len() != self.orbit_count {
            return Err(Error::Parse(format!(
                "cached stratum lists {} orbits but claims {}",
                orbits.len(),
                self.orbit_count
            )));
        }
        Ok(StratumReport {
            group: self.group,
            signature,
            total_vectors: self.total_vectors,
            orbits,
            move_set_version: self.move_set_version,
            move_set_complete: self.move_set_complete,
        })
    }
}

/// Directory of computed strata, one JSON file per (group, signature).
/// Entries written under a different move-set version are ignored.
#[derive(Clone, Debug)]
pub struct StratumCache {
    dir: PathBuf,
}

impl StratumCache {
    pub fn new(dir: impl Into<PathBuf>) -> StratumCache {
        StratumCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, group: &Group, sig: &Signature) -> PathBuf {
        let key: String = format!("{}__{}", group.spec(), sig)
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        self.dir.join(format!("{key}.json"))
    }

    pub fn load(&self, group: &Group, sig: &Signature) -> Result<Option<StratumReport>> {
        let path = self.path(group, sig);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let record: StratumRecord = serde_json::from_str(&text)?;
        if record.move_set_version != MOVE_SET_VERSION
            || record.group != group.spec()
            || record.signature != sig.to_string()
        {
            return Ok(None);
        }
        record.into_report(group).map(Some)
    }

    pub fn store(&self, group: &Group, report: &StratumReport) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let record = StratumRecord::from_report(group, report);
        let path = self.path(group, &report.signature);
        fs::write(path, serde_json::to_string_pretty(&record)?)?;
        Ok(())
    }
}
