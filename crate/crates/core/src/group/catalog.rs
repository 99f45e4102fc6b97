use std::path::Path;

use serde::{Deserialize, Serialize};

use super::Group;
use crate::error::{Error, Result};

/// One external group in a catalog file. A catalog file holds either a single
/// entry or a JSON array of entries.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<u32>>,
    #[serde(default)]
    pub generators: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element_names: Option<Vec<String>>,
}

impl CatalogEntry {
    pub fn build(&self, spec: String) -> Result<Group> {
        if self.table.len() != self.order {
            return Err(Error::InvalidTable(format!(
                "{}: declared order {} but table has {} rows",
                self.name,
                self.order,
                self.table.len()
            )));
        }
        Group::from_table(
            &self.name,
            self.table.clone(),
            self.generators.clone(),
            self.element_names.clone(),
            spec,
        )
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CatalogFile {
    Many(Vec<CatalogEntry>),
    One(CatalogEntry),
}

pub fn read_catalog(path: &Path) -> Result<Vec<CatalogEntry>> {
    let text = std::fs::read_to_string(path)?;
    Ok(match serde_json::from_str(&text)? {
        CatalogFile::Many(v) => v,
        CatalogFile::One(e) => vec![e],
    })
}

/// Loads and validates every group in a catalog file.
pub fn load_catalog(path: &Path) -> Result<Vec<Group>> {
    read_catalog(path)?
        .iter()
        .map(|e| e.build(format!("file:{}#{}", path.display(), e.name)))
        .collect()
}

/// `C:n`, `D:n` or `file:PATH#NAME`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u32),
    Dihedral(u32),
    File { path: String, name: String },
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || {
            Error::Parse(format!(
                "unknown group spec '{s}' (expected C:n, D:n or file:PATH#NAME)"
            ))
        };
        if let Some(rest) = s.strip_prefix("file:") {
            let (path, name) = rest.rsplit_once('#').ok_or_else(bad)?;
            return Ok(GroupSpec::File {
                path: path.to_string(),
                name: name.to_string(),
            });
        }
        let (family, n) = s.split_once(':').ok_or_else(bad)?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        match family.trim() {
            "C" | "c" => Ok(GroupSpec::Cyclic(n)),
            "D" | "d" => Ok(GroupSpec::Dihedral(n)),
            _ => Err(bad()),
        }
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D:{n}"),
            GroupSpec::File { path, name } => write!(f, "file:{path}#{name}"),
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group> {
        match self {
            GroupSpec::Cyclic(n) => Group::cyclic(*n),
            GroupSpec::Dihedral(n) => Group::dihedral(*n),
            GroupSpec::File { path, name } => {
                let entries = read_catalog(Path::new(path))?;
                let entry = entries
                    .iter()
                    .find(|e| &e.name == name)
                    .ok_or_else(|| Error::Parse(format!("no group named '{name}' in {path}")))?;
                entry.build(self.to_string())
            }
        }
    }
}
