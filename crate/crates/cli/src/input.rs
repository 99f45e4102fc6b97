use std::fmt;

use riemann_actions::group::load_catalog;
use riemann_actions::{Error, Group, GroupSpec, Signature};

use crate::Context;

#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Usage(String),
    /// A verify suite with failed expectations; carries the rendered report.
    Expectation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Expectation(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Lib(Error::Capability(_)) => 3,
            CliError::Lib(Error::Internal(_)) => 1,
            CliError::Lib(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Expectation(_) => write!(f, "expectations failed"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

/// Builds a group from `C:n`, `D:n`, `file:PATH#NAME`, or the name of a
/// group in one of the `--catalog` files.
pub fn group(ctx: &Context, spec: &str) -> Result<Group, CliError> {
    match spec.parse::<GroupSpec>() {
        Ok(s) => Ok(s.build()?),
        Err(parse_err) => {
            for path in &ctx.catalogs {
                if let Some(g) = load_catalog(path)?
                    .into_iter()
                    .find(|g| g.spec().ends_with(&format!("#{spec}")))
                {
                    return Ok(g);
                }
            }
            Err(parse_err.into())
        }
    }
}

pub fn external_groups(ctx: &Context) -> Result<Vec<Group>, CliError> {
    let mut out = Vec::new();
    for path in &ctx.catalogs {
        out.extend(load_catalog(path)?);
    }
    Ok(out)
}

pub fn signature(text: &str) -> Result<Signature, CliError> {
    Ok(text.parse()?)
}

/// Parses "2..30", "6,8,12" or a mix such as "2..5,9".
pub fn genus_list(text: &str) -> Result<Vec<u64>, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "bad genus list '{text}' (expected e.g. 2..30 or 6,8,12)"
        ))
    };
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

pub fn json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values always serialize");
    s.push('\n');
    s
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
