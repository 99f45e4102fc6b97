//! Bound searches over genus ranges: the largest group order acting on
//! genus-`g` surfaces with a `dim`-dimensional family, arithmetically and
//! realized by an explicit group.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Threads;
use crate::genvec::{find_vector, is_surface_kernel, GeneratingVector};
use crate::group::Group;
use crate::numtheory::{is_power_of_two, is_prime};
use crate::signature::{enumerate_signatures, Signature};

/// Groups tried in the realizability phase. Cyclic and dihedral groups of
/// every order are always present.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    external: Vec<Group>,
}

impl Catalog {
    pub fn builtin() -> Catalog {
        Catalog::default()
    }

    pub fn with_groups(external: Vec<Group>) -> Catalog {
        Catalog { external }
    }

    pub fn external(&self) -> &[Group] {
        &self.external
    }

    /// `C_n`, then `D_{n/2}`, then external groups of order `n`.
    pub fn groups_of_order(&self, n: u64) -> Result<Vec<Group>> {
        let mut out = vec![Group::cyclic(n as u32)?];
        if n.is_multiple_of(2) && n >= 4 {
            out.push(Group::dihedral((n / 2) as u32)?);
        }
        out.extend(
            self.external
                .iter()
                .filter(|g| g.order() as u64 == n)
                .cloned(),
        );
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArithmeticMax {
    pub order: u64,
    pub witnesses: Vec<Signature>,
}

/// The largest `N <= 84(g-1)` for which some signature of dimension `dim`
/// satisfies Riemann–Hurwitz.
pub fn arithmetic_max(genus: u64, dim: i64) -> Option<ArithmeticMax> {
    if genus < 2 {
        return None;
    }
    (1..=84 * (genus - 1)).rev().find_map(|n| {
        let witnesses = enumerate_signatures(genus, n, dim);
        (!witnesses.is_empty()).then_some(ArithmeticMax {
            order: n,
            witnesses,
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub group: Group,
    pub signature: Signature,
    pub vector: GeneratingVector,
}

impl Witness {
    pub fn render(&self) -> String {
        format!(
            "{} {} [{}]",
            self.group.spec(),
            self.signature,
            self.vector.render(&self.group)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizableMax {
    pub order: u64,
    pub witness: Witness,
    /// Arithmetically admissible orders above `order` for which the catalog
    /// has no group.
    pub catalog_incomplete: Vec<u64>,
}

/// The largest order realized by a catalog group with a generating vector
/// for some admissible signature.
pub fn realizable_max(genus: u64, dim: i64, catalog: &Catalog) -> Result<Option<RealizableMax>> {
    let Some(top) = arithmetic_max(genus, dim) else {
        return Ok(None);
    };
    let mut incomplete = Vec::new();
    for n in (1..=top.order).rev() {
        let sigs = enumerate_signatures(genus, n, dim);
        if sigs.is_empty() {
            continue;
        }
        let groups = catalog.groups_of_order(n)?;
        let mut tried = 0;
        for group in &groups {
            for sig in &sigs {
                tried += 1;
                if let Some(vector) = find_vector(group, sig) {
                    if let Some(v) =
                        is_surface_kernel(group, sig, vector.hyperbolic(), vector.elliptic())?
                    {
                        return Err(Error::Internal(format!("witness failed validation: {v}")));
                    }
                    return Ok(Some(RealizableMax {
                        order: n,
                        witness: Witness {
                            group: group.clone(),
                            signature: sig.clone(),
                            vector,
                        },
                        catalog_incomplete: incomplete,
                    }));
                }
            }
        }
        if tried == 0 {
            incomplete.push(n);
        }
    }
    Ok(None)
}

/// Number-theoretic conditions on the genus used to select rows.
pub fn hypothesis_tags(genus: u64) -> Vec<&'static str> {
    let g = genus;
    let mut tags = vec![if g.is_multiple_of(2) { "even" } else { "odd" }];
    if g >= 1 && is_prime(g - 1) {
        tags.push("g-1 prime");
    }
    if g.is_multiple_of(2) && is_prime(g / 2) {
        tags.push("g/2 prime");
    }
    if g >= 2 && is_power_of_two(g - 1) {
        tags.push("g-1 power of 2");
    }
    if g % 2 == 1 && is_prime((g - 1) / 2) {
        tags.push("(g-1)/2 prime");
    }
    if g % 4 == 3 {
        tags.push("g=3 mod 4");
    }
    if g % 6 == 4 {
        tags.push("g=4 mod 6");
    }
    tags
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub genus: u64,
    pub dim: i64,
    pub arithmetic: Option<ArithmeticMax>,
    /// `None` when the realizability phase was not attempted.
    pub realizable: Option<Option<RealizableMax>>,
    pub tags: Vec<&'static str>,
}

impl ScanRow {
    pub fn arithmetic_max(&self) -> Option<u64> {
        self.arithmetic.as_ref().map(|a| a.order)
    }

    pub fn realizable_max(&self) -> Option<u64> {
        self.realizable.as_ref()?.as_ref().map(|r| r.order)
    }

    pub fn csv_header() -> &'static str {
        "genus,dim,arithmetic_max,witness_sigs,realizable_max,witness,hypothesis_tags"
    }

    pub fn to_csv(&self) -> String {
        let quote = |s: String| format!("\"{}\"", s.replace('"', "\"\""));
        let sigs = self
            .arithmetic
            .as_ref()
            .map(|a| {
                a.witnesses
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .unwrap_or_default();
        let (rmax, witness) = match &self.realizable {
            None => (String::new(), "not attempted".to_string()),
            Some(None) => (String::new(), "none".to_string()),
            Some(Some(r)) => (r.order.to_string(), r.witness.render()),
        };
        [
            self.genus.to_string(),
            self.dim.to_string(),
            self.arithmetic_max()
                .map(|n| n.to_string())
                .unwrap_or_default(),
            quote(sigs),
            rmax,
            quote(witness),
            quote(self.tags.join(";")),
        ]
        .join(",")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "genus": self.genus,
            "dim": self.dim,
            "arithmetic_max": self.arithmetic_max(),
            "witness_sigs": self.arithmetic.as_ref().map(|a| a.witnesses.iter().map(|s| s.to_string()).collect::<Vec<_>>()),
            "realizable_max": self.realizable_max(),
            "witness": match &self.realizable {
                None => serde_json::Value::from("not attempted"),
                Some(None) => serde_json::Value::Null,
                Some(Some(r)) => serde_json::json!({
                    "group": r.witness.group.spec(),
                    "signature": r.witness.signature.to_string(),
                    "vector": r.witness.vector.render(&r.witness.group),
                }),
            },
            "catalog_incomplete": self.realizable.as_ref().and_then(|r| r.as_ref()).map(|r| r.catalog_incomplete.clone()).unwrap_or_default(),
            "hypothesis_tags": self.tags,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Point {
    pub genus: u64,
    pub value: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LinearForm {
    /// `value = a * genus + b` on every row.
    Fit { a: i64, b: i64 },
    /// No integer form fits. `base` determines the only candidate line,
    /// `conflict` is off it, and `evidence` pairs the conflict with a base
    /// row of the other parity where possible.
    NoFit {
        base: [Point; 2],
        conflict: Point,
        evidence: [Point; 2],
    },
}

/// Finds the unique integer `(a, b)` with `value = a*genus + b` on all
/// points, or certifies that none exists. Needs two distinct genera.
pub fn linear_form_analysis(points: &[Point]) -> Result<LinearForm> {
    let mut pts = points.to_vec();
    pts.sort_by_key(|p| p.genus);
    pts.dedup();
    let first = *pts.first().ok_or_else(|| Error::Shape("no rows".into()))?;
    let second = *pts
        .iter()
        .find(|p| p.genus != first.genus)
        .ok_or_else(|| Error::Shape("linear form needs two distinct genera".into()))?;
    let (g0, v0) = (first.genus as i64, first.value as i64);
    let (g1, v1) = (second.genus as i64, second.value as i64);
    let no_fit = |conflict: Point| {
        let partner = if first.genus % 2 != conflict.genus % 2 {
            first
        } else {
            second
        };
        LinearForm::NoFit {
            base: [first, second],
            conflict,
            evidence: [partner, conflict],
        }
    };
    if (v1 - v0) % (g1 - g0) != 0 {
        return Ok(no_fit(second));
    }
    let a = (v1 - v0) / (g1 - g0);
    let b = v0 - a * g0;
    for &p in &pts {
        if a * p.genus as i64 + b != p.value as i64 {
            return Ok(no_fit(p));
        }
    }
    Ok(LinearForm::Fit { a, b })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub dim: i64,
    pub genus_range: (u64, u64),
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    /// Realizable maxima (arithmetic when not attempted) of the rows whose
    /// genus lies in `subset`.
    pub fn points(&self, subset: &[u64]) -> Vec<Point> {
        self.rows
            .iter()
            .filter(|r| subset.contains(&r.genus))
            .filter_map(|r| {
                let value = match &r.realizable {
                    None => r.arithmetic_max(),
                    Some(_) => r.realizable_max(),
                }?;
                Some(Point {
                    genus: r.genus,
                    value,
                })
            })
            .collect()
    }

    pub fn linear_fit(&self, subset: &[u64]) -> Result<LinearForm> {
        linear_form_analysis(&self.points(subset))
    }
}

/// Scans every genus in `lo..=hi`. Rows are computed independently and
/// returned in genus order.
pub fn scan(
    dim: i64,
    lo: u64,
    hi: u64,
    catalog: Option<&Catalog>,
    threads: Threads,
) -> Result<ScanReport> {
    let genera: Vec<u64> = (lo.max(2)..=hi).collect();
    let rows = threads.map(genera.len(), |i| scan_row(genera[i], dim, catalog));
    Ok(ScanReport {
        dim,
        genus_range: (lo, hi),
        rows: rows.into_iter().collect::<Result<_>>()?,
    })
}

pub fn scan_row(genus: u64, dim: i64, catalog: Option<&Catalog>) -> Result<ScanRow> {
    Ok(ScanRow {
        genus,
        dim,
        arithmetic: arithmetic_max(genus, dim),
        realizable: catalog.map(|c| realizable_max(genus, dim, c)).transpose()?,
        tags: hypothesis_tags(genus),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(genus: u64, value: u64) -> Point {
        Point { genus, value }
    }

    #[test]
    fn dim_three_small() {
        for g in 2..8 {
            let a = arithmetic_max(g, 3).unwrap();
            assert_eq!(a.order, 2 * g - 2);
            assert!(a.witnesses.contains(&"0;2,2,2,2,2,2".parse().unwrap()));
        }
        let r = realizable_max(6, 3, &Catalog::builtin()).unwrap().unwrap();
        assert_eq!(r.order, 10);
        assert_eq!(r.witness.group.spec(), "D:5");
    }

    #[test]
    fn hurwitz_cap() {
        for g in 2..6 {
            assert!(arithmetic_max(g, 0).unwrap().order <= 84 * (g - 1));
        }
    }

    #[test]
    fn linear_forms() {
        let pts: Vec<Point> = (2..30).map(|g| pt(g, 2 * g - 2)).collect();
        assert_eq!(
            linear_form_analysis(&pts).unwrap(),
            LinearForm::Fit { a: 2, b: -2 }
        );
        let odd = [pt(5, 4), pt(9, 8), pt(17, 16)];
        assert_eq!(
            linear_form_analysis(&odd).unwrap(),
            LinearForm::Fit { a: 1, b: -1 }
        );
        let mixed = [pt(5, 4), pt(6, 6), pt(9, 8), pt(10, 10)];
        match linear_form_analysis(&mixed).unwrap() {
            LinearForm::NoFit { evidence, .. } => {
                assert_ne!(evidence[0].genus % 2, evidence[1].genus % 2)
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(linear_form_analysis(&[pt(5, 4)]).is_err());
    }

    #[test]
    fn tags() {
        assert!(hypothesis_tags(6).contains(&"g-1 prime"));
        assert!(hypothesis_tags(10).contains(&"g/2 prime"));
        assert!(hypothesis_tags(17).contains(&"g-1 power of 2"));
        assert!(hypothesis_tags(11).contains(&"g=3 mod 4"));
        assert!(hypothesis_tags(10).contains(&"g=4 mod 6"));
    }
}
