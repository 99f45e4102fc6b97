use serde::Serialize;

use super::{fixed_dim, rational_irreducibles, RationalIrrep};
use crate::error::{Error, Result};
use crate::genvec::{is_surface_kernel, GeneratingVector};
use crate::group::{CosetSpace, Group, Subgroup};
use crate::signature::Signature;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub irrep: RationalIrrep,
    /// `dim B` for this factor.
    pub dim: u64,
}

impl Factor {
    pub fn label(&self) -> &str {
        &self.irrep.label
    }

    pub fn multiplicity(&self) -> u32 {
        self.irrep.multiplicity
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientRow {
    pub subgroup: String,
    /// `n^H` per factor, in factor order.
    pub exponents: Vec<u32>,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrymRow {
    pub sub: String,
    pub sup: String,
    pub exponents: Vec<u32>,
    pub dim: u64,
}

/// Isotypical decomposition of the Jacobian of the surface defined by one
/// generating vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub group: String,
    pub signature: Signature,
    pub vector: GeneratingVector,
    pub genus: u64,
    pub factors: Vec<Factor>,
    pub quotient_rows: Vec<QuotientRow>,
    pub prym_rows: Vec<PrymRow>,
}

impl DecompositionReport {
    pub fn factor(&self, label: &str) -> Option<&Factor> {
        self.factors.iter().find(|f| f.irrep.label == label)
    }

    /// Sum of `multiplicity * dim` over all factors.
    pub fn total_dim(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| u64::from(f.multiplicity()) * f.dim)
            .sum()
    }

    pub fn to_json(&self, group: &Group) -> serde_json::Value {
        use serde_json::json;
        json!({
            "group": self.group,
            "signature": self.signature.to_string(),
            "vector": self.vector.render(group),
            "genus": self.genus,
            "factors": self.factors.iter().map(|f| json!({
                "label": f.irrep.label,
                "d": f.irrep.parameter,
                "dim": f.dim,
                "mult": f.irrep.multiplicity,
                "complex_degree": f.irrep.complex_degree,
                "galois_degree": f.irrep.galois_degree,
            })).collect::<Vec<_>>(),
            "quotients": self.quotient_rows.iter().map(|q| json!({
                "subgroup": q.subgroup,
                "exponents": self.labelled(&q.exponents),
                "dim": q.dim,
            })).collect::<Vec<_>>(),
            "pryms": self.prym_rows.iter().map(|p| json!({
                "pair": format!("{}->{}", p.sub, p.sup),
                "exponents": self.labelled(&p.exponents),
                "dim": p.dim,
            })).collect::<Vec<_>>(),
        })
    }

    fn labelled(&self, exps: &[u32]) -> serde_json::Map<String, serde_json::Value> {
        self.factors
            .iter()
            .zip(exps)
            .map(|(f, &e)| (f.irrep.label.clone(), e.into()))
            .collect()
    }
}

/// Dimensions of the factors `B_V` of the group algebra decomposition.
pub fn factor_dims(
    group: &Group,
    sig: &Signature,
    vec: &GeneratingVector,
) -> Result<DecompositionReport> {
    if let Some(v) = is_surface_kernel(group, sig, vec.hyperbolic(), vec.elliptic())? {
        return Err(Error::Shape(format!(
            "{} is not a generating vector: {v}",
            vec.render(group)
        )));
    }
    let genus = sig.rh_genus(group.order() as u64)?;
    let h = i64::from(sig.h());
    let stabilizers: Vec<Subgroup> = vec
        .elliptic()
        .iter()
        .map(|&x| Subgroup::generated(group, &[x]))
        .collect();
    let mut factors = Vec::new();
    for irrep in rational_irreducibles(group)? {
        let dim = if irrep.is_trivial() {
            h
        } else {
            let d = i64::from(irrep.complex_degree);
            let mut twice = 2 * d * (h - 1);
            for st in &stabilizers {
                twice += d - i64::from(fixed_dim(group, &irrep.model, st)?);
            }
            let twice = i64::from(irrep.galois_degree) * twice;
            if twice % 2 != 0 || twice < 0 {
                return Err(Error::Internal(format!(
                    "factor {} has dimension {twice}/2",
                    irrep.label
                )));
            }
            twice / 2
        };
        factors.push(Factor {
            irrep,
            dim: dim as u64,
        });
    }
    let report = DecompositionReport {
        group: group.spec().to_string(),
        signature: sig.clone(),
        vector: vec.clone(),
        genus,
        factors,
        quotient_rows: Vec::new(),
        prym_rows: Vec::new(),
    };
    if report.total_dim() != genus {
        return Err(Error::Internal(format!(
            "factor dimensions sum to {} but the genus is {genus}",
            report.total_dim()
        )));
    }
    Ok(report)
}

fn exponents(group: &Group, report: &DecompositionReport, h: &Subgroup) -> Result<Vec<u32>> {
    report
        .factors
        .iter()
        .map(|f| Ok(fixed_dim(group, &f.irrep.model, h)? / f.irrep.schur_index))
        .collect()
}

fn weighted(report: &DecompositionReport, exps: &[u32]) -> u64 {
    report
        .factors
        .iter()
        .zip(exps)
        .map(|(f, &e)| u64::from(e) * f.dim)
        .sum()
}

/// Exponents `n^H` and the dimension of the Jacobian of `S/H`.
pub fn quotient_decomposition(
    group: &Group,
    report: &DecompositionReport,
    h: &Subgroup,
    label: &str,
) -> Result<QuotientRow> {
    let exps = exponents(group, report, h)?;
    Ok(QuotientRow {
        subgroup: label.to_string(),
        dim: weighted(report, &exps),
        exponents: exps,
    })
}

/// Exponents and dimension of `Prym(S/H1 -> S/H2)`.
pub fn prym_decomposition(
    group: &Group,
    report: &DecompositionReport,
    h1: &Subgroup,
    h2: &Subgroup,
    labels: (&str, &str),
) -> Result<PrymRow> {
    if !h1.is_subgroup_of(h2) {
        return Err(Error::Shape(format!(
            "{} is not contained in {}",
            labels.0, labels.1
        )));
    }
    let lower = exponents(group, report, h1)?;
    let upper = exponents(group, report, h2)?;
    let exps: Vec<u32> = lower
        .iter()
        .zip(&upper)
        .map(|(&a, &b)| {
            a.checked_sub(b)
                .ok_or_else(|| Error::Internal("negative Prym exponent".into()))
        })
        .collect::<Result<_>>()?;
    Ok(PrymRow {
        sub: labels.0.to_string(),
        sup: labels.1.to_string(),
        dim: weighted(report, &exps),
        exponents: exps,
    })
}

/// Genus of `S/H`, from Riemann–Hurwitz applied to the cover `S/H -> S/G`
/// of degree `[G:H]`, whose branching is read off the coset action.
pub fn quotient_genus(group: &Group, vec: &GeneratingVector, h: &Subgroup) -> Result<u64> {
    let cosets = CosetSpace::new(group, h);
    let index = cosets.len() as i64;
    let mut twice = index * (2 * vec.orbit_genus() as i64 - 2);
    for &x in vec.elliptic() {
        twice += cosets
            .cycle_type(group, x)
            .iter()
            .map(|&c| c as i64 - 1)
            .sum::<i64>();
    }
    if twice % 2 != 0 || twice < -2 {
        return Err(Error::Internal(format!(
            "quotient by a subgroup of index {index} has 2g-2 = {twice}"
        )));
    }
    Ok(((twice + 2) / 2) as u64)
}
