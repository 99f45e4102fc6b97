use std::fmt::Write as _;
use std::path::PathBuf;

use riemann_actions::genvec::enumerate_vectors;
use riemann_actions::mcg::{orbits, OrbitOptions, StratumCache};
use riemann_actions::repr::{
    factor_dims, parse_pair, parse_subgroup, prym_decomposition, quotient_decomposition, split_list,
};
use riemann_actions::scanner::{self, Catalog, LinearForm, ScanRow};
use riemann_actions::{enumerate_signatures, GeneratingVector};
use serde_json::json;

use crate::input::{self, csv_field, CliError};
use crate::{Context, Format};

pub fn signatures(ctx: &Context, genus: u64, order: u64, dim: i64) -> Result<String, CliError> {
    if genus < 2 {
        return Err(CliError::Usage("genus must be at least 2".into()));
    }
    let sigs = enumerate_signatures(genus, order, dim);
    Ok(match ctx.format {
        Format::Json => input::json(&json!({
            "genus": genus,
            "order": order,
            "dim": dim,
            "signatures": sigs.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("signature,h,periods,teich_dim\n");
            for s in &sigs {
                let periods: Vec<String> = s.periods().iter().map(u32::to_string).collect();
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    csv_field(&s.to_string()),
                    s.h(),
                    csv_field(&periods.join(" ")),
                    s.teich_dim()
                );
            }
            out
        }
        Format::Text => sigs.iter().map(|s| format!("({s})\n")).collect(),
    })
}

pub fn vectors(
    ctx: &Context,
    group: &str,
    signature: &str,
    count_only: bool,
) -> Result<String, CliError> {
    let g = input::group(ctx, group)?;
    let sig = input::signature(signature)?;
    let en = enumerate_vectors(&g, &sig, ctx.threads);
    let rendered: Vec<String> = if count_only {
        Vec::new()
    } else {
        en.vectors.vectors().map(|v| v.render(&g)).collect()
    };
    Ok(match ctx.format {
        Format::Json => {
            let mut v = json!({
                "group": g.spec(),
                "signature": sig.to_string(),
                "genus": en.genus,
                "count": en.vectors.len(),
            });
            if !count_only {
                v["vectors"] = json!(rendered);
            }
            input::json(&v)
        }
        Format::Csv if count_only => format!(
            "group,signature,count\n{},{},{}\n",
            g.spec(),
            csv_field(&sig.to_string()),
            en.vectors.len()
        ),
        Format::Csv => {
            let mut out = String::from("index,vector\n");
            for (i, v) in rendered.iter().enumerate() {
                let _ = writeln!(out, "{i},{}", csv_field(v));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            if en.genus.is_none() {
                let _ = writeln!(
                    out,
                    "# Riemann–Hurwitz rules out {sig} for a group of order {}",
                    g.order()
                );
            }
            if count_only {
                let _ = writeln!(out, "{}", en.vectors.len());
            } else {
                for v in rendered {
                    let _ = writeln!(out, "{v}");
                }
            }
            out
        }
    })
}

pub fn strata(
    ctx: &Context,
    group: &str,
    signature: &str,
    cache: Option<PathBuf>,
) -> Result<String, CliError> {
    let g = input::group(ctx, group)?;
    let sig = input::signature(signature)?;
    let cache = cache.map(StratumCache::new);
    let cached = match &cache {
        Some(c) => c.load(&g, &sig)?,
        None => None,
    };
    let report = match cached {
        Some(r) => r,
        None => {
            let opts = OrbitOptions {
                threads: ctx.threads,
                ..Default::default()
            };
            let r = orbits(&g, &sig, opts)?.into_report();
            if let Some(c) = &cache {
                c.store(&g, &r)?;
            }
            r
        }
    };
    Ok(match ctx.format {
        Format::Json => input::json(&report.to_json(&g)),
        Format::Csv => {
            let mut out = String::from("orbit,size,representative\n");
            for (i, o) in report.orbits.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    i + 1,
                    o.size,
                    csv_field(&o.representative.render(&g))
                );
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "{} {}: {} vectors, {} strata\n",
                report.group,
                report.signature,
                report.total_vectors,
                report.orbit_count()
            );
            for (i, o) in report.orbits.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  {:>3}  size {:>8}  {}",
                    i + 1,
                    o.size,
                    o.representative.render(&g)
                );
            }
            if !report.move_set_complete {
                out.push_str("  note: genus-two-and-higher mapping class moves are not included\n");
            }
            out
        }
    })
}

pub fn jacobian(
    ctx: &Context,
    group: &str,
    signature: &str,
    vector: &str,
    subgroups: Option<&str>,
    pryms: Option<&str>,
) -> Result<String, CliError> {
    let g = input::group(ctx, group)?;
    let sig = input::signature(signature)?;
    let v = GeneratingVector::parse(&g, &sig, vector)?;
    let mut report = factor_dims(&g, &sig, &v)?;
    for label in subgroups.map(split_list).unwrap_or_default() {
        let h = parse_subgroup(&g, &label)?;
        report
            .quotient_rows
            .push(quotient_decomposition(&g, &report, &h, &label)?);
    }
    for pair in pryms.map(split_list).unwrap_or_default() {
        let (h1, h2) = parse_pair(&g, &pair)?;
        let (a, b) = pair.split_once("->").expect("checked by parse_pair");
        report.prym_rows.push(prym_decomposition(
            &g,
            &report,
            &h1,
            &h2,
            (a.trim(), b.trim()),
        )?);
    }
    Ok(match ctx.format {
        Format::Json => input::json(&report.to_json(&g)),
        Format::Csv => {
            let mut out = String::from("kind,name,label,d,dim,mult,exponent\n");
            for f in &report.factors {
                let d = f.irrep.parameter.map(|d| d.to_string()).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "factor,,{},{d},{},{},",
                    f.label(),
                    f.dim,
                    f.multiplicity()
                );
            }
            for q in &report.quotient_rows {
                for (f, e) in report.factors.iter().zip(&q.exponents) {
                    let _ = writeln!(
                        out,
                        "quotient,{},{},,{},,{e}",
                        csv_field(&q.subgroup),
                        f.label(),
                        f.dim
                    );
                }
            }
            for p in &report.prym_rows {
                for (f, e) in report.factors.iter().zip(&p.exponents) {
                    let name = csv_field(&format!("{}->{}", p.sub, p.sup));
                    let _ = writeln!(out, "prym,{name},{},,{},,{e}", f.label(), f.dim);
                }
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "{} {} [{}]: genus {}\n",
                report.group,
                report.signature,
                v.render(&g),
                report.genus
            );
            for f in &report.factors {
                let _ = writeln!(
                    out,
                    "  {:<8} dim {:>3}  mult {}  (k = {}, d_V = {})",
                    f.label(),
                    f.dim,
                    f.multiplicity(),
                    f.irrep.galois_degree,
                    f.irrep.complex_degree
                );
            }
            let row = |exps: &[u32]| {
                report
                    .factors
                    .iter()
                    .zip(exps)
                    .filter(|(_, &e)| e > 0)
                    .map(|(f, e)| {
                        if *e == 1 {
                            f.label().to_string()
                        } else {
                            format!("{}^{e}", f.label())
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" x ")
            };
            for q in &report.quotient_rows {
                let _ = writeln!(
                    out,
                    "  JS_{:<6} dim {:>3}  ~ {}",
                    q.subgroup,
                    q.dim,
                    row(&q.exponents)
                );
            }
            for p in &report.prym_rows {
                let _ = writeln!(
                    out,
                    "  Prym({} -> {}) dim {:>3}  ~ {}",
                    p.sub,
                    p.sup,
                    p.dim,
                    row(&p.exponents)
                );
            }
            out
        }
    })
}

pub fn scan(
    ctx: &Context,
    dim: i64,
    genus: &str,
    arithmetic_only: bool,
) -> Result<String, CliError> {
    let genera = input::genus_list(genus)?;
    let catalog = Catalog::with_groups(input::external_groups(ctx)?);
    let catalog = (!arithmetic_only).then_some(&catalog);
    let rows = ctx
        .threads
        .map(genera.len(), |i| scanner::scan_row(genera[i], dim, catalog));
    let rows: Vec<ScanRow> = rows.into_iter().collect::<Result<_, _>>()?;
    let report = scanner::ScanReport {
        dim,
        genus_range: (genera[0], *genera.last().expect("non-empty")),
        rows,
    };
    let fit = if genera.len() >= 2 {
        report.linear_fit(&genera).ok()
    } else {
        None
    };
    Ok(match ctx.format {
        Format::Json => input::json(&json!({
            "dim": dim,
            "genus_range": [report.genus_range.0, report.genus_range.1],
            "rows": report.rows.iter().map(ScanRow::to_json).collect::<Vec<_>>(),
            "linear_fit": fit.map(|f| match f {
                LinearForm::Fit { a, b } => json!({"a": a, "b": b}),
                LinearForm::NoFit { evidence, .. } => json!({
                    "none": true,
                    "evidence": evidence.iter().map(|p| json!({"genus": p.genus, "max": p.value})).collect::<Vec<_>>(),
                }),
            }),
        })),
        Format::Csv => {
            let mut out = format!("{}\n", ScanRow::csv_header());
            for r in &report.rows {
                let _ = writeln!(out, "{}", r.to_csv());
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in &report.rows {
                let arith = r.arithmetic_max().map_or("-".into(), |n| n.to_string());
                let real = match &r.realizable {
                    None => "not attempted".to_string(),
                    Some(None) => "none".to_string(),
                    Some(Some(m)) => format!("{} via {}", m.order, m.witness.render()),
                };
                let _ = writeln!(
                    out,
                    "g={:<4} arithmetic {:<6} realizable {}  [{}]",
                    r.genus,
                    arith,
                    real,
                    r.tags.join(", ")
                );
                if let Some(Some(m)) = &r.realizable {
                    if !m.catalog_incomplete.is_empty() {
                        let _ = writeln!(
                            out,
                            "         catalog-incomplete at orders {:?}",
                            m.catalog_incomplete
                        );
                    }
                }
            }
            match fit {
                Some(LinearForm::Fit { a, b }) => {
                    let _ = writeln!(out, "linear form: {a}g{b:+}");
                }
                Some(LinearForm::NoFit { evidence, .. }) => {
                    let _ = writeln!(
                        out,
                        "no linear form: g={} gives {}, g={} gives {}",
                        evidence[0].genus, evidence[0].value, evidence[1].genus, evidence[1].value
                    );
                }
                None => {}
            }
            out
        }
    })
}
