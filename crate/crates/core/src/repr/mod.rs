//! Rational irreducible representations of cyclic and dihedral groups and
//! the induced decomposition of Jacobians.

mod decomposition;
mod subgroup_spec;

pub use decomposition::{
    factor_dims, prym_decomposition, quotient_decomposition, quotient_genus, DecompositionReport,
    Factor, PrymRow, QuotientRow,
};
pub use subgroup_spec::{parse_pair, parse_subgroup, split_list};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, GroupKind, Subgroup};
use crate::numtheory::{divisors, euler_phi};

/// A complex irreducible representation, as a representative of its
/// Galois class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComplexIrrep {
    /// Dihedral linear character `r -> rot`, `s -> refl` with values `±1`.
    DihedralLinear { rot: i8, refl: i8 },
    /// Dihedral `psi_j`: `r -> diag(w^j, w^-j)`, `s -> [[0,1],[1,0]]`.
    DihedralPlane { j: u32 },
    /// Cyclic character `t -> w^j`.
    CyclicPower { j: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalIrrep {
    pub label: String,
    /// `d_V`
    pub complex_degree: u32,
    /// `s_V`
    pub schur_index: u32,
    /// `k_V`, the degree of the field of definition.
    pub galois_degree: u32,
    /// `n_V = d_V / s_V`
    pub multiplicity: u32,
    /// The divisor `d` for `W_d` and cyclic `chi_d`.
    pub parameter: Option<u64>,
    pub model: ComplexIrrep,
}

impl RationalIrrep {
    fn new(
        label: String,
        model: ComplexIrrep,
        complex_degree: u32,
        galois_degree: u32,
        parameter: Option<u64>,
    ) -> Self {
        let schur_index = 1;
        RationalIrrep {
            label,
            complex_degree,
            schur_index,
            galois_degree,
            multiplicity: complex_degree / schur_index,
            parameter,
            model,
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(
            self.model,
            ComplexIrrep::DihedralLinear { rot: 1, refl: 1 } | ComplexIrrep::CyclicPower { j: 0 }
        )
    }
}

fn builtin_order(group: &Group) -> Result<u32> {
    match group.kind() {
        GroupKind::Cyclic(n) | GroupKind::Dihedral(n) => Ok(*n),
        GroupKind::External { name } => Err(Error::Capability(format!(
            "rational representations are only available for cyclic and dihedral groups, not {name}"
        ))),
    }
}

/// Complete list of rational irreducible representations.
pub fn rational_irreducibles(group: &Group) -> Result<Vec<RationalIrrep>> {
    let n = builtin_order(group)?;
    let n64 = u64::from(n);
    let phi = |m: u64| euler_phi(m) as u32;
    let mut out = Vec::new();
    match group.kind() {
        GroupKind::Dihedral(_) => {
            let mut linear = vec![(1, 1), (1, -1)];
            if n % 2 == 0 {
                linear.extend([(-1, 1), (-1, -1)]);
            }
            for (i, (rot, refl)) in linear.into_iter().enumerate() {
                out.push(RationalIrrep::new(
                    format!("chi_{}", i + 1),
                    ComplexIrrep::DihedralLinear { rot, refl },
                    1,
                    1,
                    None,
                ));
            }
            for d in divisors(n64)
                .into_iter()
                .filter(|&d| 2 * d < n64 || (n % 2 == 1 && d < n64))
            {
                out.push(RationalIrrep::new(
                    format!("W_{d}"),
                    ComplexIrrep::DihedralPlane { j: d as u32 },
                    2,
                    phi(n64 / d) / 2,
                    Some(d),
                ));
            }
        }
        GroupKind::Cyclic(_) => {
            out.push(RationalIrrep::new(
                "chi_0".into(),
                ComplexIrrep::CyclicPower { j: 0 },
                1,
                1,
                None,
            ));
            for d in divisors(n64).into_iter().filter(|&d| d < n64) {
                out.push(RationalIrrep::new(
                    format!("chi_{d}"),
                    ComplexIrrep::CyclicPower { j: d as u32 },
                    1,
                    phi(n64 / d),
                    Some(d),
                ));
            }
        }
        GroupKind::External { .. } => unreachable!(),
    }
    debug_assert_eq!(
        out.iter()
            .map(|v| (v.galois_degree * v.complex_degree * v.multiplicity) as usize)
            .sum::<usize>(),
        group.order()
    );
    Ok(out)
}

/// Dimension of the subspace of `v` fixed by every element of `h`.
pub fn fixed_dim(group: &Group, v: &ComplexIrrep, h: &Subgroup) -> Result<u32> {
    let n = i64::from(builtin_order(group)?);
    let kind_ok = matches!(
        (group.kind(), v),
        (
            GroupKind::Dihedral(_),
            ComplexIrrep::DihedralLinear { .. } | ComplexIrrep::DihedralPlane { .. }
        ) | (GroupKind::Cyclic(_), ComplexIrrep::CyclicPower { .. })
    );
    if !kind_ok {
        return Err(Error::GroupMismatch(format!(
            "{v:?} is not a representation of {group}"
        )));
    }
    // element index k < n is r^k (or t^k); n + k is s r^k
    let split = |x: u32| {
        let x = i64::from(x);
        if x < n {
            (false, x)
        } else {
            (true, x - n)
        }
    };
    Ok(match *v {
        ComplexIrrep::CyclicPower { j } => u32::from(
            h.elements()
                .iter()
                .all(|&x| (i64::from(j) * split(x).1) % n == 0),
        ),
        ComplexIrrep::DihedralLinear { rot, refl } => u32::from(h.elements().iter().all(|&x| {
            let (is_refl, k) = split(x);
            let mut value = if rot == -1 && k % 2 == 1 { -1 } else { 1 };
            if is_refl {
                value *= i64::from(refl);
            }
            value == 1
        })),
        ComplexIrrep::DihedralPlane { j } => {
            let j = i64::from(j);
            // r^k acts as diag(w^jk, w^-jk); s r^k fixes the line spanned by (1, w^jk)
            let mut line: Option<i64> = None;
            for &x in h.elements() {
                let (is_refl, k) = split(x);
                let jk = (j * k).rem_euclid(n);
                if !is_refl {
                    if jk != 0 {
                        return Ok(0);
                    }
                } else {
                    match line {
                        None => line = Some(jk),
                        Some(l) if l != jk => return Ok(0),
                        Some(_) => {}
                    }
                }
            }
            if line.is_some() {
                1
            } else {
                2
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(g: &Group) -> Vec<String> {
        rational_irreducibles(g)
            .unwrap()
            .into_iter()
            .map(|v| v.label)
            .collect()
    }

    #[test]
    fn dihedral_lists() {
        let d5 = Group::dihedral(5).unwrap();
        let irr = rational_irreducibles(&d5).unwrap();
        assert_eq!(labels(&d5), ["chi_1", "chi_2", "W_1"]);
        let w = &irr[2];
        assert_eq!(
            (w.complex_degree, w.galois_degree, w.multiplicity),
            (2, 2, 2)
        );
        assert_eq!(
            labels(&Group::dihedral(6).unwrap()),
            ["chi_1", "chi_2", "chi_3", "chi_4", "W_1", "W_2"]
        );
        assert_eq!(
            labels(&Group::dihedral(2).unwrap()),
            ["chi_1", "chi_2", "chi_3", "chi_4"]
        );
    }

    #[test]
    fn cyclic_list() {
        let c4 = Group::cyclic(4).unwrap();
        let irr = rational_irreducibles(&c4).unwrap();
        let k: Vec<u32> = irr.iter().map(|v| v.galois_degree).collect();
        assert_eq!(labels(&c4), ["chi_0", "chi_1", "chi_2"]);
        assert_eq!(k, [1, 2, 1]);
    }

    #[test]
    fn algebra_dimension_count() {
        for n in 1..40 {
            for g in [Group::cyclic(n).unwrap()]
                .into_iter()
                .chain(Group::dihedral(n.max(2)).ok())
            {
                let total: u32 = rational_irreducibles(&g)
                    .unwrap()
                    .iter()
                    .map(|v| v.galois_degree * v.complex_degree * v.multiplicity)
                    .sum();
                assert_eq!(total as usize, g.order(), "{g}");
            }
        }
    }

    #[test]
    fn fixed_dim_examples() {
        for n in [5u32, 7, 9] {
            let g = Group::dihedral(n).unwrap();
            let s = Subgroup::generated(&g, &[g.reflection(0).unwrap()]);
            for d in divisors(u64::from(n))
                .into_iter()
                .filter(|&d| d < u64::from(n))
            {
                assert_eq!(
                    fixed_dim(&g, &ComplexIrrep::DihedralPlane { j: d as u32 }, &s).unwrap(),
                    1
                );
            }
            assert_eq!(
                fixed_dim(&g, &ComplexIrrep::DihedralLinear { rot: 1, refl: -1 }, &s).unwrap(),
                0
            );
        }
        for n in [4u32, 6, 10, 12] {
            let g = Group::cyclic(n).unwrap();
            let h = Subgroup::generated(&g, &[n / 2]);
            for j in 0..n {
                let expected = u32::from((j * n / 2) % n == 0);
                assert_eq!(
                    fixed_dim(&g, &ComplexIrrep::CyclicPower { j }, &h).unwrap(),
                    expected
                );
            }
        }
    }

    #[test]
    fn fixed_dim_matches_character_average() {
        // dim V^H = (1/|H|) sum_h chi(h); for psi_j, chi(r^k) = 2cos(2 pi jk/n), chi(s r^k) = 0
        for n in 3u32..13 {
            let g = Group::dihedral(n).unwrap();
            for gens in g.elements().flat_map(|a| g.elements().map(move |b| [a, b])) {
                let h = Subgroup::generated(&g, &gens);
                for j in 1..n {
                    let sum: f64 = h
                        .elements()
                        .iter()
                        .filter(|&&x| x < n)
                        .map(|&k| {
                            2.0 * (2.0 * std::f64::consts::PI * f64::from(j * k) / f64::from(n))
                                .cos()
                        })
                        .sum();
                    let avg = (sum / h.len() as f64).round() as u32;
                    assert_eq!(
                        fixed_dim(&g, &ComplexIrrep::DihedralPlane { j }, &h).unwrap(),
                        avg
                    );
                }
            }
        }
    }

    #[test]
    fn external_groups_are_rejected() {
        let c2 = Group::cyclic(2).unwrap();
        let table: Vec<Vec<u32>> = (0..2)
            .map(|a| (0..2).map(|b| c2.mul(a, b)).collect())
            .collect();
        let ext = Group::from_table("Z2", table, vec![1], None, "file:x#Z2".into()).unwrap();
        assert!(matches!(
            rational_irreducibles(&ext),
            Err(Error::Capability(_))
        ));
    }
}
