//! Exact finite groups given by multiplication tables.
//!
//! Elements are dense indices `0..order`. Built-in families use a fixed
//! layout: in `C_n` index `k` is `t^k`; in `D_n` index `k < n` is `r^k` and
//! index `n + k` is `s r^k`.

mod automorphism;
mod catalog;
mod coset;
mod subgroup;

pub use automorphism::{automorphism_generators, Automorphism, DEFAULT_BRUTE_FORCE_LIMIT};
pub use catalog::{load_catalog, read_catalog, CatalogEntry, GroupSpec};
pub use coset::{coset_action, CosetSpace};
pub use subgroup::Subgroup;

use std::fmt;

use crate::error::{Error, Result};

pub type Elem = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(u32),
    Dihedral(u32),
    External { name: String },
}

#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    table: Vec<Elem>,
    inverse: Vec<Elem>,
    element_orders: Vec<u32>,
    identity: Elem,
    names: Vec<String>,
    generators: Vec<Elem>,
    kind: GroupKind,
    spec: String,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.table == other.table
    }
}

impl Eq for Group {}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Cyclic(n) => write!(f, "C_{n}"),
            GroupKind::Dihedral(n) => write!(f, "D_{n}"),
            GroupKind::External { name } => write!(f, "{name}"),
        }
    }
}

impl Group {
    /// `C_n = <t>`.
    pub fn cyclic(n: u32) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidTable("cyclic group needs n >= 1".into()));
        }
        let n_us = n as usize;
        let table = (0..n_us)
            .flat_map(|a| (0..n_us).map(move |b| ((a + b) % n_us) as Elem))
            .collect();
        let names = (0..n).map(|k| power_name("t", k)).collect();
        let generators = if n == 1 { vec![] } else { vec![1] };
        Ok(Group::assemble(
            table,
            0,
            names,
            generators,
            GroupKind::Cyclic(n),
            format!("C:{n}"),
        ))
    }

    /// `D_n = <r, s : r^n = s^2 = (sr)^2 = 1>` of order `2n`.
    pub fn dihedral(n: u32) -> Result<Group> {
        if n < 2 {
            return Err(Error::InvalidTable("dihedral group needs n >= 2".into()));
        }
        let m = n as usize;
        let mut table = vec![0; 4 * m * m];
        for x in 0..2 * m {
            for y in 0..2 * m {
                let (xs, xk) = (x >= m, x % m);
                let (ys, yk) = (y >= m, y % m);
                // r^a s = s r^-a
                let k = if ys { (yk + m - xk) % m } else { (xk + yk) % m };
                let refl = xs ^ ys;
                table[x * 2 * m + y] = (k + if refl { m } else { 0 }) as Elem;
            }
        }
        let names = (0..n)
            .map(|k| power_name("r", k))
            .chain((0..n).map(|k| match k {
                0 => "s".to_string(),
                _ => format!("s{}", power_name("r", k)),
            }))
            .collect();
        Ok(Group::assemble(
            table,
            0,
            names,
            vec![1, n],
            GroupKind::Dihedral(n),
            format!("D:{n}"),
        ))
    }

    /// Validates an externally supplied table (Latin square, identity,
    /// associativity) and builds the group.
    pub fn from_table(
        name: &str,
        table: Vec<Vec<u32>>,
        generators: Vec<u32>,
        names: Option<Vec<String>>,
        spec: String,
    ) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v as usize >= n) {
                return Err(Error::InvalidTable(format!(
                    "entry {bad} in row {i} out of range"
                )));
            }
        }
        let flat: Vec<Elem> = table.into_iter().flatten().collect();
        let at = |a: usize, b: usize| flat[a * n + b] as usize;
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut row_seen[at(i, j)], true) {
                    return Err(Error::InvalidTable(format!(
                        "not a Latin square: row {i} repeats {}",
                        at(i, j)
                    )));
                }
                if std::mem::replace(&mut col_seen[at(j, i)], true) {
                    return Err(Error::InvalidTable(format!(
                        "not a Latin square: column {i} repeats {}",
                        at(j, i)
                    )));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let names = match names {
            Some(names) if names.len() == n => names,
            Some(names) => {
                return Err(Error::InvalidTable(format!(
                    "{} element names for order {n}",
                    names.len()
                )))
            }
            None => (0..n).map(|k| format!("#{k}")).collect(),
        };
        if let Some(&g) = generators.iter().find(|&&g| g as usize >= n) {
            return Err(Error::InvalidTable(format!("generator {g} out of range")));
        }
        let group = Group::assemble(
            flat,
            identity as Elem,
            names,
            generators,
            GroupKind::External {
                name: name.to_string(),
            },
            spec,
        );
        if !group.generators.is_empty() && group.subgroup_generated(&group.generators).len() != n {
            return Err(Error::InvalidTable(
                "listed generators do not generate the group".into(),
            ));
        }
        Ok(group)
    }

    fn assemble(
        table: Vec<Elem>,
        identity: Elem,
        names: Vec<String>,
        generators: Vec<Elem>,
        kind: GroupKind,
        spec: String,
    ) -> Group {
        let order = names.len();
        let mut inverse = vec![0; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == identity {
                    inverse[a] = b as Elem;
                }
            }
        }
        let element_orders = (0..order)
            .map(|x| {
                let mut k = 1;
                let mut p = x as Elem;
                while p != identity {
                    p = table[p as usize * order + x];
                    k += 1;
                }
                k
            })
            .collect();
        Group {
            order,
            table,
            inverse,
            element_orders,
            identity,
            names,
            generators,
            kind,
            spec,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    /// The spec string this group was built from (`C:5`, `D:3`, `file:..#..`).
    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a as usize]
    }

    pub fn product(&self, xs: impl IntoIterator<Item = Elem>) -> Elem {
        xs.into_iter()
            .fold(self.identity, |acc, x| self.mul(acc, x))
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: Elem, k: i64) -> Elem {
        let ord = self.element_order(x) as i64;
        let mut e = k.rem_euclid(ord);
        let (mut acc, mut base) = (self.identity, x);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.product([a, b, self.inv(a), self.inv(b)])
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, x: Elem, g: Elem) -> Elem {
        self.product([g, x, self.inv(g)])
    }

    #[inline]
    pub fn element_order(&self, x: Elem) -> u32 {
        self.element_orders[x as usize]
    }

    pub fn elements_of_order(&self, m: u32) -> Vec<Elem> {
        self.elements()
            .filter(|&x| self.element_order(x) == m)
            .collect()
    }

    pub fn exponent(&self) -> u64 {
        self.element_orders
            .iter()
            .fold(1u64, |acc, &o| num_integer::lcm(acc, o as u64))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x as usize]
    }

    /// Dihedral groups only: `r^k` (rotation).
    pub fn rotation(&self, k: i64) -> Option<Elem> {
        match self.kind {
            GroupKind::Dihedral(n) => Some(k.rem_euclid(n as i64) as Elem),
            _ => None,
        }
    }

    /// Dihedral groups only: `s r^k` (reflection).
    pub fn reflection(&self, k: i64) -> Option<Elem> {
        match self.kind {
            GroupKind::Dihedral(n) => Some(n + k.rem_euclid(n as i64) as Elem),
            _ => None,
        }
    }

    /// Parses an element literal: `1`, words in the family's letters with
    /// optional integer exponents (`sr^2`, `r^-1`, `rs`, `t^3`), or `#k`.
    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let text = text.trim();
        if let Some(idx) = text.strip_prefix('#') {
            let k: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad element index '{text}'")))?;
            if k >= self.order {
                return Err(Error::Parse(format!("element index {k} out of range")));
            }
            return Ok(k as Elem);
        }
        if text == "1" || text == "e" {
            return Ok(self.identity);
        }
        if let Some(pos) = self.names.iter().position(|n| n == text) {
            return Ok(pos as Elem);
        }
        let letter = |c: char| -> Option<Elem> {
            match (&self.kind, c) {
                (GroupKind::Cyclic(n), 't') if *n > 1 => Some(1),
                (GroupKind::Cyclic(_), 't') => Some(0),
                (GroupKind::Dihedral(_), 'r') => Some(1),
                (GroupKind::Dihedral(n), 's') => Some(*n),
                _ => None,
            }
        };
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty element literal".into()));
        }
        let mut acc = self.identity;
        let mut i = 0;
        while i < chars.len() {
            let base = letter(chars[i]).ok_or_else(|| {
                Error::Parse(format!("unknown element literal '{text}' for {self}"))
            })?;
            i += 1;
            let mut exp = 1i64;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                exp = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in '{text}'")))?;
            }
            acc = self.mul(acc, self.pow(base, exp));
        }
        Ok(acc)
    }

    /// Smallest subgroup containing `gens`, as a sorted element list.
    pub fn subgroup_generated(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut seen = vec![false; self.order];
        seen[self.identity as usize] = true;
        let mut members = vec![self.identity];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    /// `true` when `gens` generate the whole group.
    pub fn generates(&self, gens: &[Elem]) -> bool {
        self.subgroup_generated(gens).len() == self.order
    }
}

fn power_name(letter: &str, k: u32) -> String {
    match k {
        0 => "1".to_string(),
        1 => letter.to_string(),
        _ => format!("{letter}^{k}"),
    }
}
