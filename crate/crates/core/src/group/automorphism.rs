use std::collections::HashSet;

use super::{Elem, Group, GroupKind};
use crate::error::{Error, Result};
use crate::numtheory::gcd;

/// Largest external group for which automorphisms are searched by brute force.
pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 64;

/// An automorphism stored as the permutation of element indices it induces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    map: Vec<Elem>,
}

impl Automorphism {
    pub fn identity(group: &Group) -> Automorphism {
        Automorphism {
            map: group.elements().collect(),
        }
    }

    /// `(r, s) -> (r^alpha, s r^beta)` on `D_n`.
    pub fn dihedral(group: &Group, alpha: i64, beta: i64) -> Result<Automorphism> {
        let GroupKind::Dihedral(n) = *group.kind() else {
            return Err(Error::GroupMismatch(format!("{group} is not dihedral")));
        };
        let n = n as i64;
        if gcd(alpha.rem_euclid(n), n) != 1 {
            return Err(Error::Shape(format!(
                "alpha = {alpha} is not a unit mod {n}"
            )));
        }
        // r^k -> r^(alpha k), s r^k -> s r^(beta + alpha k)
        let map = (0..n)
            .map(|k| (alpha * k).rem_euclid(n) as Elem)
            .chain((0..n).map(|k| (n + (beta + alpha * k).rem_euclid(n)) as Elem))
            .collect();
        Ok(Automorphism { map })
    }

    /// `t -> t^alpha` on `C_n`.
    pub fn cyclic(group: &Group, alpha: i64) -> Result<Automorphism> {
        let GroupKind::Cyclic(n) = *group.kind() else {
            return Err(Error::GroupMismatch(format!("{group} is not cyclic")));
        };
        let n = n as i64;
        if gcd(alpha.rem_euclid(n), n) != 1 {
            return Err(Error::Shape(format!(
                "alpha = {alpha} is not a unit mod {n}"
            )));
        }
        let map = (0..n).map(|k| (alpha * k).rem_euclid(n) as Elem).collect();
        Ok(Automorphism { map })
    }

    /// Checks the homomorphism and bijection conditions.
    pub fn from_map(group: &Group, map: Vec<Elem>) -> Result<Automorphism> {
        if map.len() != group.order() {
            return Err(Error::GroupMismatch(format!(
                "map of length {} for group of order {}",
                map.len(),
                group.order()
            )));
        }
        let mut seen = vec![false; map.len()];
        for &y in &map {
            if y as usize >= map.len() || std::mem::replace(&mut seen[y as usize], true) {
                return Err(Error::Shape("map is not a bijection".into()));
            }
        }
        for a in group.elements() {
            for b in group.elements() {
                if map[group.mul(a, b) as usize] != group.mul(map[a as usize], map[b as usize]) {
                    return Err(Error::Shape(format!(
                        "map is not a homomorphism at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Automorphism { map })
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x as usize]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            map: other.map.iter().map(|&x| self.map[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut map = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            map[y as usize] = x as Elem;
        }
        Automorphism { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i as Elem == x)
    }
}

impl Group {
    /// All automorphisms, using closed forms for `C_n` and `D_n` (`n >= 3`)
    /// and a brute-force search otherwise.
    pub fn automorphisms(&self) -> Result<Vec<Automorphism>> {
        self.automorphisms_with_limit(DEFAULT_BRUTE_FORCE_LIMIT)
    }

    pub fn automorphisms_with_limit(&self, limit: usize) -> Result<Vec<Automorphism>> {
        match *self.kind() {
            GroupKind::Cyclic(n) => (1..=n as i64)
                .filter(|&a| gcd(a, n as i64) == 1)
                .map(|a| Automorphism::cyclic(self, a))
                .collect(),
            GroupKind::Dihedral(n) if n >= 3 => {
                let n = n as i64;
                let mut out = Vec::new();
                for alpha in (1..n).filter(|&a| gcd(a, n) == 1) {
                    for beta in 0..n {
                        out.push(Automorphism::dihedral(self, alpha, beta)?);
                    }
                }
                Ok(out)
            }
            // D_2 is the Klein four-group, whose automorphism group S_3 is
            // larger than the (r, s) -> (r^a, s r^b) family.
            GroupKind::Dihedral(_) => Ok(brute_force_automorphisms(self)),
            GroupKind::External { .. } if self.order() <= limit => {
                Ok(brute_force_automorphisms(self))
            }
            GroupKind::External { .. } => Err(Error::Capability(format!(
                "automorphism search limited to order {limit}, {self} has order {}",
                self.order()
            ))),
        }
    }
}

/// A small generating set, chosen greedily by decreasing element order.
fn greedy_generators(group: &Group) -> Vec<Elem> {
    let mut candidates: Vec<Elem> = group.elements().collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(group.element_order(x)), x));
    let mut gens = Vec::new();
    let mut span = group.subgroup_generated(&gens);
    for x in candidates {
        if span.len() == group.order() {
            break;
        }
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = group.subgroup_generated(&gens);
        }
    }
    gens
}

fn brute_force_automorphisms(group: &Group) -> Vec<Automorphism> {
    let gens = greedy_generators(group);
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| group.elements_of_order(group.element_order(g)))
        .collect();
    let mut found = Vec::new();
    let mut images = vec![0; gens.len()];
    search_images(group, &gens, &candidates, 0, &mut images, &mut found);
    found.sort();
    found
}

fn search_images(
    group: &Group,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    depth: usize,
    images: &mut Vec<Elem>,
    found: &mut Vec<Automorphism>,
) {
    if depth == gens.len() {
        if let Some(aut) = extend_to_automorphism(group, gens, images) {
            found.push(aut);
        }
        return;
    }
    for &c in &candidates[depth] {
        images[depth] = c;
        search_images(group, gens, candidates, depth + 1, images, found);
    }
}

/// Extends `gens[i] -> images[i]` along right multiplication; the extension is
/// consistent exactly when it defines a homomorphism.
fn extend_to_automorphism(group: &Group, gens: &[Elem], images: &[Elem]) -> Option<Automorphism> {
    const UNSET: Elem = Elem::MAX;
    let mut map = vec![UNSET; group.order()];
    map[group.identity() as usize] = group.identity();
    let mut queue = vec![group.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&g, &img) in gens.iter().zip(images) {
            let y = group.mul(x, g);
            let fy = group.mul(map[x as usize], img);
            match map[y as usize] {
                UNSET => {
                    map[y as usize] = fy;
                    queue.push(y);
                }
                existing if existing != fy => return None,
                _ => {}
            }
        }
    }
    let distinct: HashSet<Elem> = map.iter().copied().collect();
    (distinct.len() == group.order()).then_some(Automorphism { map })
}

/// A generating set of the group spanned by `auts`, picked greedily in order.
pub fn automorphism_generators(group: &Group, auts: &[Automorphism]) -> Vec<Automorphism> {
    let mut gens: Vec<Automorphism> = Vec::new();
    let mut span: HashSet<Automorphism> = HashSet::from([Automorphism::identity(group)]);
    for a in auts {
        if span.contains(a) {
            continue;
        }
        gens.push(a.clone());
        // close the span under the enlarged generating set
        let mut frontier: Vec<Automorphism> = span.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = g.compose(&x);
                if span.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    gens
}
