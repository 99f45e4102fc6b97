//! Surface-kernel generating vectors.
//!
//! A vector is stored flat as `(a_1, b_1, ..., a_h, b_h, x_1, ..., x_l)`; the
//! derived ordering is therefore lexicographic with the hyperbolic part first.

use std::fmt;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::exec::Threads;
use crate::group::{Elem, Group};
use crate::signature::Signature;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratingVector {
    h: usize,
    entries: Vec<Elem>,
}

/// First violated surface-kernel condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `Π [a_i, b_i] Π x_j` is not the identity; carries the product.
    ProductRelation { product: Elem },
    /// `x_index` (1-based) does not have the period as exact order.
    Order {
        index: usize,
        expected: u32,
        actual: u32,
    },
    /// The entries generate a proper subgroup of this size.
    Generation { generated: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ProductRelation { product } => {
                write!(f, "product relation fails (product is element #{product})")
            }
            Violation::Order {
                index,
                expected,
                actual,
            } => {
                write!(f, "x_{index} has order {actual}, expected {expected}")
            }
            Violation::Generation { generated } => {
                write!(f, "entries generate only a subgroup of order {generated}")
            }
        }
    }
}

impl GeneratingVector {
    pub fn new(hyperbolic: Vec<Elem>, elliptic: Vec<Elem>) -> Result<GeneratingVector> {
        if !hyperbolic.len().is_multiple_of(2) {
            return Err(Error::Shape(format!(
                "hyperbolic part has odd length {}",
                hyperbolic.len()
            )));
        }
        let h = hyperbolic.len() / 2;
        let mut entries = hyperbolic;
        entries.extend(elliptic);
        Ok(GeneratingVector { h, entries })
    }

    /// Builds a vector from its flat entry list and orbit genus.
    pub fn from_flat(h: usize, entries: Vec<Elem>) -> GeneratingVector {
        assert!(
            entries.len() >= 2 * h,
            "entry list shorter than hyperbolic part"
        );
        GeneratingVector { h, entries }
    }

    pub fn orbit_genus(&self) -> usize {
        self.h
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Elem> {
        self.entries
    }

    pub fn hyperbolic(&self) -> &[Elem] {
        &self.entries[..2 * self.h]
    }

    pub fn elliptic(&self) -> &[Elem] {
        &self.entries[2 * self.h..]
    }

    /// `Π [a_i, b_i] Π x_j`.
    pub fn relation_product(&self, group: &Group) -> Elem {
        relation_product(group, self.h, &self.entries)
    }

    /// Text form `a1,b1,...;x1,...`, with `-` for an empty part.
    pub fn render(&self, group: &Group) -> String {
        let part = |xs: &[Elem]| {
            if xs.is_empty() {
                "-".to_string()
            } else {
                xs.iter()
                    .map(|&x| group.name(x))
                    .collect::<Vec<_>>()
                    .join(",")
            }
        };
        format!("{};{}", part(self.hyperbolic()), part(self.elliptic()))
    }

    /// Parses the text form against a group and signature. When the orbit
    /// genus is zero the leading `-;` may be omitted.
    pub fn parse(group: &Group, sig: &Signature, text: &str) -> Result<GeneratingVector> {
        let text = text.trim();
        let (hyp, ell) = match text.split_once(';') {
            Some((a, b)) => (a, b),
            None if sig.h() == 0 => ("-", text),
            None => {
                return Err(Error::Parse(format!(
                    "vector '{text}' needs a ';' between hyperbolic and elliptic parts"
                )))
            }
        };
        let part = |s: &str| -> Result<Vec<Elem>> {
            let s = s.trim();
            if s == "-" || s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',').map(|x| group.parse_element(x)).collect()
        };
        let (hyp, ell) = (part(hyp)?, part(ell)?);
        check_shape(sig, hyp.len(), ell.len())?;
        GeneratingVector::new(hyp, ell)
    }
}

fn check_shape(sig: &Signature, hyperbolic: usize, elliptic: usize) -> Result<()> {
    if hyperbolic != 2 * sig.h() as usize || elliptic != sig.len() {
        return Err(Error::Shape(format!(
            "signature {sig} needs {} hyperbolic and {} elliptic entries, got {hyperbolic} and {elliptic}",
            2 * sig.h(),
            sig.len()
        )));
    }
    Ok(())
}

pub(crate) fn relation_product(group: &Group, h: usize, entries: &[Elem]) -> Elem {
    let mut acc = group.identity();
    for i in 0..h {
        acc = group.mul(acc, group.commutator(entries[2 * i], entries[2 * i + 1]));
    }
    for &x in &entries[2 * h..] {
        acc = group.mul(acc, x);
    }
    acc
}

/// Checks the three surface-kernel conditions against an ordered period list.
pub fn check_entries(
    group: &Group,
    h: usize,
    periods: &[u32],
    entries: &[Elem],
) -> Option<Violation> {
    let product = relation_product(group, h, entries);
    if product != group.identity() {
        return Some(Violation::ProductRelation { product });
    }
    for (j, (&x, &m)) in entries[2 * h..].iter().zip(periods).enumerate() {
        let actual = group.element_order(x);
        if actual != m {
            return Some(Violation::Order {
                index: j + 1,
                expected: m,
                actual,
            });
        }
    }
    let generated = group.subgroup_generated(entries).len();
    (generated != group.order()).then_some(Violation::Generation { generated })
}

/// `Ok(None)` when the tuple is a surface-kernel generating vector, otherwise
/// the first violated condition. Length mismatches are shape errors.
pub fn is_surface_kernel(
    group: &Group,
    sig: &Signature,
    hyperbolic: &[Elem],
    elliptic: &[Elem],
) -> Result<Option<Violation>> {
    check_shape(sig, hyperbolic.len(), elliptic.len())?;
    if let Some(&x) = hyperbolic
        .iter()
        .chain(elliptic)
        .find(|&&x| x as usize >= group.order())
    {
        return Err(Error::Shape(format!(
            "element index {x} out of range for {group}"
        )));
    }
    let entries: Vec<Elem> = hyperbolic.iter().chain(elliptic).copied().collect();
    Ok(check_entries(
        group,
        sig.h() as usize,
        sig.periods(),
        &entries,
    ))
}

/// Sorted, duplicate-free vectors of one width, stored flat.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VectorTable {
    h: usize,
    width: usize,
    data: Vec<Elem>,
}

impl VectorTable {
    pub(crate) fn from_rows(
        h: usize,
        width: usize,
        mut rows: Vec<Vec<Elem>>,
        threads: Threads,
    ) -> VectorTable {
        threads.sort(&mut rows);
        rows.dedup();
        VectorTable {
            h,
            width,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn len(&self) -> usize {
        if self.width == 0 {
            // only the empty vector can exist
            return usize::from(!self.data.is_empty());
        }
        self.data.len() / self.width
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.len()).map(move |i| self.row(i))
    }

    pub fn vector(&self, i: usize) -> GeneratingVector {
        GeneratingVector::from_flat(self.h, self.row(i).to_vec())
    }

    pub fn vectors(&self) -> impl Iterator<Item = GeneratingVector> + '_ {
        (0..self.len()).map(move |i| self.vector(i))
    }

    /// Index of `row`, by binary search.
    pub fn find(&self, row: &[Elem]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.row(mid).cmp(row) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

/// Result of [`enumerate_vectors`]. `genus` is `None` when Riemann–Hurwitz
/// already rules the pair out, in which case the table is empty.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub genus: Option<u64>,
    pub vectors: VectorTable,
}

/// Search space for one ordering of the periods. Hyperbolic slots range over
/// the whole group and come first; the last elliptic entry is solved from the
/// long relation.
struct Walk<'a> {
    group: &'a Group,
    h: usize,
    periods: &'a [u32],
    slots: Vec<Vec<Elem>>,
}

impl<'a> Walk<'a> {
    fn new(group: &'a Group, h: usize, periods: &'a [u32]) -> Walk<'a> {
        let all: Vec<Elem> = group.elements().collect();
        let mut slots = vec![all; 2 * h];
        if let Some((_, free)) = periods.split_last() {
            slots.extend(free.iter().map(|&m| group.elements_of_order(m)));
        }
        Walk {
            group,
            h,
            periods,
            slots,
        }
    }

    fn width(&self) -> usize {
        2 * self.h + self.periods.len()
    }

    fn size(&self) -> u128 {
        self.slots.iter().map(|s| s.len() as u128).product()
    }

    /// Number of values of the outermost slot (the unit of parallel work).
    fn partitions(&self) -> usize {
        self.slots.first().map_or(1, Vec::len)
    }

    /// Visits every valid vector whose outermost slot takes its
    /// `partition`-th value, in lexicographic order.
    fn walk(
        &self,
        partition: usize,
        visit: &mut dyn FnMut(&[Elem]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let g = self.group;
        let width = self.width();
        let free = self.slots.len();
        let mut idx = vec![0usize; free];
        let mut entries = vec![0; width];
        if free > 0 {
            if self.slots[0].is_empty() {
                return ControlFlow::Continue(());
            }
            idx[0] = partition;
        }
        if self.slots.iter().any(Vec::is_empty) {
            return ControlFlow::Continue(());
        }
        loop {
            for (e, (slot, &i)) in entries.iter_mut().zip(self.slots.iter().zip(&idx)) {
                *e = slot[i];
            }
            let valid = if self.periods.is_empty() {
                relation_product(g, self.h, &entries) == g.identity() && g.generates(&entries)
            } else {
                let partial = relation_product(g, self.h, &entries[..width - 1]);
                let last = g.inv(partial);
                entries[width - 1] = last;
                g.element_order(last) == self.periods[self.periods.len() - 1]
                    && g.generates(&entries)
            };
            if valid {
                visit(&entries)?;
            }
            // odometer over slots 1.., slot 0 is the fixed partition
            let mut k = free;
            loop {
                if k <= 1 {
                    return ControlFlow::Continue(());
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < self.slots[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

/// Every distinct ordering of a sorted period list, in lexicographic order.
pub fn arrangements(periods: &[u32]) -> Vec<Vec<u32>> {
    let mut current = periods.to_vec();
    current.sort_unstable();
    let mut out = vec![current.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..current.len())
            .rev()
            .find(|&i| current[i - 1] < current[i])
        else {
            return out;
        };
        let j = (i..current.len())
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// Size of the raw search space for one period ordering.
pub fn search_size(group: &Group, h: usize, periods: &[u32]) -> u128 {
    Walk::new(group, h, periods).size()
}

/// All generating vectors for an ordered period list, sorted.
pub fn enumerate_ordered(
    group: &Group,
    h: usize,
    periods: &[u32],
    threads: Threads,
) -> Vec<Vec<Elem>> {
    let walk = Walk::new(group, h, periods);
    let mut rows = threads.flat_map(walk.partitions(), |p| {
        let mut rows = Vec::new();
        let _ = walk.walk(p, &mut |v| {
            rows.push(v.to_vec());
            ControlFlow::Continue(())
        });
        rows
    });
    threads.sort(&mut rows);
    rows
}

/// The complete, sorted list of surface-kernel generating vectors of `group`
/// with signature `sig`.
pub fn enumerate_vectors(group: &Group, sig: &Signature, threads: Threads) -> Enumeration {
    let genus = sig.rh_genus(group.order() as u64).ok();
    let h = sig.h() as usize;
    let width = 2 * h + sig.len();
    if genus.is_none() {
        return Enumeration {
            genus,
            vectors: VectorTable::from_rows(h, width, Vec::new(), threads),
        };
    }
    let rows = enumerate_ordered(group, h, sig.periods(), threads);
    Enumeration {
        genus,
        vectors: VectorTable::from_rows(h, width, rows, threads),
    }
}

/// The lexicographically first generating vector, if any.
pub fn find_vector(group: &Group, sig: &Signature) -> Option<GeneratingVector> {
    sig.rh_genus(group.order() as u64).ok()?;
    let h = sig.h() as usize;
    let walk = Walk::new(group, h, sig.periods());
    (0..walk.partitions()).find_map(|p| {
        let mut found = None;
        let _ = walk.walk(p, &mut |v| {
            found = Some(GeneratingVector::from_flat(h, v.to_vec()));
            ControlFlow::Break(())
        });
        found
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn surface_kernel_examples() {
        let d5 = Group::dihedral(5).unwrap();
        let s6 = sig("0;2,2,2,2,2,2");
        let v = GeneratingVector::parse(&d5, &s6, "-;s,s,s,s,sr,sr").unwrap();
        assert_eq!(
            is_surface_kernel(&d5, &s6, v.hyperbolic(), v.elliptic()).unwrap(),
            None
        );

        let w = GeneratingVector::parse(&d5, &s6, "s,s,s,s,s,s").unwrap();
        assert_eq!(
            is_surface_kernel(&d5, &s6, w.hyperbolic(), w.elliptic()).unwrap(),
            Some(Violation::Generation { generated: 2 })
        );

        let c4 = Group::cyclic(4).unwrap();
        let s4 = sig("1;2,2,2,2");
        let u = GeneratingVector::parse(&c4, &s4, "t,1;t^2,t^2,t^2,t^2").unwrap();
        assert_eq!(
            is_surface_kernel(&c4, &s4, u.hyperbolic(), u.elliptic()).unwrap(),
            None
        );
        assert_eq!(u.render(&c4), "t,1;t^2,t^2,t^2,t^2");
    }

    #[test]
    fn diagnosis_order() {
        let d5 = Group::dihedral(5).unwrap();
        let s6 = sig("0;2,2,2,2,2,2");
        let r = d5.rotation(1).unwrap();
        let s = d5.reflection(0).unwrap();
        let bad = is_surface_kernel(&d5, &s6, &[], &[s, s, s, s, s, r]).unwrap();
        assert!(matches!(bad, Some(Violation::ProductRelation { .. })));
        let r4 = d5.rotation(4).unwrap();
        let bad = is_surface_kernel(&d5, &s6, &[], &[s, s, s, s, r, r4]).unwrap();
        assert_eq!(
            bad,
            Some(Violation::Order {
                index: 5,
                expected: 2,
                actual: 5
            })
        );
        assert!(matches!(
            is_surface_kernel(&d5, &s6, &[], &[s, s]),
            Err(Error::Shape(_))
        ));
        assert!(GeneratingVector::parse(&d5, &s6, "-;s,s").is_err());
    }

    #[test]
    fn enumeration_examples() {
        let s6 = sig("0;2,2,2,2,2,2");
        let c10 = Group::cyclic(10).unwrap();
        assert!(enumerate_vectors(&c10, &s6, Threads::sequential())
            .vectors
            .is_empty());
        let d5 = Group::dihedral(5).unwrap();
        let e = enumerate_vectors(&d5, &s6, Threads::sequential());
        assert_eq!(e.genus, Some(6));
        assert!(!e.vectors.is_empty());
        assert_eq!(find_vector(&d5, &s6).unwrap(), e.vectors.vector(0));
        let inadmissible = enumerate_vectors(&d5, &sig("0;2,2,2"), Threads::sequential());
        assert!(inadmissible.genus.is_none() && inadmissible.vectors.is_empty());
    }

    #[test]
    fn arrangements_are_distinct_orderings() {
        assert_eq!(
            arrangements(&[2, 2, 3]),
            vec![vec![2, 2, 3], vec![2, 3, 2], vec![3, 2, 2]]
        );
        assert_eq!(arrangements(&[2, 2, 2, 2, 2, 2, 7]).len(), 7);
        assert_eq!(arrangements(&[]), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn table_lookup() {
        let d3 = Group::dihedral(3).unwrap();
        let e = enumerate_vectors(&d3, &sig("0;2,2,2,2,2,2"), Threads::sequential());
        for (i, row) in e.vectors.rows().enumerate() {
            assert_eq!(e.vectors.find(row), Some(i));
        }
        assert_eq!(e.vectors.find(&[0, 0, 0, 0, 0, 0]), None);
    }
}
