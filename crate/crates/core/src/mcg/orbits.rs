use std::collections::{HashMap, HashSet, VecDeque};

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::{apply_raw, orbit_moves, MOVE_SET_VERSION};
use crate::error::{Error, Result};
use crate::exec::Threads;
use crate::genvec::{
    arrangements, enumerate_ordered, is_surface_kernel, search_size, GeneratingVector, VectorTable,
};
use crate::group::{Elem, Group};
use crate::signature::Signature;

/// Default ceiling on the number of vectors held by one orbit computation.
pub const DEFAULT_MAX_VECTORS: u128 = 5_000_000;

#[derive(Clone, Copy, Debug)]
pub struct OrbitOptions {
    pub threads: Threads,
    /// Upper bound on the estimated number of vectors over all period orderings.
    pub max_vectors: u128,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions {
            threads: Threads::all(),
            max_vectors: DEFAULT_MAX_VECTORS,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    #[serde(serialize_with = "ser_vector")]
    pub representative: GeneratingVector,
    pub size: usize,
}

fn ser_vector<S: serde::Serializer>(
    v: &GeneratingVector,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.entries())
}

/// Orbits of one stratum, restricted to the sorted period ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumReport {
    pub group: String,
    pub signature: Signature,
    pub total_vectors: usize,
    pub orbits: Vec<OrbitSummary>,
    pub move_set_version: String,
    pub move_set_complete: bool,
}

impl StratumReport {
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn to_json(&self, group: &Group) -> serde_json::Value {
        serde_json::json!({
            "group": self.group,
            "signature": self.signature.to_string(),
            "total_vectors": self.total_vectors,
            "orbit_count": self.orbit_count(),
            "orbits": self.orbits.iter().map(|o| serde_json::json!({
                "representative": o.representative.render(group),
                "size": o.size,
            })).collect::<Vec<_>>(),
            "move_set_version": self.move_set_version,
            "move_set_complete": self.move_set_complete,
        })
    }
}

/// Full partition data: every vector over every ordering of the periods,
/// with its orbit index.
#[derive(Clone, Debug)]
pub struct Partition {
    table: VectorTable,
    sorted: Vec<bool>,
    orbit_of: Vec<u32>,
    report: StratumReport,
}

impl Partition {
    pub fn report(&self) -> &StratumReport {
        &self.report
    }

    pub fn into_report(self) -> StratumReport {
        self.report
    }

    /// Orbit index of any generating vector of the stratum, in any ordering
    /// of the periods.
    pub fn orbit_of(&self, v: &GeneratingVector) -> Option<usize> {
        self.table
            .find(v.entries())
            .map(|i| self.orbit_of[i] as usize)
    }

    /// Members of orbit `k` with sorted periods, ascending.
    pub fn members(&self, k: usize) -> impl Iterator<Item = GeneratingVector> + '_ {
        (0..self.table.len())
            .filter(move |&i| self.sorted[i] && self.orbit_of[i] as usize == k)
            .map(|i| self.table.vector(i))
    }
}

/// Partitions the generating vectors of `sig` in `group` into equivalence
/// classes under braids, genus-one moves and automorphisms.
///
/// Braid moves permute the periods, so vectors for every ordering are
/// enumerated and joined; the reported orbits are then the classes of the
/// sorted ordering.
pub fn orbits(group: &Group, sig: &Signature, opts: OrbitOptions) -> Result<Partition> {
    sig.rh_genus(group.order() as u64)?;
    let h = sig.h() as usize;
    let orders = arrangements(sig.periods());
    let estimate: u128 = orders.iter().map(|p| search_size(group, h, p)).sum();
    if estimate > opts.max_vectors.saturating_mul(group.order() as u128) {
        return Err(Error::Capability(format!(
            "orbit computation for {sig} in {group} would search about {estimate} candidates over {} orderings; limit is {} vectors",
            orders.len(),
            opts.max_vectors
        )));
    }
    let threads = opts.threads;
    let mut rows = Vec::new();
    for p in &orders {
        rows.extend(enumerate_ordered(group, h, p, threads));
        if rows.len() as u128 > opts.max_vectors {
            return Err(Error::Capability(format!(
                "orbit computation for {sig} in {group} exceeds {} vectors",
                opts.max_vectors
            )));
        }
    }
    let width = 2 * h + sig.len();
    let table = VectorTable::from_rows(h, width, rows, threads);
    let n = table.len();
    let sorted: Vec<bool> = threads.map(n, |i| {
        let ell = &table.row(i)[2 * h..];
        ell.windows(2)
            .all(|w| group.element_order(w[0]) <= group.element_order(w[1]))
    });

    let (moves, complete) = orbit_moves(group, h, sig.len())?;
    let mut uf = UnionFind::<u32>::new(n);
    for mv in &moves {
        let images = threads.map(n, |i| {
            let mut dst = vec![0; width];
            apply_raw(group, h, table.row(i), mv, &mut dst);
            table.find(&dst)
        });
        for (i, img) in images.into_iter().enumerate() {
            let j =
                img.ok_or_else(|| Error::Internal(format!("{mv:?} left the stratum of {sig}")))?;
            uf.union(i as u32, j as u32);
        }
    }

    let mut orbit_id: HashMap<u32, u32> = HashMap::new();
    let mut summaries: Vec<OrbitSummary> = Vec::new();
    for i in (0..n).filter(|&i| sorted[i]) {
        let root = uf.find(i as u32);
        let k = *orbit_id.entry(root).or_insert_with(|| {
            summaries.push(OrbitSummary {
                representative: table.vector(i),
                size: 0,
            });
            summaries.len() as u32 - 1
        });
        summaries[k as usize].size += 1;
    }
    let orbit_of = (0..n)
        .map(|i| {
            orbit_id
                .get(&uf.find(i as u32))
                .copied()
                .ok_or_else(|| Error::Internal("orbit without a sorted member".into()))
        })
        .collect::<Result<Vec<u32>>>()?;
    let total = sorted.iter().filter(|&&s| s).count();
    Ok(Partition {
        report: StratumReport {
            group: group.spec().to_string(),
            signature: sig.clone(),
            total_vectors: total,
            orbits: summaries,
            move_set_version: MOVE_SET_VERSION.to_string(),
            move_set_complete: complete,
        },
        table,
        sorted,
        orbit_of,
    })
}

/// Whether two generating vectors of the same stratum are related by the
/// orbit moves, by breadth-first search from `a`.
pub fn are_equivalent(
    group: &Group,
    sig: &Signature,
    a: &GeneratingVector,
    b: &GeneratingVector,
    max_visited: usize,
) -> Result<bool> {
    for v in [a, b] {
        if v.orbit_genus() != sig.h() as usize || v.elliptic().len() != sig.len() {
            return Err(Error::Shape(format!(
                "vector does not match signature {sig}"
            )));
        }
        if let Some(violation) = is_surface_kernel(group, sig, v.hyperbolic(), v.elliptic())? {
            return Err(Error::Shape(format!(
                "{} is not a generating vector: {violation}",
                v.render(group)
            )));
        }
    }
    let h = sig.h() as usize;
    let (moves, _) = orbit_moves(group, h, sig.len())?;
    let target: &[Elem] = b.entries();
    let mut seen: HashSet<Vec<Elem>> = HashSet::from([a.entries().to_vec()]);
    let mut queue = VecDeque::from([a.entries().to_vec()]);
    while let Some(cur) = queue.pop_front() {
        if cur == target {
            return Ok(true);
        }
        for mv in &moves {
            let mut next = vec![0; cur.len()];
            apply_raw(group, h, &cur, mv, &mut next);
            if seen.insert(next.clone()) {
                if seen.len() > max_visited {
                    return Err(Error::Capability(format!(
                        "equivalence search exceeded {max_visited} vectors"
                    )));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}
