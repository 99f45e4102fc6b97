//! Brute-force reference implementations, written independently of the
//! optimized library code, and the comparisons against them.

use std::collections::{HashMap, HashSet, VecDeque};

use riemann_actions::genvec::enumerate_vectors;
use riemann_actions::mcg::{orbits, OrbitOptions};
use riemann_actions::{enumerate_signatures, Elem, Group, GroupKind, Signature, Threads};

fn closure(g: &Group, gens: &[Elem]) -> usize {
    let mut seen = vec![false; g.order()];
    seen[g.identity() as usize] = true;
    let mut stack = vec![g.identity()];
    while let Some(x) = stack.pop() {
        for &y in gens {
            let z = g.mul(x, y);
            if !seen[z as usize] {
                seen[z as usize] = true;
                stack.push(z);
            }
        }
    }
    seen.iter().filter(|&&b| b).count()
}

fn order_of(g: &Group, x: Elem) -> u32 {
    let (mut y, mut k) = (x, 1);
    while y != g.identity() {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

fn is_vector(g: &Group, h: usize, periods: &[u32], t: &[Elem]) -> bool {
    let mut p = g.identity();
    for i in 0..h {
        let (a, b) = (t[2 * i], t[2 * i + 1]);
        p = g.mul(p, g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    }
    for &x in &t[2 * h..] {
        p = g.mul(p, x);
    }
    p == g.identity()
        && t[2 * h..]
            .iter()
            .zip(periods)
            .all(|(&x, &m)| order_of(g, x) == m)
        && closure(g, t) == g.order()
}

/// Every tuple in `G^width`, filtered.
fn naive_vectors(g: &Group, sig: &Signature) -> Vec<Vec<Elem>> {
    let h = sig.h() as usize;
    let width = 2 * h + sig.len();
    let n = g.order() as u32;
    let mut t = vec![0u32; width];
    let mut out = Vec::new();
    loop {
        if is_vector(g, h, sig.periods(), &t) {
            out.push(t.clone());
        }
        let mut k = width;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            t[k] += 1;
            if t[k] < n {
                break;
            }
            t[k] = 0;
        }
    }
}

fn small_groups() -> Vec<Group> {
    let mut gs: Vec<Group> = (2..=8).map(|n| Group::cyclic(n).unwrap()).collect();
    gs.extend((2..=5).map(|n| Group::dihedral(n).unwrap()));
    gs
}

#[test]
fn d3_six_involutions_count() {
    let d3 = Group::dihedral(3).unwrap();
    let sig: Signature = "0;2,2,2,2,2,2".parse().unwrap();
    let naive = naive_vectors(&d3, &sig);
    assert_eq!(naive.len(), 240);
    let fast = enumerate_vectors(&d3, &sig, Threads::all()).vectors;
    assert_eq!(fast.rows().map(<[u32]>::to_vec).collect::<Vec<_>>(), naive);
}

#[test]
fn enumeration_matches_naive_search() {
    let mut compared = 0;
    for g in small_groups() {
        let n = g.order() as u64;
        for genus in 2..=6 {
            for dim in 0..=4 {
                for sig in enumerate_signatures(genus, n, dim) {
                    let width = 2 * sig.h() + sig.len() as u32;
                    if (n as f64).powi(width as i32) > 3e6 {
                        continue;
                    }
                    let naive = naive_vectors(&g, &sig);
                    let fast = enumerate_vectors(&g, &sig, Threads::all()).vectors;
                    assert_eq!(fast.len(), naive.len(), "{g} {sig}");
                    assert_eq!(
                        fast.rows().map(<[u32]>::to_vec).collect::<Vec<_>>(),
                        naive,
                        "{g} {sig}"
                    );
                    compared += 1;
                }
            }
        }
    }
    assert!(compared > 20, "only {compared} cases compared");
}

/// All automorphisms, by trying every image of the standard generators and
/// checking the homomorphism property on the whole table.
fn naive_automorphisms(g: &Group) -> Vec<Vec<Elem>> {
    let n = g.order();
    let words: Vec<Vec<usize>> = match g.kind() {
        GroupKind::Cyclic(m) => (0..*m).map(|k| vec![0; k as usize]).collect(),
        GroupKind::Dihedral(m) => (0..2 * m)
            .map(|i| {
                if i < *m {
                    vec![0; i as usize]
                } else {
                    [vec![1], vec![0; (i - m) as usize]].concat()
                }
            })
            .collect(),
        GroupKind::External { .. } => unimplemented!(),
    };
    let gens = g.generators().to_vec();
    let mut out = Vec::new();
    let images: Vec<Vec<Elem>> = if gens.len() == 1 {
        g.elements().map(|a| vec![a]).collect()
    } else {
        g.elements()
            .flat_map(|a| g.elements().map(move |b| vec![a, b]))
            .collect()
    };
    for img in images {
        let map: Vec<Elem> = words
            .iter()
            .map(|w| w.iter().fold(g.identity(), |acc, &i| g.mul(acc, img[i])))
            .collect();
        let mut seen = map.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != n {
            continue;
        }
        let hom = (0..n as u32).all(|x| {
            (0..n as u32)
                .all(|y| map[g.mul(x, y) as usize] == g.mul(map[x as usize], map[y as usize]))
        });
        if hom {
            out.push(map);
        }
    }
    out
}

#[test]
fn automorphism_counts_match_naive_search() {
    for g in small_groups()
        .into_iter()
        .chain((6..=10).map(|n| Group::dihedral(n).unwrap()))
    {
        let mut naive = naive_automorphisms(&g);
        let mut lib: Vec<Vec<Elem>> = g
            .automorphisms()
            .unwrap()
            .iter()
            .map(|a| a.map().to_vec())
            .collect();
        naive.sort();
        lib.sort();
        assert_eq!(lib, naive, "{g}");
    }
    assert_eq!(naive_automorphisms(&Group::dihedral(5).unwrap()).len(), 20);
    assert_eq!(naive_automorphisms(&Group::dihedral(2).unwrap()).len(), 6);
}

/// Forward images of a vector under braids (both directions), the genus-one
/// moves with `n = ±1`, and every automorphism.
fn naive_neighbours(g: &Group, h: usize, auts: &[Vec<Elem>], v: &[Elem]) -> Vec<Vec<Elem>> {
    let l = v.len() - 2 * h;
    let prod = |xs: &[Elem]| xs.iter().fold(g.identity(), |a, &b| g.mul(a, b));
    let conj = |x: Elem, by: Elem| prod(&[by, x, g.inv(by)]);
    let mut out = Vec::new();
    for i in 0..l.saturating_sub(1) {
        let (p, q) = (v[2 * h + i], v[2 * h + i + 1]);
        let mut w = v.to_vec();
        w[2 * h + i] = q;
        w[2 * h + i + 1] = prod(&[g.inv(q), p, q]);
        out.push(w);
        let mut w = v.to_vec();
        w[2 * h + i] = conj(q, p);
        w[2 * h + i + 1] = p;
        out.push(w);
    }
    if h == 1 {
        let (a, b) = (v[0], v[1]);
        for e in [a, g.inv(a)] {
            let mut w = v.to_vec();
            w[1] = g.mul(b, e);
            out.push(w);
        }
        for e in [b, g.inv(b)] {
            let mut w = v.to_vec();
            w[0] = g.mul(a, e);
            out.push(w);
        }
        let ell = &v[2..];
        for i in 0..l {
            let w_ = prod(&ell[..i]);
            let z = prod(&ell[i + 1..]);
            let (u1, v1) = (prod(&[g.inv(b), w_, z]), prod(&[z, g.inv(b), w_]));
            let mut w = v.to_vec();
            w[0] = g.mul(u1, a);
            w[2 + i] = conj(ell[i], v1);
            out.push(w);
            let (u2, v2) = (prod(&[w_, z, a]), prod(&[z, a, w_]));
            let mut w = v.to_vec();
            w[1] = g.mul(u2, b);
            w[2 + i] = conj(ell[i], v2);
            out.push(w);
        }
    }
    for f in auts {
        out.push(v.iter().map(|&x| f[x as usize]).collect());
    }
    out
}

/// Class index of every sorted-period vector, by breadth-first search from
/// each unvisited one.
fn naive_classes(g: &Group, sig: &Signature) -> HashMap<Vec<Elem>, usize> {
    let h = sig.h() as usize;
    let auts = naive_automorphisms(g);
    let sorted = enumerate_vectors(g, sig, Threads::sequential()).vectors;
    let mut class: HashMap<Vec<Elem>, usize> = HashMap::new();
    let mut next = 0;
    for start in sorted.rows() {
        if class.contains_key(start) {
            continue;
        }
        let mut seen: HashSet<Vec<Elem>> = HashSet::from([start.to_vec()]);
        let mut queue = VecDeque::from([start.to_vec()]);
        while let Some(v) = queue.pop_front() {
            if sorted.find(&v).is_some() {
                class.insert(v.clone(), next);
            }
            for w in naive_neighbours(g, h, &auts, &v) {
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    class
}

#[test]
fn orbit_partition_matches_naive_search() {
    let cases = [
        ("D", 2, "0;2,2,2,2,2,2"),
        ("D", 4, "0;2,2,2,2,2,2"),
        ("D", 5, "0;2,2,2,2,2,2"),
        ("D", 6, "0;2,2,2,2,2,2"),
        ("D", 2, "0;2,2,2,2,2,2,2"),
        ("D", 3, "0;2,2,2,2,2,2,3"),
        ("D", 5, "0;2,2,2,2,2,2,5"),
        ("D", 2, "1;2,2,2,2"),
        ("D", 3, "1;2,2,2,2"),
        ("C", 4, "1;2,2,2,2"),
        ("C", 6, "1;2,2,2,2"),
        ("C", 8, "1;2,2,2,2"),
        ("C", 12, "0;2,2,3,4,6,12"),
    ];
    for (kind, n, s) in cases {
        let g = if kind == "D" {
            Group::dihedral(n)
        } else {
            Group::cyclic(n)
        }
        .unwrap();
        let sig: Signature = s.parse().unwrap();
        let naive = naive_classes(&g, &sig);
        let part = orbits(&g, &sig, OrbitOptions::default()).unwrap();
        let count = naive.values().collect::<HashSet<_>>().len();
        assert_eq!(part.report().orbit_count(), count, "{g} {sig}");
        // same partition, not only the same number of blocks
        let mut pairing: HashMap<usize, usize> = HashMap::new();
        for (v, &c) in &naive {
            let k = part
                .orbit_of(&riemann_actions::GeneratingVector::from_flat(
                    sig.h() as usize,
                    v.clone(),
                ))
                .unwrap();
            assert_eq!(*pairing.entry(c).or_insert(k), k, "{g} {sig}");
        }
    }
}
