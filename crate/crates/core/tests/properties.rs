use std::sync::OnceLock;

use proptest::prelude::*;
use riemann_actions::genvec::{enumerate_vectors, VectorTable};
use riemann_actions::mcg::{apply_aut, apply_move, Move};
use riemann_actions::repr::{factor_dims, quotient_decomposition, quotient_genus};
use riemann_actions::{is_surface_kernel, Elem, Group, Signature, Subgroup, Threads};

struct Case {
    group: Group,
    sig: Signature,
    vectors: VectorTable,
}

fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        [
            (Group::dihedral(5), "0;2,2,2,2,2,2"),
            (Group::dihedral(4), "0;2,2,2,2,2,2"),
            (Group::dihedral(2), "0;2,2,2,2,2,2,2"),
            (Group::dihedral(3), "0;2,2,2,2,2,2,3"),
            (Group::dihedral(6), "0;2,2,2,2,2,2,3"),
            (Group::dihedral(3), "1;2,2,2,2"),
            (Group::cyclic(6), "1;2,2,2,2"),
            (Group::cyclic(12), "0;2,2,3,4,6,12"),
        ]
        .into_iter()
        .map(|(g, s)| {
            let group = g.unwrap();
            let sig: Signature = s.parse().unwrap();
            let vectors = enumerate_vectors(&group, &sig, Threads::sequential()).vectors;
            assert!(!vectors.is_empty(), "{group} {sig}");
            Case {
                group,
                sig,
                vectors,
            }
        })
        .collect()
    })
}

fn pick(case: usize, vec: usize) -> (&'static Case, riemann_actions::GeneratingVector) {
    let c = &cases()[case % cases().len()];
    let v = c.vectors.vector(vec % c.vectors.len());
    (c, v)
}

fn valid(c: &Case, v: &riemann_actions::GeneratingVector) -> bool {
    // braids permute the periods, so validate against the vector's own orders
    let orders: Vec<u32> = v
        .elliptic()
        .iter()
        .map(|&x| c.group.element_order(x))
        .collect();
    Signature::new(c.sig.h(), orders.clone()).unwrap() == c.sig
        && riemann_actions::genvec::check_entries(&c.group, v.orbit_genus(), &orders, v.entries())
            .is_none()
}

fn conjugacy_class(g: &Group, x: Elem) -> Vec<Elem> {
    let mut cls: Vec<Elem> = g.elements().map(|y| g.conjugate(x, y)).collect();
    cls.sort_unstable();
    cls.dedup();
    cls
}

proptest! {
    #[test]
    fn moves_preserve_validity(case in 0usize..64, vec in 0usize..1_000_000, i in 1usize..8, n in -3i64..4) {
        let (c, v) = pick(case, vec);
        let l = c.sig.len();
        let mut moves = vec![Move::Braid(1 + i % (l - 1)), Move::BraidInv(1 + i % (l - 1))];
        if c.sig.h() == 1 {
            moves.extend([Move::A1(n), Move::A2(n), Move::C1(1 + i % l), Move::C2(1 + i % l)]);
        }
        for mv in moves {
            let w = apply_move(&c.group, &v, &mv).unwrap();
            prop_assert!(valid(c, &w), "{:?} broke {}", mv, v.render(&c.group));
        }
    }

    #[test]
    fn braid_then_inverse_is_identity(case in 0usize..64, vec in 0usize..1_000_000, i in 1usize..8) {
        let (c, v) = pick(case, vec);
        let i = 1 + i % (c.sig.len() - 1);
        let w = apply_move(&c.group, &v, &Move::Braid(i)).unwrap();
        prop_assert_eq!(apply_move(&c.group, &w, &Move::BraidInv(i)).unwrap(), v.clone());
        let w = apply_move(&c.group, &v, &Move::BraidInv(i)).unwrap();
        prop_assert_eq!(apply_move(&c.group, &w, &Move::Braid(i)).unwrap(), v);
    }

    #[test]
    fn automorphisms_commute_with_braids(case in 0usize..64, vec in 0usize..1_000_000, i in 1usize..8, a in 0usize..1000) {
        let (c, v) = pick(case, vec);
        let auts = c.group.automorphisms().unwrap();
        let w = &auts[a % auts.len()];
        let mv = Move::Braid(1 + i % (c.sig.len() - 1));
        let one = apply_move(&c.group, &apply_aut(&c.group, &v, w).unwrap(), &mv).unwrap();
        let two = apply_aut(&c.group, &apply_move(&c.group, &v, &mv).unwrap(), w).unwrap();
        prop_assert_eq!(one, two);
    }

    #[test]
    fn braids_preserve_class_multiset(case in 0usize..64, vec in 0usize..1_000_000, i in 1usize..8) {
        let (c, v) = pick(case, vec);
        let classes = |v: &riemann_actions::GeneratingVector| {
            let mut out: Vec<Vec<Elem>> = v.elliptic().iter().map(|&x| conjugacy_class(&c.group, x)).collect();
            out.sort();
            out
        };
        let w = apply_move(&c.group, &v, &Move::Braid(1 + i % (c.sig.len() - 1))).unwrap();
        prop_assert_eq!(classes(&v), classes(&w));
    }

    #[test]
    fn element_order_is_conjugation_invariant(n in 2u32..20, dihedral in any::<bool>(), x in 0u32..1000, y in 0u32..1000) {
        let g = if dihedral { Group::dihedral(n) } else { Group::cyclic(n) }.unwrap();
        let m = g.order() as u32;
        let (x, y) = (x % m, y % m);
        prop_assert_eq!(g.element_order(x), g.element_order(g.conjugate(x, y)));
        prop_assert_eq!(g.order() as u32 % g.element_order(x), 0);
    }

    #[test]
    fn generated_subgroups_have_dividing_order(n in 2u32..20, gens in proptest::collection::vec(0u32..1000, 0..3)) {
        let g = Group::dihedral(n).unwrap();
        let gens: Vec<Elem> = gens.into_iter().map(|x| x % g.order() as u32).collect();
        let h = Subgroup::generated(&g, &gens);
        prop_assert_eq!(g.order() % h.len(), 0);
        prop_assert!(h.contains(g.identity()));
        for &a in h.elements() {
            for &b in h.elements() {
                prop_assert!(h.contains(g.mul(a, g.inv(b))));
            }
        }
    }

    #[test]
    fn quotient_genus_matches_exponents(case in 0usize..64, vec in 0usize..1_000_000, gen in 0u32..1000) {
        let (c, v) = pick(case, vec);
        prop_assert!(is_surface_kernel(&c.group, &c.sig, v.hyperbolic(), v.elliptic()).unwrap().is_none());
        let rep = factor_dims(&c.group, &c.sig, &v).unwrap();
        let h = Subgroup::generated(&c.group, &[gen % c.group.order() as u32]);
        let row = quotient_decomposition(&c.group, &rep, &h, "H").unwrap();
        prop_assert_eq!(quotient_genus(&c.group, &v, &h).unwrap(), row.dim);
    }
}
