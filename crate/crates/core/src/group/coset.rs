use super::{Elem, Group, Subgroup};

/// Left cosets `gH`, numbered in order of their least element index.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    coset_of: Vec<u32>,
    representatives: Vec<Elem>,
}

impl CosetSpace {
    pub fn new(group: &Group, subgroup: &Subgroup) -> CosetSpace {
        const UNSET: u32 = u32::MAX;
        let mut coset_of = vec![UNSET; group.order()];
        let mut representatives = Vec::new();
        for g in group.elements() {
            if coset_of[g as usize] != UNSET {
                continue;
            }
            let label = representatives.len() as u32;
            representatives.push(g);
            for &h in subgroup.elements() {
                coset_of[group.mul(g, h) as usize] = label;
            }
        }
        CosetSpace {
            coset_of,
            representatives,
        }
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn coset_of(&self, g: Elem) -> usize {
        self.coset_of[g as usize] as usize
    }

    /// The permutation `c -> x c` of the cosets.
    pub fn action(&self, group: &Group, x: Elem) -> Vec<usize> {
        self.representatives
            .iter()
            .map(|&g| self.coset_of(group.mul(x, g)))
            .collect()
    }

    /// Cycle lengths of `x` acting on the cosets.
    pub fn cycle_type(&self, group: &Group, x: Elem) -> Vec<usize> {
        let perm = self.action(group, x);
        let mut seen = vec![false; perm.len()];
        let mut cycles = Vec::new();
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                c = perm[c];
                len += 1;
            }
            cycles.push(len);
        }
        cycles
    }
}

/// The permutation of cosets induced by `x` (see [`CosetSpace::action`]).
pub fn coset_action(group: &Group, subgroup: &Subgroup, x: Elem) -> Vec<usize> {
    CosetSpace::new(group, subgroup).action(group, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_cycles_reflection_cosets() {
        let d5 = Group::dihedral(5).unwrap();
        let s = d5.reflection(0).unwrap();
        let r = d5.rotation(1).unwrap();
        let h = Subgroup::generated(&d5, &[s]);
        let space = CosetSpace::new(&d5, &h);
        assert_eq!(space.len(), 5);
        assert_eq!(space.cycle_type(&d5, r), vec![5]);
        // s fixes its own coset and swaps the other four in pairs
        let mut ct = space.cycle_type(&d5, s);
        ct.sort();
        assert_eq!(ct, vec![1, 2, 2]);
    }

    #[test]
    fn degenerate_subgroups() {
        let d3 = Group::dihedral(3).unwrap();
        let whole = Subgroup::whole(&d3);
        for x in d3.elements() {
            assert_eq!(coset_action(&d3, &whole, x), vec![0]);
        }
        let trivial = Subgroup::trivial(&d3);
        assert_eq!(
            coset_action(&d3, &trivial, d3.identity()),
            (0..6).collect::<Vec<_>>()
        );
    }
}
