use super::{Elem, Group};
use crate::error::{Error, Result};

/// A subgroup stored as a sorted element list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<Elem>,
}

impl Subgroup {
    pub fn generated(group: &Group, gens: &[Elem]) -> Subgroup {
        Subgroup {
            elements: group.subgroup_generated(gens),
        }
    }

    pub fn whole(group: &Group) -> Subgroup {
        Subgroup {
            elements: group.elements().collect(),
        }
    }

    pub fn trivial(group: &Group) -> Subgroup {
        Subgroup {
            elements: vec![group.identity()],
        }
    }

    /// Accepts an arbitrary element set after checking closure.
    pub fn from_elements(group: &Group, mut elements: Vec<Elem>) -> Result<Subgroup> {
        elements.sort_unstable();
        elements.dedup();
        if elements.binary_search(&group.identity()).is_err() {
            return Err(Error::Shape("subgroup must contain the identity".into()));
        }
        for &a in &elements {
            if elements.binary_search(&group.inv(a)).is_err() {
                return Err(Error::Shape(format!("not closed under inverse at {a}")));
            }
            for &b in &elements {
                if elements.binary_search(&group.mul(a, b)).is_err() {
                    return Err(Error::Shape(format!(
                        "not closed under product at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Subgroup { elements })
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn index_in(&self, group: &Group) -> usize {
        group.order() / self.len()
    }
}
