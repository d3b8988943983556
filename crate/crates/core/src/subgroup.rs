//! Subgroups of a [`GroupTable`] and elementwise queries on them.

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;

/// A subgroup stored as its member set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subgroup {
    #[serde(serialize_with = "hex_bits")]
    pub members: ElemSet,
    pub order: usize,
    pub is_cyclic: bool,
}

fn hex_bits<S: serde::Serializer>(set: &ElemSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&set.to_hex())
}

impl Subgroup {
    /// Wraps a member set already known to be a subgroup.
    pub fn from_members(group: &GroupTable, members: ElemSet) -> Subgroup {
        let order = members.len();
        let is_cyclic = members.iter().any(|g| group.element_order(g) == order);
        Subgroup { members, order, is_cyclic }
    }

    /// Checks closure before wrapping.
    pub fn try_from_members(group: &GroupTable, members: ElemSet) -> Result<Subgroup> {
        if !members.contains(0) || members.iter().any(|g| g >= group.order()) {
            return Err(Error::NotASubgroup);
        }
        for a in members.iter() {
            if !members.contains(group.inv(a)) || members.iter().any(|b| !members.contains(group.mul(a, b))) {
                return Err(Error::NotASubgroup);
            }
        }
        Ok(Self::from_members(group, members))
    }

    pub fn trivial() -> Subgroup {
        Subgroup { members: ElemSet::singleton(0), order: 1, is_cyclic: true }
    }

    pub fn whole(group: &GroupTable) -> Subgroup {
        Self::from_members(group, group.elements())
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    #[inline]
    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        self.members.iter()
    }

    pub fn conjugate(&self, group: &GroupTable, g: usize) -> Subgroup {
        Subgroup { members: group.conjugate_set(&self.members, g), ..*self }
    }
}

/// Least subgroup containing `seed`.
pub fn generated_subgroup(group: &GroupTable, seed: &[usize]) -> Subgroup {
    Subgroup::from_members(group, group.closure(seed))
}

/// `C_G(U)`: elements commuting with every element of `u`.
pub fn centralizer(group: &GroupTable, u: &Subgroup) -> Subgroup {
    let members = (0..group.order())
        .filter(|&w| u.elements().all(|x| group.mul(w, x) == group.mul(x, w)))
        .collect();
    Subgroup::from_members(group, members)
}

pub fn center(group: &GroupTable) -> Subgroup {
    centralizer(group, &Subgroup::whole(group))
}

/// `[S, T]`, the subgroup generated by all commutators `[s, t]`.
pub fn commutator_closure(group: &GroupTable, s: &Subgroup, t: &Subgroup) -> Subgroup {
    let mut gens = ElemSet::singleton(0);
    for a in s.elements() {
        for b in t.elements() {
            gens.insert(group.commutator(a, b));
        }
    }
    let gens: Vec<usize> = gens.iter().collect();
    generated_subgroup(group, &gens)
}

pub fn derived_subgroup(group: &GroupTable) -> Subgroup {
    let g = Subgroup::whole(group);
    commutator_closure(group, &g, &g)
}

/// Whether `u` is normalized by every element of `v`. Requires `u <= v`.
pub fn is_normal_in(group: &GroupTable, u: &Subgroup, v: &Subgroup) -> Result<bool> {
    if !u.is_subgroup_of(v) {
        return Err(Error::NotContained);
    }
    Ok(normalizes(group, v.elements(), u))
}

pub(crate) fn normalizes(group: &GroupTable, mut by: impl Iterator<Item = usize>, u: &Subgroup) -> bool {
    by.all(|g| u.elements().all(|x| u.contains(group.conjugate(x, g))))
}

/// Left coset representatives of `u` in `v`, the least element index of each
/// coset, in ascending order.
pub fn cosets(group: &GroupTable, v: &Subgroup, u: &Subgroup) -> Result<Vec<usize>> {
    if !u.is_subgroup_of(v) {
        return Err(Error::NotContained);
    }
    Ok(coset_reps(group, &v.members, &u.members))
}

pub(crate) fn coset_reps(group: &GroupTable, v: &ElemSet, u: &ElemSet) -> Vec<usize> {
    let mut left = *v;
    let mut reps = Vec::with_capacity(v.len() / u.len().max(1));
    while let Some(r) = left.first() {
        reps.push(r);
        for x in u.iter() {
            left.remove(group.mul(r, x));
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::{build_group, parse_group_spec};

    fn build(s: &str) -> GroupTable {
        build_group(&parse_group_spec(s).unwrap()).unwrap()
    }

    fn sub(g: &GroupTable, gens: &[usize]) -> Subgroup {
        generated_subgroup(g, gens)
    }

    // In Q8 (index = i + 4j for g^i h^j): i -> 1, j -> 4, -1 -> 2.
    #[test]
    fn generated_examples() {
        let q8 = build("Q8");
        assert_eq!(sub(&q8, &[]).order, 1);
        let whole = sub(&q8, &[1, 4]);
        assert_eq!(whole.order, 8);
        assert!(!whole.is_cyclic);
        let c8 = build("C8");
        let s = sub(&c8, &[2]);
        assert_eq!(s.order, 4);
        assert!(s.is_cyclic);
    }

    #[test]
    fn centralizer_examples() {
        let q8 = build("Q8");
        let z = center(&q8);
        assert_eq!(z.order, 2);
        assert!(z.contains(2));
        let s3 = build("S3");
        assert_eq!(center(&s3).order, 1);
        let ab = build("C2xC6");
        let u = sub(&ab, &[3]);
        assert_eq!(centralizer(&ab, &u).order, 12);
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(derived_subgroup(&build("C4xC2")).order, 1);
        let q8 = build("Q8");
        assert_eq!(derived_subgroup(&q8), center(&q8));
        let s3 = build("S3");
        let d = derived_subgroup(&s3);
        assert_eq!(d.order, 3);
        assert!(d.is_cyclic);
    }

    #[test]
    fn normality_examples() {
        let s3 = build("S3");
        let whole = Subgroup::whole(&s3);
        let transposition = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let three_cycle = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
        assert!(!is_normal_in(&s3, &sub(&s3, &[transposition]), &whole).unwrap());
        assert!(is_normal_in(&s3, &sub(&s3, &[three_cycle]), &whole).unwrap());
        let ab = build("C6");
        assert!(is_normal_in(&ab, &sub(&ab, &[2]), &Subgroup::whole(&ab)).unwrap());
        assert_eq!(
            is_normal_in(&s3, &whole, &sub(&s3, &[three_cycle])),
            Err(Error::NotContained)
        );
    }

    #[test]
    fn coset_examples() {
        let s3 = build("S3");
        let whole = Subgroup::whole(&s3);
        assert_eq!(cosets(&s3, &whole, &whole).unwrap(), vec![0]);
        let three_cycle = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
        assert_eq!(cosets(&s3, &whole, &sub(&s3, &[three_cycle])).unwrap().len(), 2);
        let q8 = build("Q8");
        let reps = cosets(&q8, &Subgroup::whole(&q8), &center(&q8)).unwrap();
        assert_eq!(reps.len(), 4);
        let mut covered = ElemSet::empty();
        for r in reps {
            for z in center(&q8).elements() {
                assert!(covered.insert(q8.mul(r, z)));
            }
        }
        assert_eq!(covered.len(), 8);
        assert!(cosets(&q8, &center(&q8), &Subgroup::whole(&q8)).is_err());
    }

    #[test]
    fn try_from_members_checks_closure() {
        let c6 = build("C6");
        assert!(Subgroup::try_from_members(&c6, [0, 3].into_iter().collect()).is_ok());
        assert!(Subgroup::try_from_members(&c6, [0, 1].into_iter().collect()).is_err());
        assert!(Subgroup::try_from_members(&c6, [2, 4].into_iter().collect()).is_err());
    }
}
