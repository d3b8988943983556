//! Subgroup lattice enumeration and conjugacy classes of subgroups.
//!
//! Enumeration works bottom up: every subgroup is a join of cyclic subgroups,
//! so starting from the cyclic ones and repeatedly joining each class
//! representative with each cyclic subgroup reaches every class. Conjugates of
//! a new subgroup are registered as soon as it is found, which is what lets the
//! join step look at representatives only.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::subgroup::Subgroup;

pub const DEFAULT_MAX_SUBGROUPS: usize = 100_000;

#[derive(Clone, Copy, Debug)]
pub struct LatticeOptions {
    pub max_subgroups: usize,
}

impl Default for LatticeOptions {
    fn default() -> Self {
        LatticeOptions { max_subgroups: DEFAULT_MAX_SUBGROUPS }
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Lexicographically least conjugate.
    pub representative: Subgroup,
    /// All conjugates in ascending order; the representative comes first.
    pub conjugates: Vec<Subgroup>,
    /// `|G : N_G(representative)|`.
    pub normalizer_index: usize,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order
    }

    pub fn is_cyclic(&self) -> bool {
        self.representative.is_cyclic
    }

    /// Short label such as `C4*3` (cyclic of order 4, three conjugates) or
    /// `N4` (noncyclic of order 4, normal).
    pub fn label(&self) -> String {
        let kind = if self.is_cyclic() { 'C' } else { 'N' };
        match self.normalizer_index {
            1 => format!("{kind}{}", self.order()),
            k => format!("{kind}{}*{k}", self.order()),
        }
    }
}

/// All subgroups of a group, grouped into conjugacy classes sorted by
/// `(order, representative)`. Class 0 is the trivial subgroup and the last
/// class is the whole group.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group_order: usize,
    classes: Vec<SubgroupClass>,
    class_of: HashMap<ElemSet, usize>,
}

impl SubgroupLattice {
    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &SubgroupClass {
        &self.classes[i]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Class index of a subgroup given by its member set.
    pub fn class_of(&self, members: &ElemSet) -> Option<usize> {
        self.class_of.get(members).copied()
    }

    pub fn subgroup_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn subgroups(&self) -> impl Iterator<Item = (usize, &Subgroup)> {
        self.classes.iter().enumerate().flat_map(|(i, c)| c.conjugates.iter().map(move |s| (i, s)))
    }

    /// Whether some conjugate of class `u` lies in the representative of class `v`.
    pub fn is_subconjugate(&self, u: usize, v: usize) -> bool {
        let big = &self.classes[v].representative;
        self.classes[u].order() <= big.order
            && big.order.is_multiple_of(self.classes[u].order())
            && self.classes[u].conjugates.iter().any(|s| s.is_subgroup_of(big))
    }

    pub fn check_class_index(&self, i: usize) -> Result<()> {
        if i < self.classes.len() {
            Ok(())
        } else {
            Err(Error::BadClass(i))
        }
    }

    /// Serializable summary keyed by the spec string.
    pub fn to_cache(&self, spec: &str) -> LatticeCache {
        LatticeCache {
            version: LatticeCache::VERSION,
            spec: spec.to_string(),
            order: self.group_order,
            classes: self
                .classes
                .iter()
                .map(|c| CachedClass {
                    rep_bits_hex: c.representative.members.to_hex(),
                    order: c.order(),
                    normalizer_index: c.normalizer_index,
                    conjugate_count: c.conjugates.len(),
                })
                .collect(),
        }
    }

    /// Rebuilds a lattice from cached representatives, recomputing conjugates
    /// and checking them against the cached counts.
    pub fn from_cache(group: &GroupTable, cache: &LatticeCache) -> Result<SubgroupLattice> {
        let mismatch = |m: String| Error::CacheMismatch(m);
        if cache.version != LatticeCache::VERSION {
            return Err(mismatch(format!("unsupported version {}", cache.version)));
        }
        if cache.order != group.order() {
            return Err(mismatch(format!("cached order {} != {}", cache.order, group.order())));
        }
        let mut classes = Vec::with_capacity(cache.classes.len());
        for c in &cache.classes {
            let bits = ElemSet::from_hex(&c.rep_bits_hex).ok_or_else(|| mismatch("bad hex".into()))?;
            let rep = Subgroup::try_from_members(group, bits)?;
            let class = make_class(group, rep);
            if class.representative != rep
                || rep.order != c.order
                || class.conjugates.len() != c.conjugate_count
                || class.normalizer_index != c.normalizer_index
            {
                return Err(mismatch(format!("class {} does not match", c.rep_bits_hex)));
            }
            classes.push(class);
        }
        let lattice = finish(group.order(), classes);
        if lattice.classes.len() != cache.classes.len() || lattice.classes.iter().map(|c| c.representative.members).ne(cache.classes.iter().map(|c| ElemSet::from_hex(&c.rep_bits_hex).unwrap())) {
            return Err(mismatch("class list is not in canonical order or has duplicates".into()));
        }
        let total: usize = lattice.classes.iter().map(|c| c.conjugates.len()).sum();
        if total != lattice.class_of.len() {
            return Err(mismatch("classes overlap".into()));
        }
        Ok(lattice)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedClass {
    pub rep_bits_hex: String,
    pub order: usize,
    pub normalizer_index: usize,
    pub conjugate_count: usize,
}

/// On-disk lattice summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeCache {
    pub version: u32,
    pub spec: String,
    pub order: usize,
    pub classes: Vec<CachedClass>,
}

impl LatticeCache {
    pub const VERSION: u32 = 1;
}

fn make_class(group: &GroupTable, sub: Subgroup) -> SubgroupClass {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut conjugates = Vec::new();
    for g in 0..group.order() {
        let c = group.conjugate_set(&sub.members, g);
        if seen.insert(c) {
            conjugates.push(Subgroup { members: c, ..sub });
        }
    }
    conjugates.sort_by_key(|a| a.members);
    SubgroupClass { representative: conjugates[0], normalizer_index: conjugates.len(), conjugates }
}

fn finish(group_order: usize, mut classes: Vec<SubgroupClass>) -> SubgroupLattice {
    classes.sort_by_key(|a| (a.order(), a.representative.members));
    let mut class_of = HashMap::new();
    for (i, c) in classes.iter().enumerate() {
        for s in &c.conjugates {
            class_of.insert(s.members, i);
        }
    }
    SubgroupLattice { group_order, classes, class_of }
}

pub fn enumerate_subgroups(group: &GroupTable) -> Result<SubgroupLattice> {
    enumerate_subgroups_with(group, LatticeOptions::default())
}

pub fn enumerate_subgroups_with(group: &GroupTable, opts: LatticeOptions) -> Result<SubgroupLattice> {
    // one generator per cyclic subgroup
    let mut cyclic_gens: Vec<(usize, ElemSet)> = Vec::new();
    let mut cyclic_seen = HashSet::new();
    for g in 0..group.order() {
        let s = group.closure(&[g]);
        if cyclic_seen.insert(s) {
            cyclic_gens.push((g, s));
        }
    }

    let mut found: HashSet<ElemSet> = HashSet::new();
    let mut classes: Vec<SubgroupClass> = Vec::new();
    let mut work: Vec<(Vec<usize>, ElemSet)> = Vec::new();

    let register = |members: ElemSet,
                        gens: Vec<usize>,
                        found: &mut HashSet<ElemSet>,
                        classes: &mut Vec<SubgroupClass>,
                        work: &mut Vec<(Vec<usize>, ElemSet)>|
     -> Result<()> {
        let class = make_class(group, Subgroup::from_members(group, members));
        found.extend(class.conjugates.iter().map(|s| s.members));
        if found.len() > opts.max_subgroups {
            return Err(Error::TooManySubgroups(opts.max_subgroups));
        }
        classes.push(class);
        work.push((gens, members));
        Ok(())
    };

    for &(g, s) in &cyclic_gens {
        if !found.contains(&s) {
            let gens = if g == 0 { vec![] } else { vec![g] };
            register(s, gens, &mut found, &mut classes, &mut work)?;
        }
    }
    while let Some((gens, members)) = work.pop() {
        for &(c, cs) in &cyclic_gens {
            if cs.is_subset(&members) {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.push(c);
            let joined = group.closure(&joined_gens);
            if !found.contains(&joined) {
                register(joined, joined_gens, &mut found, &mut classes, &mut work)?;
            }
        }
    }
    Ok(finish(group.order(), classes))
}
