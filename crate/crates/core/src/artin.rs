//! Artin exponents: the least `n` with `n * e_F` in the Burnside ring, where
//! `e_F` is the ghost vector supported on a family `F` of subgroup classes.
//!
//! Two independent routes are provided. [`artin_exponent_congruence`] reads
//! the exponent off the coset-counting congruences over all pairs `U ⊴ V` of
//! prime-power index as an lcm. [`artin_exponent_marks`] scans the divisors of
//! `|G|` and runs an exact triangular solve against the table of marks.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::burnside::{build_mark_table, solve_membership, GhostVector, MarkTable};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::lattice::{enumerate_subgroups, SubgroupLattice};
use crate::numtheory::{divisors, factorize, gcd, lcm, p_part, prime_power};
use crate::subgroup::{center, coset_reps, is_normal_in, normalizes, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    AllCyclic,
    /// Class indices of the lattice; classes are already conjugation closed.
    ExplicitClasses(BTreeSet<usize>),
}

impl Family {
    pub fn validate(&self, lattice: &SubgroupLattice) -> Result<()> {
        match self {
            Family::AllCyclic => Ok(()),
            Family::ExplicitClasses(set) => set.iter().try_for_each(|&i| lattice.check_class_index(i)),
        }
    }

    #[inline]
    pub fn contains(&self, lattice: &SubgroupLattice, class: usize) -> bool {
        match self {
            Family::AllCyclic => lattice.class(class).is_cyclic(),
            Family::ExplicitClasses(set) => set.contains(&class),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::AllCyclic => write!(f, "cyclic"),
            Family::ExplicitClasses(set) => {
                let parts: Vec<String> = set.iter().map(ToString::to_string).collect();
                write!(f, "classes:{}", parts.join(","))
            }
        }
    }
}

/// `e_F`: one on classes in the family, zero elsewhere.
pub fn family_vector(lattice: &SubgroupLattice, family: &Family) -> Result<GhostVector> {
    family.validate(lattice)?;
    Ok(GhostVector((0..lattice.len()).map(|c| family.contains(lattice, c) as i64).collect()))
}

/// `<v, U>` for `U` normal in a subgroup containing `v`: the union of the cosets `v^k U`.
fn join_normal(group: &GroupTable, v: usize, u: &ElemSet) -> ElemSet {
    let mut out = ElemSet::empty();
    let mut x = 0;
    for _ in 0..group.element_order(v) {
        for y in u.iter() {
            out.insert(group.mul(x, y));
        }
        x = group.mul(x, v);
    }
    out
}

/// Number of cosets `vU` in `V/U` with `<v, U>` in the family.
pub fn cyclic_count(
    group: &GroupTable,
    lattice: &SubgroupLattice,
    u: &Subgroup,
    v: &Subgroup,
    family: &Family,
) -> Result<usize> {
    family.validate(lattice)?;
    if !is_normal_in(group, u, v)? {
        return Err(Error::NotNormal);
    }
    if *family == Family::AllCyclic && !u.is_cyclic {
        return Ok(0);
    }
    let mut count = 0;
    for r in coset_reps(group, &v.members, &u.members) {
        let w = join_normal(group, r, &u.members);
        let class = lattice.class_of(&w).ok_or(Error::NotASubgroup)?;
        if family.contains(lattice, class) {
            count += 1;
        }
    }
    Ok(count)
}

/// Whether `W/N` is cyclic, for `N` normal in `W`.
fn quotient_is_cyclic(group: &GroupTable, w: &ElemSet, n: &ElemSet) -> bool {
    let target = w.len() / n.len();
    w.iter().any(|x| {
        let mut y = x;
        let mut k = 1;
        while !n.contains(y) {
            y = group.mul(y, x);
            k += 1;
        }
        k == target
    })
}

/// Cyclic count computed in `V/U^p`, where `U^p` is the index-`p` subgroup of
/// a central cyclic `p`-subgroup `U`. `None` when the hypotheses fail.
fn reduced_cyclic_count(group: &GroupTable, u: &Subgroup, v: &Subgroup) -> Option<usize> {
    let (p, _) = prime_power(u.order as u64)?;
    let (q, _) = prime_power(v.order as u64)?;
    if p != q || !u.is_cyclic || !u.elements().all(|x| v.elements().all(|y| group.mul(x, y) == group.mul(y, x))) {
        return None;
    }
    let gen = u.elements().find(|&x| group.element_order(x) == u.order)?;
    let u_p = group.closure(&[group.pow(gen, p as usize)]);
    Some(
        coset_reps(group, &v.members, &u.members)
            .into_iter()
            .filter(|&r| quotient_is_cyclic(group, &join_normal(group, r, &u.members), &u_p))
            .count(),
    )
}

/// One congruence: `(V:U)` must divide `n * count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruencePair {
    pub u_class: usize,
    pub u: Subgroup,
    pub v_class: usize,
    pub v: Subgroup,
    pub index: u64,
    pub prime: u64,
    pub count: u64,
    /// `index / gcd(index, count)`; the smallest admissible `n` for this pair.
    pub constraint: u64,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CongruenceOptions {
    /// Recompute counts for central cyclic `U` in `V/U^p` and cross-check.
    pub central_reduction: bool,
}

#[derive(Clone, Debug)]
struct PairSkeleton {
    u_class: usize,
    u: Subgroup,
    v_class: usize,
    index: u64,
    prime: u64,
    coset_classes: Vec<usize>,
    reduced_count: Option<usize>,
}

/// Pairs `U ⊴ V` of prime-power index with the class of `<v, U>` recorded for
/// each coset, so counts for many families come without regenerating subgroups.
///
/// `V` runs over class representatives only: conjugating a pair conjugates
/// every `<v, U>`, leaving the congruence unchanged. `U` runs over all
/// subgroups normal in that representative.
#[derive(Clone, Debug)]
pub struct CongruenceSystem {
    skeletons: Vec<PairSkeleton>,
}

impl CongruenceSystem {
    pub fn new(group: &GroupTable, lattice: &SubgroupLattice, opts: CongruenceOptions) -> Result<Self> {
        let mut skeletons = Vec::new();
        for (v_class, class) in lattice.classes().iter().enumerate() {
            let v = class.representative;
            for (u_class, u) in lattice.subgroups() {
                if u.order >= v.order || v.order % u.order != 0 || !u.is_subgroup_of(&v) {
                    continue;
                }
                let index = (v.order / u.order) as u64;
                let Some((prime, _)) = prime_power(index) else { continue };
                if !normalizes(group, v.elements(), u) {
                    continue;
                }
                let coset_classes = coset_reps(group, &v.members, &u.members)
                    .into_iter()
                    .map(|r| lattice.class_of(&join_normal(group, r, &u.members)).ok_or(Error::NotASubgroup))
                    .collect::<Result<Vec<_>>>()?;
                let reduced_count =
                    if opts.central_reduction { reduced_cyclic_count(group, u, &v) } else { None };
                skeletons.push(PairSkeleton { u_class, u: *u, v_class, index, prime, coset_classes, reduced_count });
            }
        }
        Ok(CongruenceSystem { skeletons })
    }

    pub fn len(&self) -> usize {
        self.skeletons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.skeletons.is_empty()
    }

    pub fn pairs(&self, lattice: &SubgroupLattice, family: &Family) -> Result<Vec<CongruencePair>> {
        family.validate(lattice)?;
        self.skeletons
            .iter()
            .map(|s| {
                let count = s.coset_classes.iter().filter(|&&c| family.contains(lattice, c)).count();
                if let (Family::AllCyclic, Some(reduced)) = (family, s.reduced_count) {
                    if reduced != count {
                        return Err(Error::Precondition(format!(
                            "central reduction gave {reduced}, direct count {count} (classes {} in {})",
                            s.u_class, s.v_class
                        )));
                    }
                }
                let count = count as u64;
                Ok(CongruencePair {
                    u_class: s.u_class,
                    u: s.u,
                    v_class: s.v_class,
                    v: lattice.class(s.v_class).representative,
                    index: s.index,
                    prime: s.prime,
                    count,
                    constraint: s.index / gcd(s.index, count),
                })
            })
            .collect()
    }

    pub fn exponent(&self, lattice: &SubgroupLattice, family: &Family) -> Result<u64> {
        Ok(exponent_from_pairs(&self.pairs(lattice, family)?))
    }
}

impl CongruenceSystem {
    /// Index of the first pair whose coset sum of `ghost` is not divisible by
    /// `(V:U)`, or `None` when every congruence holds.
    pub fn first_violation(&self, ghost: &GhostVector) -> Option<usize> {
        self.skeletons.iter().position(|s| {
            let sum: i128 = s.coset_classes.iter().map(|&c| ghost.0[c] as i128).sum();
            sum.rem_euclid(s.index as i128) != 0
        })
    }
}

pub fn exponent_from_pairs(pairs: &[CongruencePair]) -> u64 {
    pairs.iter().fold(1, |acc, p| lcm(acc, p.constraint))
}

pub fn congruence_pairs(group: &GroupTable, lattice: &SubgroupLattice, family: &Family) -> Result<Vec<CongruencePair>> {
    CongruenceSystem::new(group, lattice, CongruenceOptions::default())?.pairs(lattice, family)
}

pub fn artin_exponent_congruence(group: &GroupTable, lattice: &SubgroupLattice, family: &Family) -> Result<u64> {
    CongruenceSystem::new(group, lattice, CongruenceOptions::default())?.exponent(lattice, family)
}

/// Smallest divisor `n` of `|G|` with `n * e_F` integral over the transitive basis.
pub fn artin_exponent_marks(
    group: &GroupTable,
    lattice: &SubgroupLattice,
    table: &MarkTable,
    family: &Family,
) -> Result<u64> {
    let e = family_vector(lattice, family)?;
    for n in divisors(group.order() as u64) {
        let scaled = GhostVector(e.0.iter().map(|&x| x * n as i64).collect());
        if solve_membership(table, &scaled)?.is_integral() {
            return Ok(n);
        }
    }
    Err(Error::Precondition("no divisor of the group order clears the family vector".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TwoGroupKind {
    #[serde(rename = "Q")]
    Quaternion,
    #[serde(rename = "D")]
    Dihedral,
    #[serde(rename = "SD")]
    Semidihedral,
    Other,
}

/// Looks for `g` of order `m = |G|/2 >= 4` and `h` outside `<g>` with
///
/// * quaternion: `h^2 = g^(m/2)`, `h g h^-1 = g^-1`
/// * dihedral: `h^2 = 1`, `h g h^-1 = g^-1`
/// * semidihedral (`m >= 8`): `h^2 = 1`, `h g h^-1 = g^(m/2 - 1)`
pub fn recognize_2group(group: &GroupTable) -> Result<TwoGroupKind> {
    let n = group.order();
    if !n.is_power_of_two() {
        return Err(Error::Precondition(format!("order {n} is not a power of 2")));
    }
    let m = n / 2;
    if m < 4 {
        return Ok(TwoGroupKind::Other);
    }
    for g in (0..n).filter(|&g| group.element_order(g) == m) {
        let cyc = group.closure(&[g]);
        let g_inv = group.inv(g);
        let g_half = group.pow(g, m / 2);
        let g_sd = group.pow(g, m / 2 - 1);
        for h in (0..n).filter(|&h| !cyc.contains(h)) {
            let sq = group.mul(h, h);
            let conj = group.mul(group.mul(h, g), group.inv(h));
            if conj == g_inv && sq == g_half {
                return Ok(TwoGroupKind::Quaternion);
            }
            if conj == g_inv && sq == 0 {
                return Ok(TwoGroupKind::Dihedral);
            }
            if m >= 8 && conj == g_sd && sq == 0 {
                return Ok(TwoGroupKind::Semidihedral);
            }
        }
    }
    Ok(TwoGroupKind::Other)
}

/// `{h in H : [h, x] in U for all x in H}`, verified to be a subgroup.
pub fn relative_commutator_kernel(group: &GroupTable, h: &Subgroup, u: &Subgroup) -> Result<Subgroup> {
    let members = h.elements().filter(|&a| h.elements().all(|b| u.contains(group.commutator(a, b)))).collect();
    Subgroup::try_from_members(group, members)
}

/// Counting sets for a `p`-subgroup `H` and a cyclic normal `U <= H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CSets {
    pub prime: u64,
    /// Cyclic `V <= H` containing `U` with index `p`.
    pub c: Vec<Subgroup>,
    /// Those members of `c` normal in `H`.
    pub c_prime: Vec<Subgroup>,
    /// `{h in H : [h, H] <= U}`.
    pub h_prime: Subgroup,
}

pub fn count_c_sets(group: &GroupTable, h: &Subgroup, u: &Subgroup) -> Result<CSets> {
    let (prime, _) = prime_power(h.order as u64)
        .ok_or_else(|| Error::Precondition(format!("order {} is not a prime power", h.order)))?;
    if !u.is_cyclic {
        return Err(Error::Precondition("U must be cyclic".into()));
    }
    if !is_normal_in(group, u, h)? {
        return Err(Error::NotNormal);
    }
    let target = u.order * prime as usize;
    let mut c: Vec<Subgroup> = Vec::new();
    for x in h.elements().filter(|&x| group.element_order(x) == target) {
        let s = group.closure(&[x]);
        if u.members.is_subset(&s) && !c.iter().any(|v| v.members == s) {
            c.push(Subgroup::from_members(group, s));
        }
    }
    c.sort_by_key(|a| a.members);
    let c_prime = c.iter().filter(|v| normalizes(group, h.elements(), v)).copied().collect();
    let h_prime = relative_commutator_kernel(group, h, u)?;
    Ok(CSets { prime, c, c_prime, h_prime })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    #[serde(rename = "cyclic")]
    Cyclic,
    #[serde(rename = "odd p-group")]
    OddPGroup,
    #[serde(rename = "2-group")]
    TwoGroup,
    #[serde(rename = "Q or D")]
    QuaternionOrDihedral,
    #[serde(rename = "SD")]
    Semidihedral,
    #[serde(rename = "not a p-group")]
    NotPGroup,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("branch serializes");
        write!(f, "{}", s.as_str().unwrap_or_default())
    }
}

/// A competing closed-form value reported next to the primary prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Alternative {
    pub rule: String,
    pub value: u64,
}

/// The two candidate "G'" subgroups relative to the order-2 center `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutatorCandidates {
    /// `{g : [g, G] <= Z}`.
    pub kernel_order: usize,
    pub kernel_cyclic: bool,
    /// `{g : [g, Z] <= Z}`, which is all of `G` for central `Z`.
    pub literal_order: usize,
    pub literal_cyclic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub value: Option<u64>,
    pub branch: Branch,
    pub two_group_kind: Option<TwoGroupKind>,
    pub alternatives: Vec<Alternative>,
    pub commutator_candidates: Option<CommutatorCandidates>,
}

impl Prediction {
    /// Every value this prediction puts forward, primary first.
    pub fn candidates(&self) -> impl Iterator<Item = u64> + '_ {
        self.value.into_iter().chain(self.alternatives.iter().map(|a| a.value))
    }
}

/// Closed-form exponent for `p`-groups; declines (value `None`) otherwise.
///
/// Cyclic groups give 1, noncyclic groups of order `p^a` give `p^(a-1)`,
/// except that dihedral and quaternion 2-groups give 2. Semidihedral groups
/// give 4 or 2 according to whether `{g : [g, G] <= Z(G)}` is cyclic. Where
/// these rules overlap with a different value the competing one is listed in
/// `alternatives`.
pub fn closed_form_predictor(group: &GroupTable, lattice: &SubgroupLattice) -> Result<Prediction> {
    let whole = lattice.class(lattice.len() - 1);
    let mut pred =
        Prediction { value: None, branch: Branch::NotPGroup, two_group_kind: None, alternatives: vec![], commutator_candidates: None };
    if whole.is_cyclic() {
        pred.value = Some(1);
        pred.branch = Branch::Cyclic;
        return Ok(pred);
    }
    let Some((p, alpha)) = prime_power(group.order() as u64) else {
        return Ok(pred);
    };
    let index_p = p.pow(alpha - 1);
    if p != 2 {
        pred.value = Some(index_p);
        pred.branch = Branch::OddPGroup;
        return Ok(pred);
    }
    let kind = recognize_2group(group)?;
    pred.two_group_kind = Some(kind);
    if kind == TwoGroupKind::Other {
        pred.value = Some(index_p);
        pred.branch = Branch::TwoGroup;
        return Ok(pred);
    }

    let z = center(group);
    let whole_sub = Subgroup::whole(group);
    let kernel = relative_commutator_kernel(group, &whole_sub, &z)?;
    let literal: ElemSet = (0..group.order()).filter(|&g| z.elements().all(|x| z.contains(group.commutator(g, x)))).collect();
    let literal = Subgroup::try_from_members(group, literal)?;
    pred.commutator_candidates = Some(CommutatorCandidates {
        kernel_order: kernel.order,
        kernel_cyclic: kernel.is_cyclic,
        literal_order: literal.order,
        literal_cyclic: literal.is_cyclic,
    });
    let kernel_rule = if kernel.is_cyclic { 4 } else { 2 };
    let literal_rule = if literal.is_cyclic { 4 } else { 2 };
    match kind {
        TwoGroupKind::Quaternion | TwoGroupKind::Dihedral => {
            pred.value = Some(2);
            pred.branch = Branch::QuaternionOrDihedral;
            pred.alternatives.push(Alternative { rule: "central-commutator-kernel".into(), value: kernel_rule });
        }
        TwoGroupKind::Semidihedral => {
            pred.value = Some(kernel_rule);
            pred.branch = Branch::Semidihedral;
            pred.alternatives.push(Alternative { rule: "index-p".into(), value: index_p });
        }
        TwoGroupKind::Other => unreachable!(),
    }
    pred.alternatives.push(Alternative { rule: "central-commutator-literal".into(), value: literal_rule });
    Ok(pred)
}

/// Per-prime comparison of the exponent's `p`-part with the exponent of a
/// Sylow `p`-subgroup taken as a group in its own right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SylowEntry {
    pub prime: u64,
    pub exponent_p_part: u64,
    pub sylow_order: usize,
    pub sylow_exponent: u64,
    pub matches: bool,
}

/// The family restricted to a subgroup `P`, indexed by `P`'s own lattice.
fn restrict_family(
    lattice: &SubgroupLattice,
    family: &Family,
    sub_lattice: &SubgroupLattice,
    back: &[usize],
) -> Family {
    match family {
        Family::AllCyclic => Family::AllCyclic,
        Family::ExplicitClasses(_) => Family::ExplicitClasses(
            sub_lattice
                .classes()
                .iter()
                .enumerate()
                .filter(|(_, c)| {
                    let image: ElemSet = c.representative.elements().map(|x| back[x]).collect();
                    lattice.class_of(&image).is_some_and(|k| family.contains(lattice, k))
                })
                .map(|(i, _)| i)
                .collect(),
        ),
    }
}

pub fn sylow_reduction_report(group: &GroupTable, lattice: &SubgroupLattice, family: &Family) -> Result<Vec<SylowEntry>> {
    let exponent = artin_exponent_congruence(group, lattice, family)?;
    sylow_entries(group, lattice, family, exponent)
}

fn sylow_entries(group: &GroupTable, lattice: &SubgroupLattice, family: &Family, exponent: u64) -> Result<Vec<SylowEntry>> {
    let n = group.order() as u64;
    let mut out = Vec::new();
    for (p, _) in factorize(n) {
        let sylow_order = p_part(n, p) as usize;
        let class = lattice
            .classes()
            .iter()
            .find(|c| c.order() == sylow_order)
            .ok_or_else(|| Error::Precondition("no Sylow subgroup in lattice".into()))?;
        let (sub, back) = group.induced(&class.representative.members)?;
        let sub_lattice = enumerate_subgroups(&sub)?;
        let sub_family = restrict_family(lattice, family, &sub_lattice, &back);
        let sylow_exponent = artin_exponent_congruence(&sub, &sub_lattice, &sub_family)?;
        let exponent_p_part = p_part(exponent, p);
        out.push(SylowEntry { prime: p, exponent_p_part, sylow_order, sylow_exponent, matches: exponent_p_part == sylow_exponent });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Both,
    Congruence,
    Marks,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    pub method: Method,
    /// Keep every congruence pair in the report, not only the binding ones.
    pub audit: bool,
    pub central_reduction: bool,
    pub sylow: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimePart {
    pub prime: u64,
    pub part: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentReport {
    pub schema: u32,
    pub group: String,
    pub order: usize,
    pub family: String,
    pub exponent_congruence: Option<u64>,
    pub exponent_marks: Option<u64>,
    pub methods_agree: bool,
    pub divides_order: bool,
    pub predictor: Prediction,
    pub per_prime: Vec<PrimePart>,
    pub binding_pairs: Vec<CongruencePair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<CongruencePair>>,
    pub sylow: Vec<SylowEntry>,
}

impl ExponentReport {
    /// The agreed exponent, or the single one computed.
    pub fn exponent(&self) -> Option<u64> {
        match (self.exponent_congruence, self.exponent_marks) {
            (Some(a), Some(b)) if a == b => Some(a),
            (Some(_), Some(_)) => None,
            (a, b) => a.or(b),
        }
    }
}

/// Pairs whose constraint reaches the full `p`-part of the exponent.
pub fn binding_pairs(pairs: &[CongruencePair], exponent: u64) -> Vec<CongruencePair> {
    pairs.iter().filter(|p| p.constraint > 1 && p.constraint == p_part(exponent, p.prime)).cloned().collect()
}

pub fn exponent_report(
    label: &str,
    group: &GroupTable,
    lattice: &SubgroupLattice,
    family: &Family,
    opts: ReportOptions,
) -> Result<ExponentReport> {
    family.validate(lattice)?;
    let order = group.order();
    let (congruence, pairs) = if opts.method != Method::Marks {
        let system = CongruenceSystem::new(group, lattice, CongruenceOptions { central_reduction: opts.central_reduction })?;
        let pairs = system.pairs(lattice, family)?;
        (Some(exponent_from_pairs(&pairs)), pairs)
    } else {
        (None, vec![])
    };
    let marks = if opts.method != Method::Congruence {
        let table = build_mark_table(group, lattice);
        Some(artin_exponent_marks(group, lattice, &table, family)?)
    } else {
        None
    };
    let methods_agree = match (congruence, marks) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    let exponent = congruence.or(marks).expect("at least one method runs");
    let per_prime = factorize(exponent).into_iter().map(|(p, k)| PrimePart { prime: p, part: p.pow(k) }).collect();
    let sylow = if opts.sylow { sylow_entries(group, lattice, family, exponent)? } else { vec![] };
    Ok(ExponentReport {
        schema: 1,
        group: label.to_string(),
        order,
        family: family.to_string(),
        exponent_congruence: congruence,
        exponent_marks: marks,
        methods_agree,
        divides_order: congruence.into_iter().chain(marks).all(|a| (order as u64).is_multiple_of(a)),
        predictor: closed_form_predictor(group, lattice)?,
        per_prime,
        binding_pairs: binding_pairs(&pairs, exponent),
        pairs: opts.audit.then_some(pairs),
        sylow,
    })
}
